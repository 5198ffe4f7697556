// Copyright 2026 The rookgon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROOKGON_CACHE_HPP_
#define ROOKGON_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "rookgon/json_io.hpp"

namespace rookgon {

inline constexpr const char* kCacheEnvironmentVariable = "ROOKGON_CACHE";

// Content-addressed store of finished reports, one file per request digest.
// Entries carry a checksum of the report; a damaged entry reads as a miss.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path directory);

  // Explicit directory if given, else $ROOKGON_CACHE, else no cache.
  static std::optional<ReportCache> Open(const std::optional<std::string>& directory);

  // SHA-256 of the canonical request with execution-only fields removed
  // (thread count, cache location, output path).
  static std::string RequestKey(const std::string& command, const Json& request);

  // nullopt on a miss. `warning` is set when an entry existed but was corrupt.
  std::optional<std::string> Lookup(const std::string& key, std::string* warning = nullptr) const;
  void Store(const std::string& key, const std::string& report) const;

  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path EntryPath(const std::string& key) const;

  std::filesystem::path directory_;
};

}  // namespace rookgon

#endif  // ROOKGON_CACHE_HPP_
