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

#include "rookgon/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "rookgon/error.hpp"
#include "rookgon/hash.hpp"

namespace rookgon {

ReportCache::ReportCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create cache directory " + directory_.string());
}

std::optional<ReportCache> ReportCache::Open(const std::optional<std::string>& directory) {
  if (directory && !directory->empty()) return ReportCache(*directory);
  if (const char* env = std::getenv(kCacheEnvironmentVariable); env && *env) {
    return ReportCache(env);
  }
  return std::nullopt;
}

std::string ReportCache::RequestKey(const std::string& command, const Json& request) {
  Json canonical = request;
  if (canonical.is_object()) {
    for (const char* field : {"threads", "cache_dir", "output"}) canonical.erase(field);
  }
  return Sha256Hex(command + "\n" + canonical.dump());
}

std::filesystem::path ReportCache::EntryPath(const std::string& key) const {
  return directory_ / (key + ".json");
}

std::optional<std::string> ReportCache::Lookup(const std::string& key,
                                               std::string* warning) const {
  std::ifstream in(EntryPath(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  try {
    const Json entry = Json::parse(text.str());
    const std::string report = entry.at("report").get<std::string>();
    if (entry.at("key").get<std::string>() == key &&
        entry.at("sha256").get<std::string>() == Sha256Hex(report)) {
      return report;
    }
  } catch (const nlohmann::json::exception&) {
  }
  if (warning) *warning = "corrupt cache entry " + EntryPath(key).string() + "; recomputing";
  return std::nullopt;
}

void ReportCache::Store(const std::string& key, const std::string& report) const {
  const Json entry{{"key", key}, {"sha256", Sha256Hex(report)}, {"report", report}};
  const std::filesystem::path path = EntryPath(key);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write cache entry " + tmp.string());
    out << entry.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot move cache entry into place: " + ec.message());
}

}  // namespace rookgon
