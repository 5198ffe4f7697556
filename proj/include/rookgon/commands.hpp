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

#ifndef ROOKGON_COMMANDS_HPP_
#define ROOKGON_COMMANDS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "rookgon/json_io.hpp"

namespace rookgon {

struct CommandResult {
  std::string report;  // JSON (or CSV when requested), newline terminated
  int exit_code = 0;   // 0 success, 1 a verified claim failed
};

using LogFn = std::function<void(const std::string&)>;

// Runs one command described by a JSON request. Commands:
//   graph.gen, reduce, rank, winnable, gonality, scramble.order,
//   scramble.avoidance, verify, table.
// Usage and input problems throw Error. Finished reports are served from and
// stored into the report cache when one is configured ("cache_dir" or the
// environment) and timing was not requested.
CommandResult RunCommand(const std::string& command, const Json& request,
                         const LogFn& log = {});

std::vector<std::string> CommandNames();

}  // namespace rookgon

#endif  // ROOKGON_COMMANDS_HPP_
