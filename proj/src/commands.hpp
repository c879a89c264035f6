// Copyright 2026 The ncarith Authors
//
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

// Subcommand layer shared by the C API and, through it, the command-line
// tool. Each command takes a flat JSON object of option strings and returns
// an ordered JSON document: {"command", "version", "config", "result"}.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ncarith::commands {

// Unknown command or option.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OptionInfo {
  std::string name;
  std::string fallback;  // empty: optional with no default
  std::string help;
};

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<OptionInfo> options;
};

const std::vector<CommandInfo>& catalog();

nlohmann::ordered_json run(std::string_view name, const nlohmann::json& options);

// One "path  value" line per leaf, in document order.
std::string render_table(const nlohmann::ordered_json& doc);

}  // namespace ncarith::commands
