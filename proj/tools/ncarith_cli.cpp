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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncarith/ncarith.h"

namespace {

constexpr int kExitUsage = 64;

struct Subcommand {
  CLI::App* app = nullptr;
  std::string name;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncarith: exact and arbitrary-precision computational algebra"};
  app.set_version_flag("--version", std::string(ncarith_version()));
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "output mode")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--output", output, "write the document to this file instead of standard output");

  std::vector<std::unique_ptr<Subcommand>> subs;
  for (size_t i = 0; i < ncarith_command_count(); ++i) {
    auto sub = std::make_unique<Subcommand>();
    sub->name = ncarith_command_name(i);
    sub->app = app.add_subcommand(sub->name, ncarith_command_summary(i));
    for (size_t j = 0; j < ncarith_command_option_count(i); ++j) {
      const std::string name = ncarith_command_option_name(i, j);
      const std::string fallback = ncarith_command_option_default(i, j);
      auto* opt = sub->app->add_option("--" + name, sub->values[name], ncarith_command_option_help(i, j));
      if (!fallback.empty()) opt->default_str(fallback);
      sub->options[name] = opt;
    }
    subs.push_back(std::move(sub));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  const Subcommand* chosen = nullptr;
  for (const auto& s : subs)
    if (s->app->parsed()) chosen = s.get();
  if (chosen == nullptr) {
    std::cerr << app.help();
    return kExitUsage;
  }

  nlohmann::ordered_json options = nlohmann::ordered_json::object();
  for (const auto& [name, opt] : chosen->options)
    if (opt->count() > 0) options[name] = chosen->values.at(name);

  std::unique_ptr<ncarith_context, decltype(&ncarith_context_free)> ctx(ncarith_context_new(), ncarith_context_free);
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return 3;
  }
  ncarith_result* raw = nullptr;
  const ncarith_status status = ncarith_run(ctx.get(), chosen->name.c_str(), options.dump().c_str(), &raw);
  std::unique_ptr<ncarith_result, decltype(&ncarith_result_free)> result(raw, ncarith_result_free);
  if (status != NCARITH_OK) {
    std::cerr << "error (" << ncarith_status_name(status) << "): " << ncarith_last_error(ctx.get()) << "\n";
    if (status == NCARITH_E_USAGE) std::cerr << chosen->app->help();
    return static_cast<int>(status);
  }

  const char* text = format == "json" ? ncarith_result_json(result.get()) : ncarith_result_table(result.get());
  if (output.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!(file << text)) {
      std::cerr << "error: cannot write " << output << "\n";
      return 74;
    }
  }
  return 0;
}
