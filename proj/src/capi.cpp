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

#include "ncarith/ncarith.h"

#include <exception>
#include <new>
#include <string>

#include "commands.hpp"
#include "ncarith/errors.hpp"
#include "ncarith/nc_torus.hpp"

struct ncarith_context {
  std::string error;
};

struct ncarith_result {
  std::string json;
  std::string table;
};

struct ncarith_surd {
  ncarith::nc_torus::QuadraticSurd value;
  std::string text;
  std::string cf;
};

namespace {

using ncarith::commands::catalog;

template <typename F>
ncarith_status guarded(ncarith_context* ctx, F&& body) {
  if (ctx == nullptr) return NCARITH_E_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return NCARITH_OK;
  } catch (const ncarith::commands::UsageError& e) {
    ctx->error = e.what();
    return NCARITH_E_USAGE;
  } catch (const ncarith::DomainError& e) {
    ctx->error = e.what();
    return NCARITH_E_DOMAIN;
  } catch (const ncarith::PrecisionError& e) {
    ctx->error = e.what();
    return NCARITH_E_PRECISION;
  } catch (const ncarith::ResourceError& e) {
    ctx->error = e.what();
    return NCARITH_E_PRECISION;
  } catch (const nlohmann::json::exception& e) {
    ctx->error = std::string("invalid options JSON: ") + e.what();
    return NCARITH_E_USAGE;
  } catch (const ncarith::ContractViolation& e) {
    ctx->error = std::string("contract violation: ") + e.what();
    return NCARITH_E_INTERNAL;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return NCARITH_E_PRECISION;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return NCARITH_E_INTERNAL;
  }
}

ncarith_surd* make_surd(const ncarith::nc_torus::QuadraticSurd& v) {
  auto* s = new ncarith_surd{v, ncarith::nc_torus::to_string(v), {}};
  s->cf = ncarith::nc_torus::to_string(ncarith::nc_torus::cf_expand(v));
  return s;
}

const ncarith::commands::OptionInfo* option(size_t i, size_t j) {
  if (i >= catalog().size() || j >= catalog()[i].options.size()) return nullptr;
  return &catalog()[i].options[j];
}

}  // namespace

extern "C" {

const char* ncarith_version(void) { return "0.1.0"; }

const char* ncarith_status_name(ncarith_status status) {
  switch (status) {
    case NCARITH_OK: return "ok";
    case NCARITH_E_DOMAIN: return "domain error";
    case NCARITH_E_PRECISION: return "precision or resource error";
    case NCARITH_E_USAGE: return "usage error";
    case NCARITH_E_INTERNAL: return "internal error";
    case NCARITH_E_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

ncarith_context* ncarith_context_new(void) { return new (std::nothrow) ncarith_context{}; }

void ncarith_context_free(ncarith_context* ctx) { delete ctx; }

const char* ncarith_last_error(const ncarith_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

size_t ncarith_command_count(void) { return catalog().size(); }

const char* ncarith_command_name(size_t i) { return i < catalog().size() ? catalog()[i].name.c_str() : nullptr; }

const char* ncarith_command_summary(size_t i) {
  return i < catalog().size() ? catalog()[i].summary.c_str() : nullptr;
}

size_t ncarith_command_option_count(size_t i) { return i < catalog().size() ? catalog()[i].options.size() : 0; }

const char* ncarith_command_option_name(size_t i, size_t j) {
  const auto* o = option(i, j);
  return o ? o->name.c_str() : nullptr;
}

const char* ncarith_command_option_default(size_t i, size_t j) {
  const auto* o = option(i, j);
  return o ? o->fallback.c_str() : nullptr;
}

const char* ncarith_command_option_help(size_t i, size_t j) {
  const auto* o = option(i, j);
  return o ? o->help.c_str() : nullptr;
}

ncarith_status ncarith_run(ncarith_context* ctx, const char* command, const char* options_json,
                           ncarith_result** out) {
  if (out == nullptr || command == nullptr) return NCARITH_E_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] {
    const std::string text = options_json ? options_json : "";
    const nlohmann::json options = text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
    const auto doc = ncarith::commands::run(command, options);
    *out = new ncarith_result{doc.dump(2) + "\n", ncarith::commands::render_table(doc)};
  });
}

const char* ncarith_result_json(const ncarith_result* result) { return result ? result->json.c_str() : nullptr; }

const char* ncarith_result_table(const ncarith_result* result) { return result ? result->table.c_str() : nullptr; }

void ncarith_result_free(ncarith_result* result) { delete result; }

ncarith_status ncarith_surd_parse(ncarith_context* ctx, const char* text, ncarith_surd** out) {
  if (out == nullptr || text == nullptr) return NCARITH_E_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] { *out = make_surd(ncarith::nc_torus::QuadraticSurd::parse(text)); });
}

const char* ncarith_surd_string(const ncarith_surd* surd) { return surd ? surd->text.c_str() : nullptr; }

const char* ncarith_surd_continued_fraction(const ncarith_surd* surd) { return surd ? surd->cf.c_str() : nullptr; }

ncarith_status ncarith_surd_add(ncarith_context* ctx, const ncarith_surd* x, const ncarith_surd* y,
                                ncarith_surd** out) {
  if (out == nullptr || x == nullptr || y == nullptr) return NCARITH_E_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] { *out = make_surd(x->value + y->value); });
}

ncarith_status ncarith_surd_mul(ncarith_context* ctx, const ncarith_surd* x, const ncarith_surd* y,
                                ncarith_surd** out) {
  if (out == nullptr || x == nullptr || y == nullptr) return NCARITH_E_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] { *out = make_surd(x->value * y->value); });
}

void ncarith_surd_free(ncarith_surd* surd) { delete surd; }

}  // extern "C"
