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


/*
 * ncarith C interface.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an ncarith_status;
 * on failure the message is available from ncarith_last_error() on the same
 * context (or ncarith_global_error() for context-free calls) until the next
 * call on that context.
 *
 * Strings returned by accessor functions stay valid until the owning handle
 * is freed.
 */
#ifndef NCARITH_NCARITH_H_
#define NCARITH_NCARITH_H_

#include <stddef.h>

#if defined(_WIN32)
#define NCARITH_API __declspec(dllexport)
#else
#define NCARITH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncarith_status {
  NCARITH_OK = 0,
  NCARITH_E_DOMAIN = 2,    /* precondition violated, bad input, parse error */
  NCARITH_E_PRECISION = 3, /* precision insufficient or resource cap hit */
  NCARITH_E_USAGE = 64,    /* unknown command or option */
  NCARITH_E_INTERNAL = 70, /* contract violation or unexpected failure */
  NCARITH_E_ARGUMENT = 71  /* null pointer or invalid handle */
} ncarith_status;

typedef struct ncarith_context ncarith_context;
typedef struct ncarith_result ncarith_result;
typedef struct ncarith_surd ncarith_surd;

NCARITH_API const char* ncarith_version(void);
NCARITH_API const char* ncarith_status_name(ncarith_status status);

NCARITH_API ncarith_context* ncarith_context_new(void);
NCARITH_API void ncarith_context_free(ncarith_context* ctx);
NCARITH_API const char* ncarith_last_error(const ncarith_context* ctx);

/* Number of commands and the name / one-line summary of command i. */
NCARITH_API size_t ncarith_command_count(void);
NCARITH_API const char* ncarith_command_name(size_t i);
NCARITH_API const char* ncarith_command_summary(size_t i);
/* Options of command i: name, default ("" if none) and help text. */
NCARITH_API size_t ncarith_command_option_count(size_t i);
NCARITH_API const char* ncarith_command_option_name(size_t i, size_t j);
NCARITH_API const char* ncarith_command_option_default(size_t i, size_t j);
NCARITH_API const char* ncarith_command_option_help(size_t i, size_t j);

/*
 * Runs `command` with `options_json`, a JSON object mapping option names to
 * strings or numbers (NULL or "" for all defaults). On success *out receives
 * a result handle.
 */
NCARITH_API ncarith_status ncarith_run(ncarith_context* ctx, const char* command, const char* options_json,
                                       ncarith_result** out);
NCARITH_API const char* ncarith_result_json(const ncarith_result* result);
NCARITH_API const char* ncarith_result_table(const ncarith_result* result);
NCARITH_API void ncarith_result_free(ncarith_result* result);

/* Exact quadratic surds (P + sqrt(D)) / Q. */
NCARITH_API ncarith_status ncarith_surd_parse(ncarith_context* ctx, const char* text, ncarith_surd** out);
NCARITH_API const char* ncarith_surd_string(const ncarith_surd* surd);
/* Continued fraction in "[a0; a1, (period: ...)]" form. */
NCARITH_API const char* ncarith_surd_continued_fraction(const ncarith_surd* surd);
NCARITH_API ncarith_status ncarith_surd_add(ncarith_context* ctx, const ncarith_surd* x, const ncarith_surd* y,
                                            ncarith_surd** out);
NCARITH_API ncarith_status ncarith_surd_mul(ncarith_context* ctx, const ncarith_surd* x, const ncarith_surd* y,
                                            ncarith_surd** out);
NCARITH_API void ncarith_surd_free(ncarith_surd* surd);

#ifdef __cplusplus
}
#endif

#endif /* NCARITH_NCARITH_H_ */
