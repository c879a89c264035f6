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

#include <stdio.h>
#include <string.h>

#include "ncarith/ncarith.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int contains(const char* haystack, const char* needle) {
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

int main(void) {
  ncarith_context* ctx = ncarith_context_new();
  ncarith_result* result = NULL;
  ncarith_surd* a = NULL;
  ncarith_surd* b = NULL;
  ncarith_surd* c = NULL;
  size_t i;
  int found_pell = 0;

  EXPECT(ctx != NULL);
  EXPECT(strcmp(ncarith_version(), "0.1.0") == 0);
  EXPECT(ncarith_command_count() == 11);
  for (i = 0; i < ncarith_command_count(); ++i) {
    if (strcmp(ncarith_command_name(i), "pell") == 0) {
      found_pell = 1;
      EXPECT(strcmp(ncarith_command_option_name(i, 0), "D") == 0);
      EXPECT(strcmp(ncarith_command_option_default(i, 0), "5") == 0);
    }
  }
  EXPECT(found_pell);
  EXPECT(ncarith_command_name(99) == NULL);

  EXPECT(ncarith_run(ctx, "pell", "{\"D\": 13}", &result) == NCARITH_OK);
  EXPECT(contains(ncarith_result_json(result), "\"epsilon\": \"(3+sqrt(13))/2\""));
  EXPECT(contains(ncarith_result_table(result), "result.b  1"));
  ncarith_result_free(result);
  result = NULL;

  EXPECT(ncarith_run(ctx, "pell", NULL, &result) == NCARITH_OK);
  EXPECT(contains(ncarith_result_json(result), "\"a\": 1"));
  ncarith_result_free(result);

  EXPECT(ncarith_run(ctx, "pell", "{\"D\": \"12\"}", &result) == NCARITH_E_DOMAIN);
  EXPECT(result == NULL);
  EXPECT(contains(ncarith_last_error(ctx), "squarefree"));
  EXPECT(ncarith_run(ctx, "nope", "", &result) == NCARITH_E_USAGE);
  EXPECT(ncarith_run(ctx, "pell", "{\"E\": 1}", &result) == NCARITH_E_USAGE);
  EXPECT(ncarith_run(ctx, "pell", "{not json", &result) == NCARITH_E_USAGE);
  EXPECT(ncarith_run(ctx, "jinv", "{\"digits\": 30000}", &result) == NCARITH_E_PRECISION);
  EXPECT(ncarith_run(NULL, "pell", "", &result) == NCARITH_E_ARGUMENT);
  EXPECT(ncarith_run(ctx, "pell", "", NULL) == NCARITH_E_ARGUMENT);
  EXPECT(strcmp(ncarith_status_name(NCARITH_E_USAGE), "usage error") == 0);

  EXPECT(ncarith_surd_parse(ctx, "(1+sqrt(5))/2", &a) == NCARITH_OK);
  EXPECT(strcmp(ncarith_surd_string(a), "(1+sqrt(5))/2") == 0);
  EXPECT(strcmp(ncarith_surd_continued_fraction(a), "[1; (period: 1)]") == 0);
  EXPECT(ncarith_surd_parse(ctx, "(1-sqrt(5))/2", &b) == NCARITH_OK);
  EXPECT(ncarith_surd_mul(ctx, a, b, &c) == NCARITH_OK);
  EXPECT(strcmp(ncarith_surd_string(c), "-1") == 0);
  ncarith_surd_free(c);
  EXPECT(ncarith_surd_add(ctx, a, b, &c) == NCARITH_OK);
  EXPECT(strcmp(ncarith_surd_string(c), "1") == 0);
  ncarith_surd_free(c);
  ncarith_surd_free(b);
  EXPECT(ncarith_surd_parse(ctx, "sqrt(2)", &b) == NCARITH_OK);
  EXPECT(ncarith_surd_add(ctx, a, b, &c) == NCARITH_E_DOMAIN);
  EXPECT(c == NULL);
  EXPECT(ncarith_surd_parse(ctx, "sqrt(", &c) == NCARITH_E_DOMAIN);
  ncarith_surd_free(b);
  ncarith_surd_free(a);

  ncarith_context_free(ctx);
  if (failures == 0) printf("capi_test: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
