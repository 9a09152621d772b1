// Copyright 2026 The liedyn Authors
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

#ifndef LIEDYN_LIEDYN_H
#define LIEDYN_LIEDYN_H

/* C interface to liedyn. Strings returned through `char**` are owned by
 * the caller and released with liedyn_string_free. On failure the
 * functions return a nonzero status and liedyn_last_error() describes it
 * (thread-local, valid until the next call on the same thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LIEDYN_BUILDING_LIBRARY)
#    define LIEDYN_API __declspec(dllexport)
#  else
#    define LIEDYN_API __declspec(dllimport)
#  endif
#else
#  define LIEDYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liedyn_status {
    LIEDYN_OK = 0,
    LIEDYN_ERR_SUITE_FAILED = 1, /* the report is still produced */
    LIEDYN_ERR_USAGE = 2,
    LIEDYN_ERR_PARSE = 3,
    LIEDYN_ERR_DOMAIN = 4,
    LIEDYN_ERR_RING = 5,
    LIEDYN_ERR_SPACE = 6,
    LIEDYN_ERR_IO = 7,
    LIEDYN_ERR_INTERNAL = 8
} liedyn_status;

typedef enum liedyn_presentation {
    LIEDYN_PRESENTATION_AUTO = 0,
    LIEDYN_PRESENTATION_CROSSED = 1,
    LIEDYN_PRESENTATION_ROOT = 2,
    LIEDYN_PRESENTATION_CHAR = 3
} liedyn_presentation;

typedef enum liedyn_format {
    LIEDYN_FORMAT_TEXT = 0,
    LIEDYN_FORMAT_JSON = 1
} liedyn_format;

typedef struct liedyn_space liedyn_space;
typedef struct liedyn_element liedyn_element;

LIEDYN_API const char* liedyn_version(void);
LIEDYN_API const char* liedyn_last_error(void);
/* Process exit code for a status: 0, 1 (suite failure), 2 (usage or
 * parse error) or 3 (domain and I/O errors). */
LIEDYN_API int liedyn_status_exit_code(liedyn_status status);
LIEDYN_API void liedyn_string_free(char* s);

/* `cyclic:N`, `padic:p:n` or `torus:d`. */
LIEDYN_API liedyn_status liedyn_space_new(const char* spec, liedyn_space** out);
LIEDYN_API void liedyn_space_free(liedyn_space* space);
LIEDYN_API liedyn_status liedyn_space_describe(const liedyn_space* space, char** out);

LIEDYN_API liedyn_status liedyn_element_parse(const liedyn_space* space, const char* text,
                                              liedyn_presentation presentation, liedyn_element** out);
LIEDYN_API liedyn_status liedyn_element_bracket(const liedyn_element* a, const liedyn_element* b,
                                                liedyn_element** out);
LIEDYN_API liedyn_status liedyn_element_add(const liedyn_element* a, const liedyn_element* b, liedyn_element** out);
LIEDYN_API liedyn_status liedyn_element_render(const liedyn_element* e, char** out);
LIEDYN_API int liedyn_element_is_zero(const liedyn_element* e);
LIEDYN_API void liedyn_element_free(liedyn_element* e);

LIEDYN_API liedyn_status liedyn_eval(const liedyn_space* space, const char* expr, liedyn_presentation presentation,
                                     liedyn_format format, char** out);
LIEDYN_API liedyn_status liedyn_bracket(const liedyn_space* space, liedyn_presentation presentation, const char* a,
                                        const char* b, liedyn_format format, char** out);

/* Runs a property suite; `report` receives the rendered report whenever
 * the suite ran, including on LIEDYN_ERR_SUITE_FAILED. */
LIEDYN_API liedyn_status liedyn_verify(const liedyn_space* space, const char* suite, uint64_t samples, uint64_t seed,
                                       int window, int color, char** report);
/* NULL-terminated list of suite names; static storage. */
LIEDYN_API const char* const* liedyn_suite_names(void);

LIEDYN_API liedyn_status liedyn_cartan(const liedyn_space* space, liedyn_format format, char** out);
LIEDYN_API liedyn_status liedyn_export(const liedyn_space* space, int grade_bound, int char_bound,
                                       liedyn_presentation presentation, const char* path, uint64_t* records);
LIEDYN_API liedyn_status liedyn_limit(int p, int levels, uint64_t samples, uint64_t seed, int color, char** report);

#ifdef __cplusplus
}
#endif

#endif
