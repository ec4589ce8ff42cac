// Copyright 2026 The hvskit Authors
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

/* C interface to hvskit. All inputs are UTF-8 JSON documents using the
 * string scalar encoding ("3/4", "1-2*i"). Every call returns a status;
 * on HVSK_INPUT_ERROR or HVSK_INTERNAL the message is available from
 * hvsk_last_error() on the calling thread until the next call. */
#ifndef HVSKIT_H
#define HVSKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HVSK_API __declspec(dllexport)
#else
#define HVSK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hvsk_status {
  HVSK_OK = 0,
  HVSK_VIOLATED = 1,    /* computed fine, a checked property failed */
  HVSK_INPUT_ERROR = 2, /* malformed input or precondition failure */
  HVSK_INTERNAL = 3
} hvsk_status;

typedef struct hvsk_hvs hvsk_hvs;
typedef struct hvsk_fibred hvsk_fibred;
typedef struct hvsk_fractured hvsk_fractured;
typedef struct hvsk_report hvsk_report;

HVSK_API const char* hvsk_version(void);
HVSK_API const char* hvsk_last_error(void);

/* reports: canonical JSON (sorted keys) and a short human-readable text */
HVSK_API const char* hvsk_report_json(const hvsk_report* r);
HVSK_API const char* hvsk_report_text(const hvsk_report* r);
HVSK_API int hvsk_report_passed(const hvsk_report* r);
HVSK_API void hvsk_report_free(hvsk_report* r);

/* hermitian variation structures */
HVSK_API hvsk_status hvsk_hvs_from_json(const char* json, hvsk_hvs** out);
HVSK_API hvsk_status hvsk_hvs_from_blocks(const char* blocks_json, uint64_t seed, hvsk_hvs** out);
HVSK_API size_t hvsk_hvs_dim(const hvsk_hvs* v);
HVSK_API hvsk_status hvsk_hvs_to_json(const hvsk_hvs* v, hvsk_report** out);
HVSK_API void hvsk_hvs_free(hvsk_hvs* v);

HVSK_API hvsk_status hvsk_validate(const hvsk_hvs* v, hvsk_report** out);
HVSK_API hvsk_status hvsk_signature_profile(const hvsk_hvs* v, unsigned density, hvsk_report** out);
HVSK_API hvsk_status hvsk_spectrum_from_signatures(const hvsk_hvs* v, unsigned m1, unsigned m2,
                                                   hvsk_report** out);
HVSK_API hvsk_status hvsk_spectrum_from_blocks(const char* blocks_json, hvsk_report** out);
HVSK_API hvsk_status hvsk_jordan_data(const hvsk_hvs* v, hvsk_report** out);

/* fibred links and fractured Seifert data */
HVSK_API hvsk_status hvsk_fibred_from_json(const char* json, hvsk_fibred** out);
HVSK_API hvsk_status hvsk_fibred_to_json(const hvsk_fibred* fl, hvsk_report** out);
HVSK_API void hvsk_fibred_free(hvsk_fibred* fl);

HVSK_API hvsk_status hvsk_fractured_from_json(const char* json, hvsk_fractured** out);
HVSK_API hvsk_status hvsk_fractured_to_json(const hvsk_fractured* fd, hvsk_report** out);
HVSK_API void hvsk_fractured_free(hvsk_fractured* fd);

HVSK_API hvsk_status hvsk_extract(const hvsk_fibred* fl, uint64_t seed, hvsk_fractured** out);
HVSK_API hvsk_status hvsk_mend(const hvsk_fractured* fd, hvsk_fibred** out);
HVSK_API hvsk_status hvsk_seifert_checks(const hvsk_fractured* fd, hvsk_report** out);
HVSK_API hvsk_status hvsk_fractured_spectrum(const hvsk_fractured* fd, hvsk_report** out);
HVSK_API hvsk_status hvsk_twist(const hvsk_fibred* fl, hvsk_report** out);

/* JSON-in checks */
HVSK_API hvsk_status hvsk_plumbing(const char* json, hvsk_report** out);
HVSK_API hvsk_status hvsk_linking(const char* json, hvsk_report** out);
HVSK_API hvsk_status hvsk_murasugi(const char* json, hvsk_report** out);
HVSK_API hvsk_status hvsk_semicont(const char* json, hvsk_report** out);
HVSK_API hvsk_status hvsk_semicont_mhs(const char* json, hvsk_report** out);

#ifdef __cplusplus
}
#endif

#endif /* HVSKIT_H */
