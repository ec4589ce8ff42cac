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

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hvskit/hvskit.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static char* slurp(const char* name) {
  char path[1024];
  snprintf(path, sizeof path, "%s/%s", HVSKIT_FIXTURES, name);
  FILE* f = fopen(path, "rb");
  if (!f) {
    fprintf(stderr, "cannot open %s\n", path);
    exit(2);
  }
  fseek(f, 0, SEEK_END);
  long len = ftell(f);
  fseek(f, 0, SEEK_SET);
  char* buf = malloc((size_t)len + 1);
  size_t got = fread(buf, 1, (size_t)len, f);
  buf[got] = '\0';
  fclose(f);
  return buf;
}

static void test_blocks_and_spectrum(void) {
  char* text = slurp("w11plus.json");
  hvsk_report* r = NULL;
  EXPECT(hvsk_spectrum_from_blocks(text, &r) == HVSK_OK);
  EXPECT(strcmp(hvsk_report_text(r), "{1}\n") == 0);
  EXPECT(strstr(hvsk_report_json(r), "\"spectrum\"") != NULL);
  hvsk_report_free(r);

  hvsk_hvs* v = NULL;
  EXPECT(hvsk_hvs_from_blocks(text, 7, &v) == HVSK_OK);
  EXPECT(hvsk_hvs_dim(v) == 1);
  EXPECT(hvsk_validate(v, &r) == HVSK_OK);
  EXPECT(hvsk_report_passed(r) == 1);
  hvsk_report_free(r);
  r = NULL;
  EXPECT(hvsk_spectrum_from_signatures(v, 1, 0, &r) == HVSK_OK);
  if (!r) fprintf(stderr, "  %s\n", hvsk_last_error());
  EXPECT(r && strcmp(hvsk_report_text(r), "{1}\n") == 0);
  hvsk_report_free(r);
  hvsk_hvs_free(v);
  free(text);
}

static void test_validate_nonsplit(void) {
  char* text = slurp("nonsplit.json");
  hvsk_hvs* v = NULL;
  hvsk_report* r = NULL;
  EXPECT(hvsk_hvs_from_json(text, &v) == HVSK_OK);
  EXPECT(hvsk_validate(v, &r) == HVSK_OK);
  EXPECT(strncmp(hvsk_report_text(r), "HVS axioms: pass; simple: no (V singular)", 41) == 0);
  hvsk_report_free(r);
  EXPECT(hvsk_jordan_data(v, &r) == HVSK_OK);
  hvsk_report_free(r);
  hvsk_hvs_free(v);
  free(text);
}

static void test_fibred_cycle(void) {
  char* text = slurp("fibred_mixed.json");
  hvsk_fibred* fl = NULL;
  hvsk_fractured* fd = NULL;
  hvsk_fibred* back = NULL;
  hvsk_report* r = NULL;
  EXPECT(hvsk_fibred_from_json(text, &fl) == HVSK_OK);
  EXPECT(hvsk_twist(fl, &r) == HVSK_OK);
  hvsk_report_free(r);
  EXPECT(hvsk_extract(fl, 0, &fd) == HVSK_OK);
  EXPECT(hvsk_seifert_checks(fd, &r) == HVSK_OK);
  EXPECT(hvsk_report_passed(r) == 1);
  hvsk_report_free(r);
  EXPECT(hvsk_fractured_spectrum(fd, &r) == HVSK_OK);
  hvsk_report_free(r);
  EXPECT(hvsk_mend(fd, &back) == HVSK_OK);
  EXPECT(hvsk_fibred_to_json(back, &r) == HVSK_OK);
  EXPECT(strstr(hvsk_report_json(r), "\"Var\"") != NULL);
  hvsk_report_free(r);
  hvsk_fibred_free(back);
  hvsk_fractured_free(fd);
  hvsk_fibred_free(fl);
  free(text);

  text = slurp("fibred_v21minus.json");
  EXPECT(hvsk_fibred_from_json(text, &fl) == HVSK_OK);
  EXPECT(hvsk_twist(fl, &r) == HVSK_VIOLATED);
  EXPECT(hvsk_report_passed(r) == 0);
  hvsk_report_free(r);
  hvsk_fibred_free(fl);
  free(text);
}

static void test_checks(void) {
  static const struct {
    const char* file;
    hvsk_status (*fn)(const char*, hvsk_report**);
    hvsk_status want;
  } cases[] = {
      {"plumbing_cycle.json", hvsk_plumbing, HVSK_OK},
      {"linking_n2.json", hvsk_linking, HVSK_OK},
      {"murasugi_product.json", hvsk_murasugi, HVSK_OK},
      {"murasugi_violated.json", hvsk_murasugi, HVSK_VIOLATED},
      {"scenario_trivial.json", hvsk_semicont, HVSK_OK},
      {"scenario_two_gap.json", hvsk_semicont, HVSK_VIOLATED},
      {"scenario_trivial.json", hvsk_semicont_mhs, HVSK_OK},
  };
  for (size_t i = 0; i < sizeof cases / sizeof cases[0]; ++i) {
    char* text = slurp(cases[i].file);
    hvsk_report* r = NULL;
    hvsk_status st = cases[i].fn(text, &r);
    if (st != cases[i].want) fprintf(stderr, "%s: status %d\n", cases[i].file, (int)st);
    EXPECT(st == cases[i].want);
    EXPECT(r != NULL);
    hvsk_report_free(r);
    free(text);
  }
}

static void test_errors(void) {
  hvsk_hvs* v = NULL;
  hvsk_report* r = NULL;
  EXPECT(hvsk_hvs_from_json("{", &v) == HVSK_INPUT_ERROR);
  EXPECT(v == NULL);
  EXPECT(strstr(hvsk_last_error(), "malformed JSON") != NULL);
  EXPECT(hvsk_hvs_from_json("{\"epsilon\": -1, \"b\": [[0.5]], \"h\": [[1]], \"V\": [[0]]}", &v) ==
         HVSK_INPUT_ERROR);
  EXPECT(strncmp(hvsk_last_error(), "/b/0/0", 6) == 0);
  EXPECT(hvsk_validate(NULL, &r) == HVSK_INPUT_ERROR);
  EXPECT(hvsk_spectrum_from_blocks(NULL, &r) == HVSK_INPUT_ERROR);

  char* text = slurp("fractured_positive_bnd.json");
  hvsk_fractured* fd = NULL;
  hvsk_fibred* fl = NULL;
  EXPECT(hvsk_fractured_from_json(text, &fd) == HVSK_OK);
  EXPECT(hvsk_seifert_checks(fd, &r) == HVSK_VIOLATED);
  hvsk_report_free(r);
  EXPECT(hvsk_mend(fd, &fl) == HVSK_INPUT_ERROR);
  hvsk_fractured_free(fd);
  free(text);

  hvsk_report_free(NULL);
  hvsk_hvs_free(NULL);
  EXPECT(strlen(hvsk_version()) > 0);
}

int main(void) {
  test_blocks_and_spectrum();
  test_validate_nonsplit();
  test_fibred_cycle();
  test_checks();
  test_errors();
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
