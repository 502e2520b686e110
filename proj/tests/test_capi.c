/* SPDX-License-Identifier: Apache-2.0 */
/* Exercises the C interface from plain C. */
#include "pseudoarr/pseudoarr.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static pa_arrangement *build(const char *family, const char *key, const char *value)
{
  pa_arrangement *arr = NULL;
  const char *keys[1] = {key};
  const char *values[1] = {value};
  pa_status s = pa_construct(family, keys, values, key ? 1 : 0, &arr);
  EXPECT(s == PA_OK);
  return arr;
}

static void test_round_trip(void)
{
  pa_arrangement *a = build("chain", "n", "4");
  char *text = NULL;
  EXPECT(pa_arrangement_serialize(a, &text) == PA_OK);
  pa_arrangement *b = NULL;
  EXPECT(pa_arrangement_parse(text, &b) == PA_OK);
  char *again = NULL;
  EXPECT(pa_arrangement_serialize(b, &again) == PA_OK);
  EXPECT(strcmp(text, again) == 0);
  EXPECT(pa_arrangement_size(b) == 4);
  EXPECT(pa_arrangement_is_complete(b) == 0);
  char *meta = NULL;
  EXPECT(pa_arrangement_metadata(b, &meta) == PA_OK);
  EXPECT(strstr(meta, "\"family\":\"chain\"") != NULL);
  pa_string_free(meta);
  pa_string_free(again);
  pa_string_free(text);
  pa_arrangement_free(b);
  pa_arrangement_free(a);
}

static void test_errors(void)
{
  pa_arrangement *a = NULL;
  EXPECT(pa_arrangement_parse("not json", &a) == PA_ERR_PARSE);
  EXPECT(a == NULL);
  EXPECT(strlen(pa_last_error()) > 0);
  EXPECT(strcmp(pa_status_name(PA_ERR_PARSE), "ParseError") == 0);
  EXPECT(strcmp(pa_status_name(PA_ERR_NULL_ARGUMENT), "NullArgument") == 0);
  EXPECT(pa_arrangement_parse(NULL, &a) == PA_ERR_NULL_ARGUMENT);
  EXPECT(pa_arrangement_load("/nonexistent/file.json", &a) == PA_ERR_IO);
  EXPECT(pa_construct("nope", NULL, NULL, 0, &a) == PA_ERR_UNKNOWN_FAMILY);
  EXPECT(pa_construct("chain", NULL, NULL, 0, &a) == PA_ERR_INVALID_ARGUMENT);

  const char *crossing4 =
      "{\"format\": \"pseudoarr-arrangement\", \"version\": 1, \"curves\": ["
      "{\"id\": \"wide\", \"ring\": [[\"-2\",\"-1\"],[\"2\",\"-1\"],[\"2\",\"1\"],[\"-2\",\"1\"]]},"
      "{\"id\": \"tall\", \"ring\": [[\"-1\",\"-2\"],[\"1\",\"-2\"],[\"1\",\"2\"],[\"-1\",\"2\"]]}]}";
  EXPECT(pa_arrangement_parse(crossing4, &a) == PA_ERR_TOO_MANY_INTERSECTIONS);
  int valid = 1;
  char *listing = NULL;
  EXPECT(pa_validate_text(crossing4, &valid, &listing) == PA_OK);
  EXPECT(valid == 0);
  EXPECT(strstr(listing, "wide") != NULL && strstr(listing, "tall") != NULL);
  pa_string_free(listing);
}

static void test_analysis(void)
{
  pa_arrangement *a = build("sharp4n6", "n", "5");
  char *doc = NULL;
  int violated = -1;
  const long ks[2] = {1, 2};
  EXPECT(pa_analyze(a, ks, 2, &doc, &violated) == PA_OK);
  EXPECT(violated == 0);
  EXPECT(strstr(doc, "\"weight_vector\"") != NULL);
  char *doc2 = NULL;
  EXPECT(pa_analyze(a, ks, 2, &doc2, NULL) == PA_OK);
  EXPECT(strcmp(doc, doc2) == 0);
  pa_string_free(doc2);
  pa_string_free(doc);

  pa_arrangement *c = build("collinear_delta", "m", "5");
  pa_set_vertex_weight_mutation(-2);
  doc = NULL;
  EXPECT(pa_analyze(c, NULL, 0, &doc, &violated) == PA_OK);
  EXPECT(violated == 1);
  pa_string_free(doc);
  pa_set_vertex_weight_mutation(0);
  doc = NULL;
  EXPECT(pa_analyze(c, NULL, 0, &doc, &violated) == PA_OK);
  EXPECT(violated == 0);
  pa_string_free(doc);

  char *profile = NULL;
  EXPECT(pa_weight_profile(a, &profile) == PA_OK);
  EXPECT(strncmp(profile, "{\"v\":[14,", 9) == 0);
  pa_string_free(profile);

  const char *keys[1] = {"n"};
  const char *values[1] = {"5"};
  char *expected = NULL;
  EXPECT(pa_family_expectations("sharp4n6", keys, values, 1, &expected) == PA_OK);
  EXPECT(strcmp(expected, "{\"v_0\":14,\"f_0\":4}") == 0);
  pa_string_free(expected);
  pa_arrangement_free(c);
  pa_arrangement_free(a);
}

static void test_invert_and_render(void)
{
  pa_arrangement *a = build("concentric_triple", NULL, NULL);
  pa_arrangement *inv = NULL;
  char *report = NULL;
  EXPECT(pa_invert(a, 0, &inv, &report) == PA_OK);
  EXPECT(strcmp(report, "{\"before\":[2,4],\"after\":[4,2],\"reversal_check\":\"passed\"}") == 0);
  pa_string_free(report);
  pa_arrangement_free(inv);

  pa_arrangement *alpha = build("alpha_triple", NULL, NULL);
  inv = NULL;
  EXPECT(pa_invert(alpha, 0, &inv, NULL) == PA_ERR_NO_FULL_WEIGHT_FACE);
  EXPECT(inv == NULL);

  char *svg = NULL;
  EXPECT(pa_render_svg(alpha, NULL, &svg) == PA_OK);
  EXPECT(strstr(svg, "<svg") != NULL);
  EXPECT(strstr(svg, "class=\"vertex") == NULL);
  pa_string_free(svg);
  pa_render_options opts = {1, 1, 1, 320};
  EXPECT(pa_render_svg(alpha, &opts, &svg) == PA_OK);
  EXPECT(strstr(svg, "class=\"vertex w0") != NULL);
  pa_string_free(svg);
  pa_arrangement_free(alpha);
  pa_arrangement_free(a);
}

static void test_search(void)
{
  const char *config = "{\"mode\": \"fuzz\", \"n_min\": 3, \"n_max\": 4, \"budget\": 10}";
  char *r1 = NULL;
  char *r2 = NULL;
  int failed = -1;
  EXPECT(pa_search(config, NULL, &r1, &failed) == PA_OK);
  EXPECT(failed == 0);
  pa_search_overrides ov = {1, 7, 1, 5};
  EXPECT(pa_search(config, &ov, &r2, &failed) == PA_OK);
  EXPECT(strstr(r2, "\"budget\": 5") != NULL);
  EXPECT(strstr(r2, "\"seed\": 7") != NULL);
  pa_string_free(r2);
  EXPECT(pa_search(config, NULL, &r2, NULL) == PA_OK);
  EXPECT(strcmp(r1, r2) == 0);
  pa_string_free(r1);
  pa_string_free(r2);
  EXPECT(pa_search("{\"mode\": \"other\"}", NULL, &r1, NULL) == PA_ERR_PARSE);
}

static void test_families(void)
{
  char *json = NULL;
  EXPECT(pa_families(&json) == PA_OK);
  EXPECT(strstr(json, "unit_circle_sharp") != NULL);
  pa_string_free(json);
  EXPECT(strlen(pa_version()) > 0);
}

int main(void)
{
  test_round_trip();
  test_errors();
  test_analysis();
  test_invert_and_render();
  test_search();
  test_families();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("all C interface checks passed\n");
  return 0;
}
