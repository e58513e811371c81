/* Exercises the C API from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "curvelift/curvelift.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* haystack, const char* needle) {
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

int main(void) {
  clift_curve* parabola = NULL;
  clift_curve* lifted = NULL;
  clift_curve* bad = NULL;
  clift_monomials* m = NULL;
  char* text = NULL;
  int dim = 0;
  int campaign_failures = -1;
  double c = 0.0;

  EXPECT(strcmp(clift_version(), "0.1.0") == 0);
  EXPECT(clift_curve_moment(2, &parabola) == CLIFT_OK);
  EXPECT(clift_curve_dimension(parabola, &dim) == CLIFT_OK && dim == 2);

  EXPECT(clift_wronskian(parabola, "1/3", &text) == CLIFT_OK);
  EXPECT(contains(text, "\"exact\":\"2\""));
  clift_string_free(text);

  EXPECT(clift_monomials_from_json("[[1,0],[0,1],[1,1]]", &m) == CLIFT_OK);
  EXPECT(clift_lift(parabola, m, &lifted) == CLIFT_OK);
  EXPECT(clift_curve_dimension(lifted, &dim) == CLIFT_OK && dim == 3);
  EXPECT(clift_exponent(m, &text) == CLIFT_OK);
  EXPECT(contains(text, "\"exact\":\"2/3\""));
  clift_string_free(text);
  EXPECT(clift_bijection(parabola, m, 9, &text) == CLIFT_OK);
  EXPECT(contains(text, "\"bijection\":true"));
  EXPECT(contains(text, "\"cardinality_lifted\":4"));
  clift_string_free(text);
  EXPECT(clift_lipschitz(m, 1.0, &c) == CLIFT_OK && c > 2.44 && c < 2.45);
  clift_monomials_free(m);

  EXPECT(clift_count("{\"curve\": {\"kind\": \"moment\", \"dimension\": 2}, \"delta\": "
                     "{\"N\": 16, \"n\": 5}, \"source\": {\"type\": \"lattice\"}}",
                     NULL, &text) == CLIFT_OK);
  EXPECT(contains(text, "\"count\":5"));
  clift_string_free(text);

  EXPECT(clift_energy("{\"points\": [[\"0\"], [\"1\"], [\"2\"]], \"m\": 2}", 0, &text) == CLIFT_OK);
  EXPECT(contains(text, "\"energy\":19"));
  clift_string_free(text);

  EXPECT(clift_intersect(parabola, "[\"1/4\", \"0\", \"1\"]", &text) == CLIFT_OK);
  EXPECT(contains(text, "\"count\":1"));
  clift_string_free(text);

  EXPECT(clift_hyperplanes(parabola, 200, 3, &text) == CLIFT_OK);
  EXPECT(contains(text, "\"max_count\":2"));
  clift_string_free(text);

  EXPECT(clift_experiment("{\"curve\": {\"kind\": \"moment\", \"dimension\": 2}, "
                          "\"schedule\": [4, 9, 16], \"delta\": \"zero\"}",
                          NULL, "exponent", CLIFT_FORMAT_CSV, 0, 0, &text) == CLIFT_OK);
  EXPECT(contains(text, "N,delta,count,certified,runtime_ms\n4,0,3,true,"));
  clift_string_free(text);

  EXPECT(clift_campaign("gap-doubling", 1, 10, 0, &text, &campaign_failures) == CLIFT_OK);
  EXPECT(campaign_failures == 0);
  EXPECT(contains(text, "\"passes\":10"));
  clift_string_free(text);

  /* Errors carry a status and a thread-local message. */
  EXPECT(clift_curve_from_json("{\"kind\": \"spiral\"}", NULL, &bad) == CLIFT_PARSE);
  EXPECT(bad == NULL);
  EXPECT(contains(clift_last_error(), "spiral"));
  EXPECT(clift_wronskian(parabola, "0.5", &text) == CLIFT_PARSE);
  EXPECT(clift_curve_moment(1, &bad) != CLIFT_OK);
  EXPECT(clift_curve_dimension(NULL, &dim) == CLIFT_INVALID_ARGUMENT);
  EXPECT(clift_campaign("fermat", 1, 10, 0, &text, NULL) == CLIFT_PARSE);
  EXPECT(clift_energy("{\"points\": [[\"0\"]], \"m\": 2}", 0, &text) == CLIFT_OK);
  clift_string_free(text);
  EXPECT(strcmp(clift_status_name(CLIFT_CAP_EXCEEDED), "cap-exceeded") == 0);

  clift_curve_free(lifted);
  clift_curve_free(parabola);
  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
