/* The public header must compile as C. */
#include <stdio.h>
#include <string.h>

#include "artin/artin.h"

int main(void) {
  const char* text = "{\"vertices\":[\"a\",\"b\"],\"edges\":[[\"a\",\"b\",3]]}";
  artin_graph* g = NULL;
  artin_verdict* v = NULL;
  char* cert = NULL;
  char* report = NULL;
  long index = 0;
  int failed = 0;

  if (artin_graph_parse(text, &g) != ARTIN_OK) return 1;
  if (artin_certify(g, ARTIN_POLYFREE, &v) != ARTIN_OK || !artin_verdict_certified(v)) failed = 1;
  if (!failed && artin_verdict_length(v) != 2) failed = 1;
  if (!failed && artin_verdict_json(v, &cert) != ARTIN_OK) failed = 1;
  if (!failed && artin_verify(cert, g, 0, &report, &index) != ARTIN_OK) failed = 1;
  if (!failed && strncmp(report, "accepted", 8) != 0) failed = 1;
  if (failed) fprintf(stderr, "C smoke test failed: %s\n", artin_last_error());

  artin_string_free(report);
  artin_string_free(cert);
  artin_verdict_free(v);
  artin_graph_free(g);
  return failed;
}
