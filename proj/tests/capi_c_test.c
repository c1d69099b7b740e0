/* The header must compile as C; a minimal round trip. */
#include <stdio.h>
#include <string.h>

#include "spschub/spschub.h"

int main(void) {
  spschub_context* ctx = NULL;
  char* out = NULL;
  int ok;
  if (spschub_context_new(&ctx) != SPSCHUB_OK) return 1;
  ok = spschub_height(ctx, 2, SPSCHUB_TEXT, &out) == SPSCHUB_OK && strcmp(out, "925/6\n") == 0;
  spschub_string_free(out);
  spschub_context_free(ctx);
  if (!ok) {
    fprintf(stderr, "unexpected height\n");
    return 1;
  }
  return 0;
}
