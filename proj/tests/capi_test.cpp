// Exercises the shared library through its C header only.
#include <doctest.h>

#include <string>

#include "spschub/spschub.h"

namespace {

struct Ctx {
  spschub_context* ctx = nullptr;
  Ctx() { REQUIRE(spschub_context_new(&ctx) == SPSCHUB_OK); }
  ~Ctx() { spschub_context_free(ctx); }
};

struct Out {
  char* s = nullptr;
  ~Out() { spschub_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(spschub_version()).size() > 0);
  CHECK(std::string(spschub_status_name(SPSCHUB_PARSE)) == "parse");
  CHECK(std::string(spschub_status_name(SPSCHUB_MISMATCH)) == "mismatch");
}

TEST_CASE("successful calls") {
  Ctx c;
  {
    Out o;
    CHECK(spschub_parse_poly(c.ctx, 2, "(x1+x2)^2", SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str() == "x1^2 + 2*x1*x2 + x2^2\n");
  }
  {
    Out o;
    CHECK(spschub_schubert(c.ctx, 2, "s0", SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str() == "x1 + x2\n");
  }
  {
    Out o;
    CHECK(spschub_height(c.ctx, 2, SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str() == "925/6\n");
  }
  {
    Out o;
    const int k[] = {5, 0};
    CHECK(spschub_arith_monomial(c.ctx, k, 2, SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str() == "r = 10\ndegree = 5/6\n");
  }
  {
    Out o;
    CHECK(spschub_height(c.ctx, 2, SPSCHUB_JSON, &o.s) == SPSCHUB_OK);
    CHECK(o.str().find("\"height\": \"925/6\"") != std::string::npos);
  }
  {
    Out o;
    CHECK(spschub_expand(c.ctx, 1, "x1^2", 1, SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str().rfind("in ideal: yes\n", 0) == 0);
  }
  {
    Out o;
    CHECK(spschub_table(c.ctx, 2, SPSCHUB_TEXT, &o.s) == SPSCHUB_OK);
    CHECK(o.str().rfind("e | 1 2 | 1\ns0 | -1 2 | x1 + x2\n", 0) == 0);
  }
}

TEST_CASE("errors come back as status codes") {
  Ctx c;
  Out o;
  CHECK(spschub_parse_poly(c.ctx, 2, "x1 +", SPSCHUB_TEXT, &o.s) == SPSCHUB_PARSE);
  CHECK(o.s == nullptr);
  CHECK(std::string(spschub_last_error()).find("position") != std::string::npos);
  CHECK(spschub_schubert(c.ctx, 2, "1 1", SPSCHUB_TEXT, &o.s) == SPSCHUB_INVALID_ARGUMENT);
  CHECK(spschub_schubert(c.ctx, 0, "1", SPSCHUB_TEXT, &o.s) == SPSCHUB_INVALID_ARGUMENT);
  CHECK(spschub_height(c.ctx, 3, SPSCHUB_TEXT, &o.s) == SPSCHUB_UNSUPPORTED);
  CHECK(spschub_schubert(nullptr, 2, "s0", SPSCHUB_TEXT, &o.s) == SPSCHUB_INVALID_ARGUMENT);
  CHECK(spschub_schubert(c.ctx, 2, nullptr, SPSCHUB_TEXT, &o.s) == SPSCHUB_INVALID_ARGUMENT);
  CHECK(spschub_schubert(c.ctx, 2, "s0", static_cast<spschub_format>(9), &o.s) ==
        SPSCHUB_INVALID_ARGUMENT);
  const int k[] = {4, 0};
  CHECK(spschub_arith_monomial(c.ctx, k, 2, SPSCHUB_TEXT, &o.s) == SPSCHUB_INVALID_ARGUMENT);
  CHECK(spschub_table_check(c.ctx, "/nonexistent.json", SPSCHUB_TEXT, &o.s) ==
        SPSCHUB_INVALID_ARGUMENT);
  // a successful call clears the message
  Out ok;
  CHECK(spschub_schubert(c.ctx, 2, "s0", SPSCHUB_TEXT, &ok.s) == SPSCHUB_OK);
  CHECK(std::string(spschub_last_error()).empty());
}
