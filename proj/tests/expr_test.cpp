#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "printers.hpp"
#include "serialize.hpp"
#include "spschub/error.hpp"
#include "spschub/expr.hpp"
#include "spschub/qbasis.hpp"
#include "spschub/symplectic.hpp"

using namespace spschub;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

std::string parse_error(std::string_view text, int n) {
  try {
    parse_poly(text, n);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("basic expressions") {
  CHECK(parse_poly("x1^2 + x2^2", 2) == elementary_squares(1, 2));
  CHECK(parse_poly("qtilde(2,1)", 3) == qtilde(Partition({2, 1}), 3));
  const MultiPoly d = x(2, 1) - x(2, 2);
  CHECK(parse_poly("x1*(x1 - x2)^2", 2) == x(2, 1) * d * d);
  CHECK(parse_poly("e(2)", 3) == elementary(2, 3));
  CHECK(parse_poly("e2(2)", 3) == elementary_squares(2, 3));
  CHECK(parse_poly("schubA(1 3 2)", 3) == schubert_a(SignedPermutation({1, 3, 2})));
  CHECK(parse_poly("schubC(-2 1)", 2) == schubert_c(SignedPermutation({-2, 1})));
  CHECK(parse_poly("C[-2 1]", 2) == schubert_c(SignedPermutation({-2, 1})));
  CHECK(parse_poly("C[1,1; 2 1]", 2) == c_pair(Partition({1, 1}), SignedPermutation({2, 1})));
  CHECK(parse_poly("  7 ", 1) == MultiPoly::constant(1, 7));
}

TEST_CASE("precedence and associativity") {
  // ^ binds tighter than *, which binds tighter than + and -
  CHECK(parse_poly("2*x1^2", 1) == x(1, 1).pow(2) * Integer(2));
  CHECK(parse_poly("1 + 2*3", 1) == MultiPoly::constant(1, 7));
  CHECK(parse_poly("2^3^2", 1) == MultiPoly::constant(1, 512));
  CHECK(parse_poly("-x1^2", 1) == -x(1, 1).pow(2));
  CHECK(parse_poly("1 - 2 - 3", 1) == MultiPoly::constant(1, -4));
  CHECK(parse_poly("x1^0", 1) == MultiPoly::constant(1, 1));
}

TEST_CASE("errors carry a position") {
  CHECK(parse_error("x1 +", 2).find("position 5") != std::string::npos);
  CHECK(parse_error("x1 ) ", 2).find("position 4") != std::string::npos);
  CHECK_FALSE(parse_error("x3", 2).empty());
  CHECK_FALSE(parse_error("x0", 2).empty());
  CHECK_FALSE(parse_error("foo(1)", 2).empty());
  CHECK_FALSE(parse_error("x1^x2", 2).empty());
  CHECK_FALSE(parse_error("x1^999", 2).empty());
  CHECK_FALSE(parse_error("(x1", 2).empty());
  CHECK_FALSE(parse_error("", 2).empty());
  CHECK_FALSE(parse_error("C[1 1 2]", 3).empty());
}

TEST_CASE("printed polynomials and expansions parse back") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    const MultiPoly f = oracle::random_poly(rng, n, 5, 6, 20);
    const std::string s = f.to_string();
    CHECK(parse_poly(s, n) == f);
    CHECK(parse_poly(parse_poly(s, n).to_string(), n).to_string() == s);
    if (t % 4 == 0) {
      const auto e = expand(f);
      CHECK(parse_poly(io::expansion_to_string(e), n) == f);
    }
  }
}
