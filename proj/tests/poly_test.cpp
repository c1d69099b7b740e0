#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "printers.hpp"
#include "spschub/error.hpp"
#include "spschub/poly.hpp"

using namespace spschub;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("ring arithmetic") {
  const MultiPoly a = x(2, 1) + x(2, 2), b = x(2, 1) - x(2, 2);
  CHECK(a * b == x(2, 1).pow(2) - x(2, 2).pow(2));
  CHECK((a - a).is_zero());
  CHECK(a.pow(0) == MultiPoly::constant(2, 1));
  CHECK(a.pow(3).degree() == 3);
  CHECK((a * Integer(0)).is_zero());
  CHECK(a.negate_variables() == -a);
  CHECK((x(3, 1) * x(3, 3)).truncate(2).is_zero());
  CHECK(x(2, 1).extend(3) == x(3, 1));
}

TEST_CASE("symmetric function constructors") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      CHECK(elementary(k, n) == oracle::elementary(k, n));
      MultiPoly squares(n);
      // e_k(X^2) from the subset sum with squared variables
      const MultiPoly e = oracle::elementary(k, n);
      for (const auto& [m, c] : e.terms()) {
        Monomial sq;
        for (int i = 0; i < n; ++i) sq[i] = static_cast<std::uint8_t>(2 * m[i]);
        squares.add_term(sq, c);
      }
      CHECK(elementary_squares(k, n) == squares);
    }
  MultiPoly p3(3);
  for (int i = 1; i <= 3; ++i) p3 += x(3, i).pow(3);
  CHECK(power_sum(3, 3) == p3);
}

TEST_CASE("Weyl action matches reflections") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 20; ++t) {
      const MultiPoly f = oracle::random_poly(rng, n, 5, 6);
      for (int a = 0; a < n; ++a)
        CHECK(weyl_action(SignedPermutation::generator(a, n), f) == oracle::reflect(a, f));
      // left action: (uv)f = u(vf)
      const auto group = hyperoctahedral_group(n);
      const auto& u = group[t % group.size()];
      const auto& v = group[(3 * t + 1) % group.size()];
      CHECK(weyl_action(u * v, f) == weyl_action(u, weyl_action(v, f)));
    }
}

TEST_CASE("divided differences satisfy their defining identity") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 40; ++t) {
      const MultiPoly f = oracle::random_poly(rng, n, 6, 8);
      for (int i = 0; i < n; ++i) {
        const MultiPoly d = divided_difference(i, f);
        CHECK(d == oracle::divided_difference(i, f));
        const MultiPoly root =
            i == 0 ? x(n, 1) * Integer(2) : x(n, i) - x(n, i + 1);
        CHECK(root * d == f - oracle::reflect(i, f));
        // Leibniz: ∂(fg) = ∂f g + (s f) ∂g
        const MultiPoly g = oracle::random_poly(rng, n, 3, 3);
        CHECK(divided_difference(i, f * g) ==
              d * g + oracle::reflect(i, f) * divided_difference(i, g));
      }
    }
}

TEST_CASE("divided differences satisfy the nil-Coxeter relations on 200 random polynomials") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3;
    const MultiPoly f = oracle::random_poly(rng, n, 7, 8);
    auto dd = [&](const Word& w) { return divided_difference_word(w, f); };
    for (int a = 0; a < n; ++a) {
      CHECK(divided_difference(a, divided_difference(a, f)).is_zero());
      for (int b = a + 1; b < n; ++b) {
        if (b - a >= 2) {
          CHECK(dd({a, b}) == dd({b, a}));
        } else if (a == 0) {
          CHECK(dd({0, 1, 0, 1}) == dd({1, 0, 1, 0}));
        } else {
          CHECK(dd({a, b, a}) == dd({b, a, b}));
        }
      }
    }
  }
}

TEST_CASE("∂_w does not depend on the reduced word") {
  std::mt19937_64 rng(19);
  const auto dist3 = oracle::bfs_lengths(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3;
    const auto group = hyperoctahedral_group(n);
    const auto& w = group[(t * 7) % group.size()];
    const MultiPoly f = oracle::random_poly(rng, n, 8, 6);
    const MultiPoly expect = divided_difference(w, f);
    for (const auto& word : reduced_words(w)) {
      CHECK(divided_difference_word(word, f) == expect);
      CHECK(oracle::divided_difference(word, f) == expect);
    }
  }
  CHECK_THROWS_AS(divided_difference_word({1, 1}, x(2, 1)), Error);
}

TEST_CASE("evaluate substitutes values") {
  const MultiPoly f = x(2, 1).pow(2) * Integer(3) - x(2, 2) + MultiPoly::constant(2, 5);
  const Integer v = f.evaluate<Integer>([](int i) { return Integer(i + 1); },
                                        [](const Integer& c) { return c; }, Integer(1));
  // x1 = 2, x2 = 3
  CHECK(v == 3 * 4 - 3 + 5);
}

TEST_CASE("printing") {
  const MultiPoly f = x(2, 1).pow(2) * x(2, 2) * Integer(3) - x(2, 1) + MultiPoly::constant(2, 5);
  CHECK(f.to_string() == "3*x1^2*x2 - x1 + 5");
  CHECK(MultiPoly(2).to_string() == "0");
}
