#pragma once

// Sparse polynomials in x_1..x_n with arbitrary-precision integer
// coefficients, the W_n action, and divided differences.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "spschub/numeric.hpp"
#include "spschub/weyl.hpp"

namespace spschub {

inline constexpr int kMaxRank = 8;

class Monomial {
 public:
  Monomial() { exp_.fill(0); }

  static Monomial variable(int i);  // x_{i+1}, i zero-based

  std::uint8_t operator[](int i) const { return exp_[i]; }
  std::uint8_t& operator[](int i) { return exp_[i]; }
  int degree() const;
  Monomial operator*(const Monomial& rhs) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxRank> exp_;
};

/// Graded lexicographic order, largest first, x_1 > x_2 > ... .
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int n);

  static MultiPoly constant(int n, const Integer& c);
  /// x_i with i one-based.
  static MultiPoly variable(int n, int i);
  static MultiPoly monomial(int n, const Monomial& m, const Integer& c = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;

  /// Total degree of the leading term; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_part(int d) const;

  void add_term(const Monomial& m, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Integer& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;

  /// f(-x_1, ..., -x_n).
  MultiPoly negate_variables() const;
  /// Sets x_{m+1}..x_n to zero and returns a rank-m polynomial.
  MultiPoly truncate(int m) const;
  /// Same polynomial viewed in more variables.
  MultiPoly extend(int n) const;

  /// Substitutes values for the variables in a commutative target ring.
  template <class T>
  T evaluate(const std::function<T(int)>& var, const std::function<T(const Integer&)>& scalar,
             const T& one) const;

  bool operator==(const MultiPoly& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }

  /// "3*x1^2*x2 - x1 + 5"; parses back with parse_poly.
  std::string to_string() const;

 private:
  int rank_ = 0;
  Terms terms_;
};

MultiPoly elementary(int k, int n);
/// e_k(x_1^2, ..., x_n^2).
MultiPoly elementary_squares(int k, int n);
MultiPoly power_sum(int k, int n);

/// w·f, the substitution x_i -> ±x_{|w(i)|}; a left action.
MultiPoly weyl_action(const SignedPermutation& w, const MultiPoly& f);

/// ∂_i for i in 0..n-1.
MultiPoly divided_difference(int i, const MultiPoly& f);
/// ∂_{a_1} ∘ ... ∘ ∂_{a_r}; rejects non-reduced words.
MultiPoly divided_difference_word(const Word& word, const MultiPoly& f);
/// ∂_w along the first reduced word of w.
MultiPoly divided_difference(const SignedPermutation& w, const MultiPoly& f);

template <class T>
T MultiPoly::evaluate(const std::function<T(int)>& var,
                      const std::function<T(const Integer&)>& scalar, const T& one) const {
  std::vector<std::vector<T>> powers(rank_);
  T total = scalar(Integer(0));
  for (const auto& [m, c] : terms_) {
    T term = scalar(c);
    for (int i = 0; i < rank_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(one);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * var(i + 1));
      term = term * pw[e];
    }
    total = total + term;
  }
  return total;
}

}  // namespace spschub
