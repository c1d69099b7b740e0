#pragma once

// Sp(2n)-invariant differential forms on the symplectic flag variety:
// the coframe ω_ij, ω̄_ij, ω^pq, ω̄^pq, the exterior derivative coming
// from the Maurer-Cartan equations of sp(2n, C), curvature of the
// tautological bundles, Chern and power sum forms, dd^c, and integration.
//
// Labels are those of the skew-diagonal realization. Internally the Lie
// algebra is built in the standard realization and every symbol is
// renamed through (i,j) -> (n+1-j, n+1-i), (p,q) -> (n+1-q, n+1-p).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spschub/numeric.hpp"

namespace spschub {

inline constexpr int kMaxFormRank = 5;

enum class SymbolKind {
  Lower,     // ω_ij, i < j
  LowerBar,  // ω̄_ij
  Upper,     // ω^pq, p <= q
  UpperBar,  // ω̄^pq
  Cartan,    // dual of the k-th Cartan direction (vertical)
};

struct OneForm {
  SymbolKind kind;
  int i;
  int j;  // unused for Cartan

  /// "W_12", "Wb_12", "W^11", "Wb^11", "H_1".
  std::string token() const;
  static OneForm parse(const std::string& token);

  auto operator<=>(const OneForm&) const = default;
  bool operator==(const OneForm&) const = default;
};

/// Bit positions of the one-form symbols at rank n.
class FormLayout {
 public:
  explicit FormLayout(int n);

  int rank() const { return n_; }
  /// Number of positive roots, n^2.
  int root_count() const { return n_ * n_; }
  int symbol_count() const { return 2 * n_ * n_ + n_; }

  int bit(const OneForm& f) const;
  OneForm symbol(int bit) const;

  bool is_vertical(int bit) const { return bit >= 2 * root_count(); }
  bool is_holomorphic(int bit) const { return !is_vertical(bit) && bit % 2 == 0; }
  std::uint64_t vertical_mask() const;
  /// The bits of Ω, every non-vertical symbol.
  std::uint64_t top_mask() const;
  std::uint64_t hol_mask() const;

  /// Root index of ω_ij (i<j) or ω^pq (p<=q), in display order.
  int lower_root(int i, int j) const;
  int upper_root(int p, int q) const;

 private:
  int n_;
};

class InvForm {
 public:
  /// (mask of one-form symbols in ascending order, exponent of γ).
  using Key = std::pair<std::uint64_t, int>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, Rational, KeyLess>;

  InvForm() = default;
  explicit InvForm(int n);

  static InvForm scalar(int n, const Rational& c);
  static InvForm one_form(int n, const OneForm& f);
  /// Ω_ij = ω_ij ∧ ω̄_ij.
  static InvForm omega_lower(int n, int i, int j);
  /// Ω^pq = ω^pq ∧ ω̄^pq; indices are symmetric.
  static InvForm omega_upper(int n, int p, int q);
  /// Ω, the wedge of all Ω_ij and Ω^pq.
  static InvForm top(int n);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::uint64_t mask, int gamma = 0) const;

  void add_term(std::uint64_t mask, int gamma, const Rational& c);

  InvForm& operator+=(const InvForm& rhs);
  InvForm& operator-=(const InvForm& rhs);
  InvForm& operator*=(const Rational& c);
  friend InvForm operator+(InvForm a, const InvForm& b) { return a += b; }
  friend InvForm operator-(InvForm a, const InvForm& b) { return a -= b; }
  friend InvForm operator*(InvForm a, const Rational& c) { return a *= c; }
  friend InvForm operator*(const Rational& c, InvForm a) { return a *= c; }
  InvForm operator-() const;
  /// Wedge product.
  friend InvForm operator*(const InvForm& a, const InvForm& b);
  InvForm pow(unsigned e) const;

  /// Terms with exactly p holomorphic and q antiholomorphic factors and no
  /// vertical factor.
  InvForm bidegree_part(int p, int q) const;
  /// Every term has γ-exponent 0.
  bool is_class_ready() const;
  bool has_vertical() const;
  /// Largest total degree present, -1 for zero.
  int degree() const;

  bool operator==(const InvForm& rhs) const { return n_ == rhs.n_ && terms_ == rhs.terms_; }

  /// "2*O_12*O^11 - 3/2*O^22"; non-paired monomials use one-form tokens.
  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// Sign of the product of two ascending monomials, 0 if they overlap.
int wedge_sign(std::uint64_t a, std::uint64_t b);

/// Monomial tokens in canonical order: O_/O^ when fully paired, else
/// one-form tokens.
std::vector<std::string> monomial_tokens(int n, std::uint64_t mask);

/// Structure constants of sp(2n, C) in the basis dual to the coframe.
struct LieBracketTable {
  int n = 0;
  /// bracket[a][b] = coordinates of [e_a, e_b], indexed by symbol bit.
  std::vector<std::vector<std::map<int, long>>> bracket;
};

const LieBracketTable& lie_brackets(int n);

/// Exterior derivative of an invariant form on Sp(2n).
InvForm exterior_d(const InvForm& form);
/// d of one coframe symbol.
InvForm exterior_d(int n, const OneForm& f);

/// dd^c = γ^2 ∂∂̄ on invariant basic forms. The scale is fixed by the
/// Ω_12-free part of dd^c(Ω_12) at n = 2, which is Ω^12 (Ω^11 + Ω^22).
InvForm ddc(const InvForm& form);

/// Coefficient of Ω in a top-degree class-ready form.
Rational top_coefficient(const InvForm& form);
/// ∫ form = coefficient of Ω times ∏ 1/(2k-1)!.
Rational integrate_top(const InvForm& form);
/// ∫ Ω.
Rational top_volume(int n);

using FormMatrix = std::vector<std::vector<InvForm>>;

struct CurvatureMatrix {
  std::string label;
  FormMatrix entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// K of the tautological subbundle E_k, 1 <= k <= n.
CurvatureMatrix curvature_E(int k, int n);
/// K of the dual bundle, -K^t.
CurvatureMatrix dual(const CurvatureMatrix& K);

/// c_0, ..., c_r as sums of principal minors.
std::vector<InvForm> chern_forms(const CurvatureMatrix& K);
InvForm total_chern(const CurvatureMatrix& K);
/// Tr(K^r); r = 0 gives the rank.
InvForm power_sum_form(const CurvatureMatrix& K, int r);

/// c_1(Q_k) = c_1(E_k) - c_1(E_{k-1}).
InvForm c1_quotient(int k, int n);
/// x_i = -c_1(L_i), L_i = E_{n+1-i}/E_{n-i}.
InvForm x_form(int i, int n);

}  // namespace spschub
