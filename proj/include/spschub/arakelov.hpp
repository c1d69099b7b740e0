#pragma once

// Bott-Chern forms of the tautological filtrations, arithmetic classes in
// the invariant arithmetic Chow ring, arithmetic degrees and the height.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spschub/forms.hpp"
#include "spschub/poly.hpp"
#include "spschub/symplectic.hpp"

namespace spschub {

/// H_r = 1 + 1/2 + ... + 1/r, H_0 = 0.
Rational harmonic(int r);

/// Graded Bott-Chern form; component k has form degree (k-1, k-1).
struct BottChern {
  int n = 0;
  std::string label;
  /// Index k = 0 .. n^2+1; empty when not computable at this rank.
  std::vector<std::optional<InvForm>> components;

  /// Throws Unsupported when the component is missing.
  const InvForm& component(int k) const;
  bool available(int k) const;
  /// Sum of all components; throws Unsupported if any is missing.
  InvForm total() const;
};

/// Externally supplied c̃_k of the stepwise filtration, 3 <= k <= n.
using BottChernExtension = std::map<int, InvForm>;

/// c̃_k = (-1)^{k-1} H_{k-1} p_{k-1}(E_n^*).
BottChern bc_lagrangian(int n);
/// 0 = E_0 ⊂ E_1 ⊂ ... ⊂ E_n.
BottChern bc_filtration(int n, const BottChernExtension& ext = {});
/// c̃_k(E^*) = (-1)^k c̃_k(E).
BottChern bc_dual(const BottChern& bc);
/// c̃(E_LG) + c̃(E) c(E_n^*) + c̃(E^*) c(E_n) + dd^c(c̃(E)) c̃(E^*).
BottChern bc_pair(int n, const BottChernExtension& ext = {});

struct ArithClass {
  int n = 0;
  std::map<SignedPermutation, Integer> schubert;
  InvForm form;

  explicit ArithClass(int rank);

  ArithClass& operator+=(const ArithClass& rhs);
  ArithClass& operator*=(const Integer& c);
  friend ArithClass operator+(ArithClass a, const ArithClass& b) { return a += b; }
  bool operator==(const ArithClass& rhs) const {
    return n == rhs.n && schubert == rhs.schubert && form == rhs.form;
  }

  static ArithClass schubert_class(const SignedPermutation& w);
  static ArithClass form_class(const InvForm& eta);
};

/// f(x_1, ..., x_n) with x_i the curvature forms.
InvForm evaluate_at_x(const MultiPoly& f);

/// Class of h(x̂_1, ..., x̂_n).
ArithClass arith_class(const MultiPoly& h, const BottChernExtension& ext = {});
/// Class of a combination of basis elements.
ArithClass arith_class(const CExpansion& e, int n, const BottChernExtension& ext = {});

ArithClass arith_product(const ArithClass& a, const ArithClass& b,
                         const BottChernExtension& ext = {});

struct ArithDegree {
  /// The class equals omega_coefficient · Ω.
  Rational omega_coefficient;
  Rational degree;
};

/// Degree of x̂_1^{k_1} ... x̂_n^{k_n}, Σ k_i = n^2 + 1.
ArithDegree arith_monomial_degree(const std::vector<int>& exponents,
                                  const BottChernExtension& ext = {});
/// Degree of a top-degree class: ½ · coefficient of Ω · ∫Ω.
ArithDegree arith_degree(const ArithClass& cls);
/// Height of the flag variety for O(1), the degree of (Σ i x̂_i)^{n^2+1}.
ArithDegree faltings_height(int n, const BottChernExtension& ext = {});

}  // namespace spschub
