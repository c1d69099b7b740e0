#pragma once

// Symplectic Schubert polynomials 𝔠_w, the companion basis 𝔠_{λ,ϖ} for
// non-strict λ, expansion in the combined basis, and structure constants.

#include <map>
#include <string>
#include <vector>

#include "spschub/poly.hpp"
#include "spschub/weyl.hpp"

namespace spschub {

/// Index of a basis element: either 𝔠_w or 𝔠_{λ,ϖ} with λ non-strict.
struct CIndex {
  enum class Kind { Schubert, Pair };

  Kind kind = Kind::Schubert;
  SignedPermutation w;   // Schubert
  Partition lambda;      // Pair
  SignedPermutation pi;  // Pair

  static CIndex schubert(SignedPermutation w);
  static CIndex pair(Partition lambda, SignedPermutation pi);

  bool is_schubert() const { return kind == Kind::Schubert; }
  int rank() const { return is_schubert() ? w.rank() : pi.rank(); }
  int degree() const;
  /// "C[-2 1 3]" or "C[1,1; 2 1 3]".
  std::string to_string() const;

  auto operator<=>(const CIndex&) const = default;
  bool operator==(const CIndex&) const = default;
};

using CExpansion = std::map<CIndex, Integer>;

/// 𝔠_{λ,ϖ} = (-1)^{ℓ(ϖ)} Q̃_λ(X_n) 𝔖_ϖ(X_n).
MultiPoly c_pair(const Partition& lambda, const SignedPermutation& pi);

/// 𝔠_w from the Kraśkiewicz coefficients.
MultiPoly schubert_c(const SignedPermutation& w);

MultiPoly basis_polynomial(const CIndex& index);

/// Unique integer coefficients of h over the combined basis.
CExpansion expand(const MultiPoly& h);
MultiPoly reconstruct(const CExpansion& e, int n);

/// Expansion of 𝔠_u 𝔠_v.
CExpansion structure_constants(const SignedPermutation& u, const SignedPermutation& v);
/// The same, computed as Σ e^u e^v expand(𝔠_{λ,ρ} 𝔠_{μ,π}).
CExpansion structure_constants_termwise(const SignedPermutation& u,
                                        const SignedPermutation& v);

/// ⟨f, g⟩ = ∂_{w_0}(fg), normalized so that ⟨𝔠_u, 𝔠_{w_0 u}⟩ = 1.
MultiPoly scalar_product(const MultiPoly& f, const MultiPoly& g);

struct IdealMembership {
  bool member = false;
  /// The part of the expansion supported on non-strict indices.
  CExpansion witness;
};

IdealMembership ideal_membership(const MultiPoly& h);

void add_to(CExpansion& acc, const CExpansion& e, const Integer& scale = 1);

}  // namespace spschub
