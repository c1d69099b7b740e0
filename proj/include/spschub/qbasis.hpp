#pragma once

// Q̃-polynomials, type A Schubert polynomials, Kraśkiewicz tableaux and the
// coefficients e^w_{λ,ϖ} of the type C Stanley expansion.

#include <cstdint>
#include <map>
#include <utility>

#include "spschub/poly.hpp"
#include "spschub/weyl.hpp"

namespace spschub {

/// Q̃_λ(X_n). λ need not be strict; zero when λ_1 > n.
MultiPoly qtilde(const Partition& lambda, int n);

/// 𝔖_ϖ(X_n) = ∂_{ϖ^{-1}ϖ_0}(x_1^{n-1} ... x_{n-1}).
MultiPoly schubert_a(const SignedPermutation& varpi);

/// Number of Kraśkiewicz tableaux for u of shape λ.
std::uint64_t kraskiewicz_count(const SignedPermutation& u, const Partition& lambda);

/// All nonzero counts for u, keyed by shape.
std::map<Partition, std::uint64_t> kraskiewicz_shapes(const SignedPermutation& u);

/// Length of the longest unimodal subsequence (strictly decreasing, then
/// strictly increasing).
int longest_unimodal(std::span<const int> letters);

using BHKey = std::pair<Partition, SignedPermutation>;
using BHCoefficients = std::map<BHKey, std::uint64_t>;

/// e^w_{λ,ϖ}: Kraśkiewicz counts for wϖ^{-1} over the factorizations with
/// ℓ(wϖ^{-1}) = ℓ(w) - ℓ(ϖ). Only nonzero entries are stored.
BHCoefficients bh_coefficients(const SignedPermutation& w);

}  // namespace spschub
