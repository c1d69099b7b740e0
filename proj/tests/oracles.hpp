#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the algorithm it is meant to check; the library types are used
// as plain containers.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "spschub/numeric.hpp"
#include "spschub/poly.hpp"
#include "spschub/symplectic.hpp"
#include "spschub/weyl.hpp"

namespace oracle {

using spschub::Integer;
using spschub::MultiPoly;
using spschub::Rational;
using Entries = std::vector<int>;

// --- signed permutations as raw vectors ---

Entries identity(int n);
/// Right multiplication by s_a: s_0 negates the first entry, s_a swaps a, a+1.
Entries times_generator(Entries w, int a);
/// Distance from the identity in the Cayley graph, by breadth-first search.
std::map<Entries, int> bfs_lengths(int n);
/// Every word of length ℓ(w) that spells w, found by walking the Cayley graph.
std::vector<spschub::Word> reduced_words(const Entries& w, const std::map<Entries, int>& lengths);
/// phi(w) in S_{2n}, from its defining formula on 1..n and the symmetry
/// phi(w)(2n+1-i) = 2n+1 - phi(w)(i).
std::vector<int> phi(const Entries& w);

// --- Kraśkiewicz tableaux straight from the definition ---

bool is_unimodal(const std::vector<int>& a);
/// Maximum length of a unimodal subsequence, by trying all subsequences.
int longest_unimodal(const std::vector<int>& a);
/// Every partition of m, any number of parts.
std::vector<std::vector<int>> partitions(int m);
/// Tableau counts keyed by shape, for all shapes.
std::map<std::vector<int>, std::uint64_t> kraskiewicz(const Entries& u,
                                                      const std::map<Entries, int>& lengths);

// --- polynomials ---

/// s_i f with the variables permuted by hand.
MultiPoly reflect(int i, const MultiPoly& f);
/// ∂_i from the closed formula on monomials.
MultiPoly divided_difference(int i, const MultiPoly& f);
/// ∂_{a_1} ∘ ... ∘ ∂_{a_r}.
MultiPoly divided_difference(const spschub::Word& word, const MultiPoly& f);
/// e_k(X_n) as a sum over k-subsets.
MultiPoly elementary(int k, int n);
/// Q̃_λ(X_n) with the Pfaffian summed over perfect matchings.
MultiPoly qtilde(const std::vector<int>& lambda, int n);

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
MultiPoly random_poly(std::mt19937_64& rng, int n, int max_degree, int terms, int coeff_bound = 5);
MultiPoly random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms,
                             int coeff_bound = 5);

/// All monomials of degree d in n variables.
std::vector<spschub::Monomial> monomials(int n, int d);

// --- linear algebra over Q ---

using Matrix = std::vector<std::vector<Rational>>;
int rank(Matrix m);
/// Solves A c = b for square invertible A; empty result if singular.
std::vector<Rational> solve(Matrix a, std::vector<Rational> b);

/// Expansion of a homogeneous h by one dense solve over the monomials of its
/// degree, against every basis element of that degree.
spschub::CExpansion expand_dense(const MultiPoly& h);

}  // namespace oracle
