#include "spschub/symplectic.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "linalg.hpp"
#include "memo.hpp"
#include "spschub/error.hpp"
#include "spschub/qbasis.hpp"

namespace spschub {

CIndex CIndex::schubert(SignedPermutation w) {
  CIndex out;
  out.kind = Kind::Schubert;
  out.w = std::move(w);
  return out;
}

CIndex CIndex::pair(Partition lambda, SignedPermutation pi) {
  require(pi.is_unsigned(), "basis index needs an unsigned permutation");
  require(!lambda.is_strict(), "pair basis index needs a non-strict partition");
  require(lambda.largest() <= pi.rank(), "partition part exceeds the rank");
  CIndex out;
  out.kind = Kind::Pair;
  out.lambda = std::move(lambda);
  out.pi = std::move(pi);
  return out;
}

int CIndex::degree() const {
  return is_schubert() ? length(w) : lambda.weight() + length(pi);
}

std::string CIndex::to_string() const {
  if (is_schubert()) return "C[" + w.to_string() + "]";
  return "C[" + lambda.to_string() + "; " + pi.to_string() + "]";
}

void add_to(CExpansion& acc, const CExpansion& e, const Integer& scale) {
  for (const auto& [index, c] : e) {
    auto [it, inserted] = acc.try_emplace(index, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) acc.erase(it);
    } else if (it->second == 0) {
      acc.erase(it);
    }
  }
}

MultiPoly c_pair(const Partition& lambda, const SignedPermutation& pi) {
  const int n = pi.rank();
  require(lambda.largest() <= n, "partition part exceeds the rank");
  MultiPoly out = qtilde(lambda, n) * schubert_a(pi);
  if (length(pi) % 2) out = -out;
  return out;
}

MultiPoly schubert_c(const SignedPermutation& w) {
  static detail::Memo<SignedPermutation, MultiPoly> memo;
  return memo.get(w, [&] {
    MultiPoly out(w.rank());
    for (const auto& [key, count] : bh_coefficients(w)) {
      if (key.first.largest() > w.rank()) continue;  // Q̃_λ(X_n) = 0
      MultiPoly term = c_pair(key.first, key.second);
      term *= Integer(static_cast<unsigned long>(count));
      out += term;
    }
    return out;
  });
}

MultiPoly basis_polynomial(const CIndex& index) {
  return index.is_schubert() ? schubert_c(index.w) : c_pair(index.lambda, index.pi);
}

namespace {

using detail::RationalMatrix;

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int k = 1; k <= p.largest(); ++k) {
    int count = 0;
    for (int part : p.parts())
      if (part >= k) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Monomial monomial_of(const Partition& mu) {
  Monomial m;
  for (int i = 0; i < mu.length(); ++i) m[i] = static_cast<std::uint8_t>(mu[i]);
  return m;
}

// Q̃_λ, λ_1 <= n, |λ| = k, against the dominant monomials x^μ.
struct SymmetricBlock {
  std::vector<Partition> qindex;
  std::vector<Partition> rows;
  RationalMatrix inverse;
};

std::shared_ptr<const SymmetricBlock> symmetric_block(int n, int k) {
  static detail::Memo<std::pair<int, int>, std::shared_ptr<const SymmetricBlock>> memo;
  return memo.get({n, k}, [&] {
    auto block = std::make_shared<SymmetricBlock>();
    block->qindex = partitions_bounded(k, n);
    for (const auto& p : block->qindex) block->rows.push_back(conjugate(p));
    std::sort(block->rows.begin(), block->rows.end());
    const std::size_t size = block->qindex.size();
    RationalMatrix m(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t c = 0; c < size; ++c) {
      const MultiPoly q = qtilde(block->qindex[c], n);
      for (std::size_t r = 0; r < size; ++r)
        m[r][c] = Rational(q.coefficient(monomial_of(block->rows[r])));
    }
    block->inverse = detail::invert_exact(std::move(m));
    return std::shared_ptr<const SymmetricBlock>(block);
  });
}

// Coefficients of a symmetric polynomial in the Q̃_λ, λ_1 <= n.
std::map<Partition, Integer> expand_symmetric(const MultiPoly& s) {
  const int n = s.rank();
  std::map<Partition, Integer> out;
  if (s.is_zero()) return out;
  for (int k = 0; k <= s.degree(); ++k) {
    const MultiPoly part = s.homogeneous_part(k);
    if (part.is_zero()) continue;
    const auto block = symmetric_block(n, k);
    const std::size_t size = block->qindex.size();
    std::vector<Rational> rhs(size);
    for (std::size_t r = 0; r < size; ++r)
      rhs[r] = Rational(part.coefficient(monomial_of(block->rows[r])));
    for (std::size_t c = 0; c < size; ++c) {
      Rational v = 0;
      for (std::size_t r = 0; r < size; ++r)
        if (rhs[r] != 0 && block->inverse[c][r] != 0) v += block->inverse[c][r] * rhs[r];
      if (v == 0) continue;
      check_internal(v.get_den() == 1, "non-integral Q-tilde coefficient");
      out[block->qindex[c]] = v.get_num();
    }
  }
  return out;
}

// h = Σ_ϖ s_ϖ 𝔖_ϖ with s_ϖ symmetric, peeled off from the longest ϖ down.
std::map<SignedPermutation, MultiPoly> split_over_schubert_a(const MultiPoly& h) {
  const int n = h.rank();
  auto perms = symmetric_group(n);
  std::stable_sort(perms.begin(), perms.end(), [](const auto& a, const auto& b) {
    return length(a) > length(b);
  });
  std::map<SignedPermutation, MultiPoly> out;
  MultiPoly rest = h;
  for (const auto& varpi : perms) {
    if (rest.is_zero()) break;
    MultiPoly s = divided_difference(varpi, rest);
    if (s.is_zero()) continue;
    rest -= s * schubert_a(varpi);
    out.emplace(varpi, std::move(s));
  }
  check_internal(rest.is_zero(), "Schubert splitting left a remainder");
  return out;
}

// e^w_{λ,ϖ} for strict λ as a square matrix in each degree, inverted.
struct StrictBlock {
  std::vector<SignedPermutation> elements;
  std::vector<std::pair<Partition, SignedPermutation>> pairs;
  RationalMatrix inverse;  // elements x pairs
};

struct StrictTable {
  std::map<int, StrictBlock> blocks;
  std::map<std::pair<Partition, SignedPermutation>, std::pair<int, std::size_t>> locate;
};

std::shared_ptr<const StrictTable> strict_table(int n) {
  static detail::Memo<int, std::shared_ptr<const StrictTable>> memo;
  return memo.get(n, [&] {
    auto table = std::make_shared<StrictTable>();
    for (const auto& w : hyperoctahedral_group(n)) table->blocks[length(w)].elements.push_back(w);
    for (const auto& lambda : strict_partitions(n))
      for (const auto& pi : symmetric_group(n)) {
        auto& block = table->blocks[lambda.weight() + length(pi)];
        table->locate[{lambda, pi}] = {lambda.weight() + length(pi), block.pairs.size()};
        block.pairs.emplace_back(lambda, pi);
      }
    for (auto& [d, block] : table->blocks) {
      const std::size_t size = block.elements.size();
      check_internal(size == block.pairs.size(), "strict basis count mismatch");
      RationalMatrix m(size, std::vector<Rational>(size, Rational(0)));
      for (std::size_t c = 0; c < size; ++c)
        for (const auto& [key, count] : bh_coefficients(block.elements[c])) {
          if (key.first.largest() > n) continue;
          const auto& [deg, r] = table->locate.at(key);
          check_internal(deg == d, "e-coefficient in the wrong degree");
          m[r][c] = Rational(Integer(static_cast<unsigned long>(count)));
        }
      block.inverse = detail::invert_exact(std::move(m));
    }
    return std::shared_ptr<const StrictTable>(table);
  });
}

}  // namespace

CExpansion expand(const MultiPoly& h) {
  const int n = h.rank();
  require(n >= 1, "expansion needs rank at least 1");
  CExpansion out;
  if (h.is_zero()) return out;
  std::map<std::pair<Partition, SignedPermutation>, Integer> strict;
  for (const auto& [varpi, s] : split_over_schubert_a(h)) {
    const bool odd = length(varpi) % 2;
    for (const auto& [lambda, q] : expand_symmetric(s)) {
      const Integer c = odd ? Integer(-q) : q;
      if (lambda.is_strict())
        strict[{lambda, varpi}] = c;
      else
        out[CIndex::pair(lambda, varpi)] = c;
    }
  }
  if (strict.empty()) return out;
  const auto table = strict_table(n);
  std::map<int, std::vector<Rational>> rhs;
  for (const auto& [key, c] : strict) {
    const auto& [deg, r] = table->locate.at(key);
    auto& vec = rhs[deg];
    if (vec.empty()) vec.assign(table->blocks.at(deg).pairs.size(), Rational(0));
    vec[r] = Rational(c);
  }
  for (const auto& [deg, vec] : rhs) {
    const auto& block = table->blocks.at(deg);
    for (std::size_t i = 0; i < block.elements.size(); ++i) {
      Rational v = 0;
      for (std::size_t r = 0; r < vec.size(); ++r)
        if (vec[r] != 0 && block.inverse[i][r] != 0) v += block.inverse[i][r] * vec[r];
      if (v == 0) continue;
      check_internal(v.get_den() == 1, "non-integral Schubert coefficient");
      out[CIndex::schubert(block.elements[i])] = v.get_num();
    }
  }
  return out;
}

MultiPoly reconstruct(const CExpansion& e, int n) {
  MultiPoly out(n);
  for (const auto& [index, c] : e) {
    require(index.rank() == n, "rank mismatch in expansion");
    out += basis_polynomial(index) * c;
  }
  return out;
}

CExpansion structure_constants(const SignedPermutation& u, const SignedPermutation& v) {
  require(u.rank() == v.rank(), "rank mismatch in product");
  return expand(schubert_c(u) * schubert_c(v));
}

CExpansion structure_constants_termwise(const SignedPermutation& u,
                                        const SignedPermutation& v) {
  require(u.rank() == v.rank(), "rank mismatch in product");
  CExpansion out;
  const auto eu = bh_coefficients(u);
  const auto ev = bh_coefficients(v);
  for (const auto& [a, ca] : eu)
    for (const auto& [b, cb] : ev) {
      if (a.first.largest() > u.rank() || b.first.largest() > u.rank()) continue;
      const MultiPoly product = c_pair(a.first, a.second) * c_pair(b.first, b.second);
      add_to(out, expand(product), Integer(static_cast<unsigned long>(ca * cb)));
    }
  return out;
}

MultiPoly scalar_product(const MultiPoly& f, const MultiPoly& g) {
  require(f.rank() == g.rank(), "rank mismatch in scalar product");
  const int n = f.rank();
  // No (-1)^{n(n-1)/2} prefactor: with ∂_0 f = (f - s_0 f)/2x_1 already
  // ∂_{w_0}(𝔠_{w_0}) = 1, and the prefactor would flip both orthogonality
  // relations for n = 2, 3.
  return divided_difference(SignedPermutation::longest(n), f * g);
}

IdealMembership ideal_membership(const MultiPoly& h) {
  IdealMembership out;
  out.member = true;
  for (auto& [index, c] : expand(h)) {
    if (index.is_schubert())
      out.member = false;
    else
      out.witness.emplace(index, c);
  }
  return out;
}

}  // namespace spschub
