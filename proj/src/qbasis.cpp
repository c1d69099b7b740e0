#include "spschub/qbasis.hpp"

#include <algorithm>

#include "memo.hpp"
#include "spschub/error.hpp"

namespace spschub {

namespace {

detail::Memo<std::pair<int, Partition>, MultiPoly>& qtilde_memo() {
  static detail::Memo<std::pair<int, Partition>, MultiPoly> memo;
  return memo;
}

MultiPoly q_single(int k, int n) {
  if (k < 0) return MultiPoly(n);
  return elementary(k, n);
}

// Q̃_{i,j} = Q̃_i Q̃_j + 2 Σ_{r=1}^{j} (-1)^r Q̃_{i+r} Q̃_{j-r}
MultiPoly q_two_row(int i, int j, int n) {
  MultiPoly out = q_single(i, n) * q_single(j, n);
  for (int r = 1; r <= j; ++r) {
    if (i + r > n) break;
    MultiPoly term = q_single(i + r, n) * q_single(j - r, n);
    term *= Integer(r % 2 ? -2 : 2);
    out += term;
  }
  return out;
}

MultiPoly qtilde_uncached(const Partition& lambda, int n) {
  if (lambda.largest() > n) return MultiPoly(n);
  if (lambda.length() <= 1) return q_single(lambda[0], n);
  if (lambda.length() == 2) return q_two_row(lambda[0], lambda[1], n);

  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (parts.size() % 2) parts.push_back(0);
  // Pfaffian expanded along the first row; every minor is again a Q̃.
  MultiPoly out(n);
  for (std::size_t j = 1; j < parts.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < parts.size(); ++k)
      if (k != j) rest.push_back(parts[k]);
    MultiPoly minor = qtilde(Partition(std::move(rest)), n);
    if (minor.is_zero()) continue;
    MultiPoly term = qtilde(Partition({parts[0], parts[j]}), n) * minor;
    // (-1)^{j'} with one-based column j' = j + 1
    if (j % 2 == 0) term = -term;
    out += term;
  }
  return out;
}

}  // namespace

MultiPoly qtilde(const Partition& lambda, int n) {
  require(n >= 1 && n <= kMaxRank, "rank out of range");
  return qtilde_memo().get({n, lambda}, [&] { return qtilde_uncached(lambda, n); });
}

MultiPoly schubert_a(const SignedPermutation& varpi) {
  require(varpi.is_unsigned(), "type A Schubert polynomial needs an unsigned permutation");
  static detail::Memo<SignedPermutation, MultiPoly> memo;
  return memo.get(varpi, [&] {
    const int n = varpi.rank();
    Monomial top;
    for (int i = 0; i + 1 < n; ++i) top[i] = static_cast<std::uint8_t>(n - 1 - i);
    const MultiPoly seed = MultiPoly::monomial(n, top);
    const auto shift = varpi.inverse() * SignedPermutation::longest_unsigned(n);
    return divided_difference(shift, seed);
  });
}

int longest_unimodal(std::span<const int> letters) {
  const std::size_t m = letters.size();
  std::vector<int> dec(m, 1), uni(m, 1);
  int best = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (letters[j] > letters[i]) dec[i] = std::max(dec[i], dec[j] + 1);
      if (letters[j] < letters[i]) uni[i] = std::max(uni[i], uni[j] + 1);
    }
    uni[i] = std::max(uni[i], dec[i]);
    best = std::max(best, uni[i]);
  }
  return best;
}

namespace {

// Depth-first construction of the row word t_r ... t_1 from the left.
class TableauSearch {
 public:
  explicit TableauSearch(const SignedPermutation& u)
      : u_(u), total_(length(u)), prefix_(SignedPermutation::identity(u.rank())) {}

  std::map<Partition, std::uint64_t> run() {
    if (total_ == 0) {
      shapes_[Partition()] = 1;
      return shapes_;
    }
    extend();
    return std::move(shapes_);
  }

 private:
  void extend() {
    const int pos = static_cast<int>(word_.size());
    const int row_len = pos - row_start_;
    if (pos == total_) {
      if (row_is_maximal()) record();
      return;
    }
    // close the current row and open a new one
    if (row_len > 0 && row_is_maximal()) {
      rows_.push_back(row_len);
      const int saved = row_start_;
      row_start_ = pos;
      extend();
      row_start_ = saved;
      rows_.pop_back();
    }
    for (int a = 0; a < u_.rank(); ++a) {
      if (!fits_row(a)) continue;
      const SignedPermutation next = prefix_.times_generator(a);
      if (length(next) != pos + 1) continue;
      if (length(next.inverse() * u_) != total_ - pos - 1) continue;
      const SignedPermutation saved = prefix_;
      prefix_ = next;
      word_.push_back(a);
      extend();
      word_.pop_back();
      prefix_ = saved;
    }
  }

  bool fits_row(int a) const {
    const int pos = static_cast<int>(word_.size());
    if (pos - row_start_ == 0) return true;
    const int last = word_.back();
    if (a == last) return false;
    // once the row has started rising it must keep rising
    bool rising = false;
    for (int k = row_start_ + 1; k < pos; ++k)
      if (word_[k] > word_[k - 1]) rising = true;
    return rising ? a > last : true;
  }

  bool row_is_maximal() const {
    return longest_unimodal(word_) == static_cast<int>(word_.size()) - row_start_;
  }

  void record() {
    // rows_ lists t_r, t_{r-1}, ...; the last row built is t_1
    std::vector<int> shape;
    shape.push_back(static_cast<int>(word_.size()) - row_start_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) shape.push_back(*it);
    ++shapes_[Partition(std::move(shape))];
  }

  const SignedPermutation& u_;
  const int total_;
  SignedPermutation prefix_;
  Word word_;
  int row_start_ = 0;
  std::vector<int> rows_;
  std::map<Partition, std::uint64_t> shapes_;
};

}  // namespace

std::map<Partition, std::uint64_t> kraskiewicz_shapes(const SignedPermutation& u) {
  static detail::Memo<SignedPermutation, std::map<Partition, std::uint64_t>> memo;
  return memo.get(u, [&] { return TableauSearch(u).run(); });
}

std::uint64_t kraskiewicz_count(const SignedPermutation& u, const Partition& lambda) {
  if (lambda.weight() != length(u)) return 0;
  const auto shapes = kraskiewicz_shapes(u);
  auto it = shapes.find(lambda);
  return it == shapes.end() ? 0 : it->second;
}

BHCoefficients bh_coefficients(const SignedPermutation& w) {
  const int n = w.rank();
  const int lw = length(w);
  BHCoefficients out;
  for (const auto& varpi : symmetric_group(n)) {
    const SignedPermutation u = w * varpi.inverse();
    if (length(u) != lw - length(varpi)) continue;
    for (const auto& [shape, count] : kraskiewicz_shapes(u)) out[{shape, varpi}] = count;
  }
  return out;
}

}  // namespace spschub
