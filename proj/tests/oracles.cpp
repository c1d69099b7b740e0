#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <utility>

namespace oracle {

using spschub::Monomial;

Entries identity(int n) {
  Entries e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return e;
}

Entries times_generator(Entries w, int a) {
  if (a == 0)
    w[0] = -w[0];
  else
    std::swap(w[a - 1], w[a]);
  return w;
}

std::map<Entries, int> bfs_lengths(int n) {
  std::map<Entries, int> dist;
  std::deque<Entries> queue{identity(n)};
  dist[identity(n)] = 0;
  while (!queue.empty()) {
    const Entries w = queue.front();
    queue.pop_front();
    for (int a = 0; a < n; ++a) {
      Entries v = times_generator(w, a);
      if (dist.emplace(v, dist[w] + 1).second) queue.push_back(std::move(v));
    }
  }
  return dist;
}

std::vector<spschub::Word> reduced_words(const Entries& w, const std::map<Entries, int>& lengths) {
  const int n = static_cast<int>(w.size());
  std::vector<spschub::Word> out;
  spschub::Word word;
  // walk down from w: w = v s_a with ℓ(v) = ℓ(w) - 1
  std::function<void(const Entries&)> down = [&](const Entries& v) {
    const int l = lengths.at(v);
    if (l == 0) {
      out.emplace_back(word.rbegin(), word.rend());
      return;
    }
    for (int a = 0; a < n; ++a) {
      const Entries u = times_generator(v, a);
      if (lengths.at(u) != l - 1) continue;
      word.push_back(a);
      down(u);
      word.pop_back();
    }
  };
  down(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> phi(const Entries& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(2 * n);
  for (int i = 1; i <= n; ++i) {
    const int v = w[n - i];
    out[i - 1] = v > 0 ? n + 1 - v : n - v;
  }
  for (int i = 1; i <= n; ++i) out[2 * n - i] = 2 * n + 1 - out[i - 1];
  return out;
}

bool is_unimodal(const std::vector<int>& a) {
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] > a[i]) ++i;
  while (i < a.size() && a[i - 1] < a[i]) ++i;
  return i >= a.size();
}

int longest_unimodal(const std::vector<int>& a) {
  const std::size_t m = a.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) sub.push_back(a[i]);
    if (static_cast<int>(sub.size()) > best && is_unimodal(sub)) best = static_cast<int>(sub.size());
  }
  return best;
}

std::vector<std::vector<int>> partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::map<std::vector<int>, std::uint64_t> kraskiewicz(const Entries& u,
                                                      const std::map<Entries, int>& lengths) {
  std::map<std::vector<int>, std::uint64_t> out;
  const int l = lengths.at(u);
  const auto words = reduced_words(u, lengths);
  for (const auto& lambda : partitions(l)) {
    std::uint64_t count = 0;
    for (const auto& word : words) {
      // the word reads t_r ... t_1, row i having λ_i letters
      bool ok = true;
      std::size_t pos = 0;
      for (int i = static_cast<int>(lambda.size()) - 1; i >= 0 && ok; --i) {
        const std::size_t end = pos + lambda[i];
        const std::vector<int> row(word.begin() + pos, word.begin() + end);
        const std::vector<int> prefix(word.begin(), word.begin() + end);
        ok = is_unimodal(row) && longest_unimodal(prefix) == lambda[i];
        pos = end;
      }
      if (ok) ++count;
    }
    if (count) out[lambda] = count;
  }
  if (l == 0) out[{}] = 1;
  return out;
}

MultiPoly reflect(int i, const MultiPoly& f) {
  MultiPoly out(f.rank());
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    Integer coeff = c;
    if (i == 0) {
      if (m[0] % 2) coeff = -coeff;
    } else {
      std::swap(r[i - 1], r[i]);
    }
    out.add_term(r, coeff);
  }
  return out;
}

MultiPoly divided_difference(int i, const MultiPoly& f) {
  MultiPoly out(f.rank());
  for (const auto& [m, c] : f.terms()) {
    if (i == 0) {
      // (x^a - (-x)^a) / 2x
      if (m[0] % 2 == 0) continue;
      Monomial r = m;
      r[0] -= 1;
      out.add_term(r, c);
      continue;
    }
    const int a = m[i - 1], b = m[i];
    if (a == b) continue;
    // x^a y^b -> x^b y^b (x^{a-b} - y^{a-b}) / (x - y), and the mirror case
    const int lo = std::min(a, b), d = std::abs(a - b);
    const Integer sign = a > b ? 1 : -1;
    for (int k = 0; k < d; ++k) {
      Monomial r = m;
      r[i - 1] = static_cast<std::uint8_t>(lo + d - 1 - k);
      r[i] = static_cast<std::uint8_t>(lo + k);
      out.add_term(r, c * sign);
    }
  }
  return out;
}

MultiPoly divided_difference(const spschub::Word& word, const MultiPoly& f) {
  MultiPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = oracle::divided_difference(*it, out);
  return out;
}

MultiPoly elementary(int k, int n) {
  MultiPoly out(n);
  if (k < 0) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Monomial m;
    for (int i = 0; i < n && i < spschub::kMaxRank; ++i)
      if (mask >> i & 1) m[i] = 1;
    out.add_term(m, 1);
  }
  return out;
}

namespace {

MultiPoly q_pair(int i, int j, int n) {
  MultiPoly out = elementary(i, n) * elementary(j, n);
  for (int r = 1; r <= j; ++r) {
    MultiPoly t = elementary(i + r, n) * elementary(j - r, n) * Integer(2);
    out += r % 2 ? -t : t;
  }
  return out;
}

void matchings(std::vector<int> free, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free.empty()) {
    out.push_back(cur);
    return;
  }
  const int a = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < free.size(); ++t)
      if (t != k) rest.push_back(free[t]);
    cur.emplace_back(a, free[k]);
    matchings(rest, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MultiPoly qtilde(const std::vector<int>& lambda, int n) {
  std::vector<int> parts = lambda;
  if (parts.empty()) return MultiPoly::constant(n, 1);
  if (parts.size() == 1) return elementary(parts[0], n);
  if (parts.size() % 2) parts.push_back(0);
  const int size = static_cast<int>(parts.size());
  std::vector<int> all(size);
  for (int i = 0; i < size; ++i) all[i] = i;
  std::vector<std::vector<std::pair<int, int>>> ms;
  std::vector<std::pair<int, int>> cur;
  matchings(all, cur, ms);
  MultiPoly out(n);
  for (const auto& m : ms) {
    int crossings = 0;
    for (const auto& [a, b] : m)
      for (const auto& [c, d] : m)
        if (a < c && c < b && b < d) ++crossings;
    MultiPoly term = MultiPoly::constant(n, crossings % 2 ? -1 : 1);
    for (const auto& [a, b] : m) term = term * q_pair(parts[a], parts[b], n);
    out += term;
  }
  return out;
}

MultiPoly random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> var(0, n - 1);
  MultiPoly out(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < degree; ++k) m[var(rng)] += 1;
    out.add_term(m, coeff(rng));
  }
  return out;
}

MultiPoly random_poly(std::mt19937_64& rng, int n, int max_degree, int terms, int coeff_bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  MultiPoly out(n);
  for (int t = 0; t < terms; ++t) out += random_homogeneous(rng, n, deg(rng), 1, coeff_bound);
  return out;
}

std::vector<Monomial> monomials(int n, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<std::uint8_t>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

int rank(Matrix m) {
  int r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

spschub::CExpansion expand_dense(const MultiPoly& h) {
  using spschub::CIndex;
  const int n = h.rank();
  const int d = h.degree();
  spschub::CExpansion out;
  if (d < 0) return out;
  std::vector<CIndex> basis;
  for (const auto& w : spschub::hyperoctahedral_group(n))
    if (spschub::length(w) == d) basis.push_back(CIndex::schubert(w));
  for (const auto& pi : spschub::symmetric_group(n)) {
    const int rest = d - spschub::length(pi);
    if (rest < 0) continue;
    for (const auto& lambda : spschub::partitions_bounded(rest, n))
      if (!lambda.is_strict()) basis.push_back(CIndex::pair(lambda, pi));
  }
  const auto mons = monomials(n, d);
  if (basis.size() != mons.size()) return out;
  Matrix a(mons.size(), std::vector<Rational>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const MultiPoly p = spschub::basis_polynomial(basis[j]);
    for (std::size_t i = 0; i < mons.size(); ++i) a[i][j] = p.coefficient(mons[i]);
  }
  std::vector<Rational> b(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) b[i] = h.coefficient(mons[i]);
  const auto c = solve(a, b);
  if (c.empty()) return out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (c[j] == 0) continue;
    if (c[j].get_den() != 1) return {};
    out[basis[j]] = c[j].get_num();
  }
  return out;
}

}  // namespace oracle
