#include "spschub/poly.hpp"

#include <sstream>

#include "spschub/error.hpp"

namespace spschub {

Monomial Monomial::variable(int i) {
  Monomial m;
  m[i] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (int i = 0; i < kMaxRank; ++i) {
    const int e = exp_[i] + rhs.exp_[i];
    if (e > 255) fail(ErrorCode::InvalidArgument, "exponent overflow (max 255)");
    m.exp_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::MultiPoly(int n) : rank_(n) {
  require(n >= 0 && n <= kMaxRank, "rank must be in 0.." + std::to_string(kMaxRank));
}

MultiPoly MultiPoly::constant(int n, const Integer& c) {
  MultiPoly p(n);
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
  require(i >= 1 && i <= n, "variable index out of range");
  MultiPoly p(n);
  p.add_term(Monomial::variable(i - 1), 1);
  return p;
}

MultiPoly MultiPoly::monomial(int n, const Monomial& m, const Integer& c) {
  for (int i = n; i < kMaxRank; ++i) require(m[i] == 0, "monomial uses a variable beyond rank");
  MultiPoly p(n);
  p.add_term(m, c);
  return p;
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(rank_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require(rank_ == rhs.rank_, "rank mismatch in polynomial sum");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require(rank_ == rhs.rank_, "rank mismatch in polynomial difference");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require(a.rank_ == b.rank_, "rank mismatch in polynomial product");
  MultiPoly out(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(rank_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::negate_variables() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_)
    if (m.degree() % 2) c = -c;
  return out;
}

MultiPoly MultiPoly::truncate(int m) const {
  require(m >= 0 && m <= rank_, "truncation rank out of range");
  MultiPoly out(m);
  for (const auto& [mono, c] : terms_) {
    bool keep = true;
    for (int i = m; i < rank_; ++i) keep = keep && mono[i] == 0;
    if (keep) out.add_term(mono, c);
  }
  return out;
}

MultiPoly MultiPoly::extend(int n) const {
  require(n >= rank_, "cannot extend to a smaller rank");
  MultiPoly out(n);
  out.terms_ = terms_;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool constant_term = m.degree() == 0;
    bool need_star = false;
    if (constant_term || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < rank_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (m[i] > 1) os << '^' << static_cast<int>(m[i]);
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly elementary(int k, int n) {
  MultiPoly out(n);
  if (n > kMaxRank) return out;
  if (k < 0 || k > n) return out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) m[i] = 1;
    out.add_term(m, 1);
  }
  return out;
}

MultiPoly elementary_squares(int k, int n) {
  MultiPoly out(n);
  const MultiPoly e = elementary(k, n);
  for (const auto& [m, c] : e.terms()) {
    Monomial sq;
    for (int i = 0; i < n; ++i) sq[i] = static_cast<std::uint8_t>(2 * m[i]);
    out.add_term(sq, c);
  }
  return out;
}

MultiPoly power_sum(int k, int n) {
  require(k >= 0, "power sum index must be nonnegative");
  if (k == 0) return MultiPoly::constant(n, n);
  MultiPoly out(n);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    m[i] = static_cast<std::uint8_t>(k);
    out.add_term(m, 1);
  }
  return out;
}

MultiPoly weyl_action(const SignedPermutation& w, const MultiPoly& f) {
  require(w.rank() == f.rank(), "rank mismatch in Weyl group action");
  const int n = f.rank();
  MultiPoly out(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial image;
    int sign_exponent = 0;
    for (int i = 0; i < n; ++i) {
      const int v = w[i];
      const int target = (v > 0 ? v : -v) - 1;
      image[target] = m[i];
      if (v < 0) sign_exponent += m[i];
    }
    out.add_term(image, sign_exponent % 2 ? Integer(-c) : c);
  }
  return out;
}

namespace {

// (f - s_0 f) / (2 x_1): only odd powers of x_1 survive, each doubled.
MultiPoly divided_difference_zero(const MultiPoly& f) {
  MultiPoly out(f.rank());
  for (const auto& [m, c] : f.terms()) {
    if (m[0] % 2 == 0) continue;
    Monomial q = m;
    q[0] -= 1;
    out.add_term(q, c);  // (2c) / 2
  }
  return out;
}

// (f - s_i f) / (x_i - x_{i+1}) by synthetic division in x_i over the ring
// of polynomials in the remaining variables.
MultiPoly divided_difference_type_a(int i, const MultiPoly& f) {
  const int n = f.rank();
  const MultiPoly g = f - weyl_action(SignedPermutation::generator(i, n), f);
  if (g.is_zero()) return MultiPoly(n);
  const int xi = i - 1;
  std::map<int, MultiPoly> by_power;  // coefficient polynomials G_k of x_i^k
  int top = 0;
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m;
    const int k = rest[xi];
    rest[xi] = 0;
    auto it = by_power.try_emplace(k, MultiPoly(n)).first;
    it->second.add_term(rest, c);
    top = std::max(top, k);
  }
  const MultiPoly next_var = MultiPoly::variable(n, i + 1);
  MultiPoly out(n);
  MultiPoly carry(n);  // q_k
  for (int k = top; k >= 1; --k) {
    MultiPoly qk = carry * next_var;
    if (auto it = by_power.find(k); it != by_power.end()) qk += it->second;
    for (const auto& [m, c] : qk.terms()) {
      Monomial shifted = m;
      shifted[xi] = static_cast<std::uint8_t>(k - 1);
      out.add_term(shifted, c);
    }
    carry = std::move(qk);
  }
  MultiPoly remainder = carry * next_var;
  if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
  check_internal(remainder.is_zero(), "divided difference left a remainder");
  return out;
}

}  // namespace

MultiPoly divided_difference(int i, const MultiPoly& f) {
  require(i >= 0 && i < f.rank(), "divided difference index out of range");
  return i == 0 ? divided_difference_zero(f) : divided_difference_type_a(i, f);
}

MultiPoly divided_difference_word(const Word& word, const MultiPoly& f) {
  require(is_reduced(word, f.rank()), "divided difference word must be reduced");
  MultiPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(*it, out);
  return out;
}

MultiPoly divided_difference(const SignedPermutation& w, const MultiPoly& f) {
  require(w.rank() == f.rank(), "rank mismatch in divided difference");
  return divided_difference_word(first_reduced_word(w), f);
}

}  // namespace spschub
