#include "spschub/forms.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <sstream>

#include "memo.hpp"
#include "spschub/error.hpp"

namespace spschub {

namespace {

void require_rank(int n) {
  require(n >= 1 && n <= kMaxFormRank,
          "form rank must be in 1.." + std::to_string(kMaxFormRank));
}

}  // namespace

std::string OneForm::token() const {
  switch (kind) {
    case SymbolKind::Lower:
      return "W_" + std::to_string(i) + std::to_string(j);
    case SymbolKind::LowerBar:
      return "Wb_" + std::to_string(i) + std::to_string(j);
    case SymbolKind::Upper:
      return "W^" + std::to_string(i) + std::to_string(j);
    case SymbolKind::UpperBar:
      return "Wb^" + std::to_string(i) + std::to_string(j);
    case SymbolKind::Cartan:
      return "H_" + std::to_string(i);
  }
  return {};
}

OneForm OneForm::parse(const std::string& token) {
  auto digits = [&](std::size_t from, std::size_t count) {
    if (token.size() != from + count) fail(ErrorCode::Parse, "bad form token '" + token + "'");
    std::array<int, 2> out{0, 0};
    for (std::size_t k = 0; k < count; ++k) {
      const char ch = token[from + k];
      if (ch < '1' || ch > '9') fail(ErrorCode::Parse, "bad form token '" + token + "'");
      out[k] = ch - '0';
    }
    return out;
  };
  auto starts = [&](const char* prefix) { return token.rfind(prefix, 0) == 0; };
  if (starts("Wb_")) {
    auto d = digits(3, 2);
    return {SymbolKind::LowerBar, d[0], d[1]};
  }
  if (starts("Wb^")) {
    auto d = digits(3, 2);
    return {SymbolKind::UpperBar, std::min(d[0], d[1]), std::max(d[0], d[1])};
  }
  if (starts("W_")) {
    auto d = digits(2, 2);
    return {SymbolKind::Lower, d[0], d[1]};
  }
  if (starts("W^")) {
    auto d = digits(2, 2);
    return {SymbolKind::Upper, std::min(d[0], d[1]), std::max(d[0], d[1])};
  }
  if (starts("H_")) {
    auto d = digits(2, 1);
    return {SymbolKind::Cartan, d[0], 0};
  }
  fail(ErrorCode::Parse, "unknown form token '" + token + "'");
}

FormLayout::FormLayout(int n) : n_(n) { require_rank(n); }

int FormLayout::lower_root(int i, int j) const {
  require(1 <= i && i < j && j <= n_, "index out of range for ω_ij");
  int r = 0;
  for (int a = 1; a < i; ++a) r += n_ - a;
  return r + (j - i - 1);
}

int FormLayout::upper_root(int p, int q) const {
  if (p > q) std::swap(p, q);
  require(1 <= p && q <= n_, "index out of range for ω^pq");
  int r = n_ * (n_ - 1) / 2;
  for (int a = 1; a < p; ++a) r += n_ - a + 1;
  return r + (q - p);
}

int FormLayout::bit(const OneForm& f) const {
  switch (f.kind) {
    case SymbolKind::Lower:
      return 2 * lower_root(f.i, f.j);
    case SymbolKind::LowerBar:
      return 2 * lower_root(f.i, f.j) + 1;
    case SymbolKind::Upper:
      return 2 * upper_root(f.i, f.j);
    case SymbolKind::UpperBar:
      return 2 * upper_root(f.i, f.j) + 1;
    case SymbolKind::Cartan:
      require(1 <= f.i && f.i <= n_, "Cartan index out of range");
      return 2 * root_count() + f.i - 1;
  }
  return -1;
}

OneForm FormLayout::symbol(int bit) const {
  require(bit >= 0 && bit < symbol_count(), "form symbol bit out of range");
  if (is_vertical(bit)) return {SymbolKind::Cartan, bit - 2 * root_count() + 1, 0};
  const int root = bit / 2;
  const bool bar = bit % 2;
  int r = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j, ++r)
      if (r == root) return {bar ? SymbolKind::LowerBar : SymbolKind::Lower, i, j};
  for (int p = 1; p <= n_; ++p)
    for (int q = p; q <= n_; ++q, ++r)
      if (r == root) return {bar ? SymbolKind::UpperBar : SymbolKind::Upper, p, q};
  check_internal(false, "root index out of range");
  return {};
}

std::uint64_t FormLayout::vertical_mask() const {
  return ((std::uint64_t{1} << n_) - 1) << (2 * root_count());
}

std::uint64_t FormLayout::top_mask() const {
  return (std::uint64_t{1} << (2 * root_count())) - 1;
}

std::uint64_t FormLayout::hol_mask() const {
  std::uint64_t m = 0;
  for (int r = 0; r < root_count(); ++r) m |= std::uint64_t{1} << (2 * r);
  return m;
}

int wedge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int swaps = 0;
  while (b) {
    const int bit = __builtin_ctzll(b);
    b &= b - 1;
    swaps += __builtin_popcountll(bit >= 63 ? 0 : a >> (bit + 1));
  }
  return swaps % 2 ? -1 : 1;
}

std::vector<std::string> monomial_tokens(int n, std::uint64_t mask) {
  const FormLayout layout(n);
  std::vector<std::string> out;
  bool paired = (mask & layout.vertical_mask()) == 0;
  for (int r = 0; paired && r < layout.root_count(); ++r) {
    const auto pair = (mask >> (2 * r)) & 3u;
    paired = pair == 0 || pair == 3;
  }
  if (paired) {
    for (int r = 0; r < layout.root_count(); ++r) {
      if (((mask >> (2 * r)) & 3u) == 0) continue;
      const OneForm f = layout.symbol(2 * r);
      out.push_back((f.kind == SymbolKind::Lower ? "O_" : "O^") + std::to_string(f.i) +
                    std::to_string(f.j));
    }
    return out;
  }
  for (int b = 0; b < layout.symbol_count(); ++b)
    if (mask >> b & 1u) out.push_back(layout.symbol(b).token());
  return out;
}

bool InvForm::KeyLess::operator()(const Key& a, const Key& b) const {
  const int pa = __builtin_popcountll(a.first), pb = __builtin_popcountll(b.first);
  if (pa != pb) return pa < pb;
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

InvForm::InvForm(int n) : n_(n) { require_rank(n); }

InvForm InvForm::scalar(int n, const Rational& c) {
  InvForm f(n);
  f.add_term(0, 0, c);
  return f;
}

InvForm InvForm::one_form(int n, const OneForm& sym) {
  InvForm f(n);
  f.add_term(std::uint64_t{1} << FormLayout(n).bit(sym), 0, 1);
  return f;
}

InvForm InvForm::omega_lower(int n, int i, int j) {
  const int r = FormLayout(n).lower_root(i, j);
  InvForm f(n);
  f.add_term(std::uint64_t{3} << (2 * r), 0, 1);
  return f;
}

InvForm InvForm::omega_upper(int n, int p, int q) {
  const int r = FormLayout(n).upper_root(p, q);
  InvForm f(n);
  f.add_term(std::uint64_t{3} << (2 * r), 0, 1);
  return f;
}

InvForm InvForm::top(int n) {
  InvForm f(n);
  f.add_term(FormLayout(n).top_mask(), 0, 1);
  return f;
}

Rational InvForm::coefficient(std::uint64_t mask, int gamma) const {
  auto it = terms_.find({mask, gamma});
  return it == terms_.end() ? Rational(0) : it->second;
}

void InvForm::add_term(std::uint64_t mask, int gamma, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({mask, gamma}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

InvForm& InvForm::operator+=(const InvForm& rhs) {
  if (n_ == 0) n_ = rhs.n_;
  require(rhs.n_ == 0 || n_ == rhs.n_, "rank mismatch in form sum");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

InvForm& InvForm::operator-=(const InvForm& rhs) {
  if (n_ == 0) n_ = rhs.n_;
  require(rhs.n_ == 0 || n_ == rhs.n_, "rank mismatch in form difference");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

InvForm& InvForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

InvForm InvForm::operator-() const {
  InvForm out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

InvForm operator*(const InvForm& a, const InvForm& b) {
  require(a.n_ == b.n_, "rank mismatch in wedge product");
  InvForm out(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const int s = wedge_sign(ka.first, kb.first);
      if (s == 0) continue;
      const Rational c = ca * cb;
      out.add_term(ka.first | kb.first, ka.second + kb.second, s > 0 ? c : Rational(-c));
    }
  return out;
}

InvForm InvForm::pow(unsigned e) const {
  InvForm result = scalar(n_, 1);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

InvForm InvForm::bidegree_part(int p, int q) const {
  const FormLayout layout(n_);
  const auto hol = layout.hol_mask();
  const auto antihol = layout.top_mask() & ~hol;
  InvForm out(n_);
  for (const auto& [k, c] : terms_) {
    if (k.first & layout.vertical_mask()) continue;
    if (__builtin_popcountll(k.first & hol) == p && __builtin_popcountll(k.first & antihol) == q)
      out.terms_.emplace(k, c);
  }
  return out;
}

bool InvForm::is_class_ready() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.second == 0; });
}

bool InvForm::has_vertical() const {
  if (terms_.empty()) return false;
  const auto v = FormLayout(n_).vertical_mask();
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return (t.first.first & v) != 0; });
}

int InvForm::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, __builtin_popcountll(k.first));
  return d;
}

std::string InvForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    if (k.second != 0) factors.push_back("g^" + std::to_string(k.second));
    for (auto& tok : monomial_tokens(n_, k.first)) factors.push_back(std::move(tok));
    bool need_star = false;
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& f : factors) {
      if (need_star) os << '*';
      os << f;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

using Matrix = std::vector<std::vector<long>>;

// (i,j) -> (n+1-j, n+1-i), (p,q) -> (n+1-q, n+1-p), k -> n+1-k; an involution.
OneForm relabel(const OneForm& f, int n) {
  if (f.kind == SymbolKind::Cartan) return {f.kind, n + 1 - f.i, 0};
  return {f.kind, n + 1 - f.j, n + 1 - f.i};
}

// Matrix of the basis element dual to a symbol, in the standard
// realization (A, B, C) = [[A, B], [C, -A^t]].
Matrix standard_matrix(const OneForm& s, int n) {
  Matrix m(2 * n, std::vector<long>(2 * n, 0));
  const int i = s.i - 1, j = s.j - 1;
  switch (s.kind) {
    case SymbolKind::Lower:  // (E_ij, 0, 0)
      m[i][j] = 1;
      m[n + j][n + i] = -1;
      break;
    case SymbolKind::LowerBar:  // (-E_ji, 0, 0)
      m[j][i] = -1;
      m[n + i][n + j] = 1;
      break;
    case SymbolKind::Upper:  // (0, E_pq + E_qp, 0), (0, E_pp, 0)
      m[i][n + j] = 1;
      m[j][n + i] = 1;
      break;
    case SymbolKind::UpperBar:  // (0, 0, -(E_pq + E_qp)), (0, 0, -E_pp)
      m[n + i][j] = -1;
      m[n + j][i] = -1;
      break;
    case SymbolKind::Cartan:  // (E_kk, 0, 0)
      m[i][i] = 1;
      m[n + i][n + i] = -1;
      break;
  }
  return m;
}

// Coordinates of a standard-realization matrix, keyed by display bit.
std::map<int, long> coordinates(const Matrix& m, int n, const FormLayout& layout) {
  std::map<int, long> out;
  auto put = [&](SymbolKind kind, int i, int j, long v) {
    if (v == 0) return;
    out[layout.bit(relabel({kind, i, j}, n))] += v;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      put(SymbolKind::Lower, i, j, m[i - 1][j - 1]);
      put(SymbolKind::LowerBar, i, j, -m[j - 1][i - 1]);
    }
    if (m[i - 1][i - 1] != 0)
      out[layout.bit(relabel({SymbolKind::Cartan, i, 0}, n))] += m[i - 1][i - 1];
    for (int j = i; j <= n; ++j) {
      put(SymbolKind::Upper, i, j, m[i - 1][n + j - 1]);
      put(SymbolKind::UpperBar, i, j, -m[n + i - 1][j - 1]);
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t size = a.size();
  Matrix out(size, std::vector<long>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k) {
      if (a[i][k] == 0 && b[i][k] == 0) continue;
      for (std::size_t j = 0; j < size; ++j) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return out;
}

LieBracketTable build_brackets(int n) {
  const FormLayout layout(n);
  const int dim = layout.symbol_count();
  std::vector<Matrix> basis;
  for (int b = 0; b < dim; ++b) {
    basis.push_back(standard_matrix(relabel(layout.symbol(b), n), n));
    const auto back = coordinates(basis.back(), n, layout);
    check_internal(back.size() == 1 && back.begin()->first == b && back.begin()->second == 1,
                   "Lie algebra basis does not round-trip");
  }
  LieBracketTable table;
  table.n = n;
  table.bracket.assign(dim, std::vector<std::map<int, long>>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      auto c = coordinates(commutator(basis[a], basis[b]), n, layout);
      std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
      table.bracket[a][b] = c;
      for (auto& [k, v] : c) v = -v;
      table.bracket[b][a] = std::move(c);
    }
  return table;
}

// d of each coframe symbol: dω^α = -Σ_{β<γ} c^α_{βγ} ω^β ∧ ω^γ, rescaled to
// the γ-normalized symbols.
std::shared_ptr<const std::vector<InvForm>> d_table(int n) {
  static detail::Memo<int, std::shared_ptr<const std::vector<InvForm>>> memo;
  return memo.get(n, [&] {
    const FormLayout layout(n);
    const auto& br = lie_brackets(n);
    const int dim = layout.symbol_count();
    auto weight = [&](int b) { return layout.is_vertical(b) ? 0 : 1; };
    auto table = std::make_shared<std::vector<InvForm>>(dim, InvForm(n));
    for (int beta = 0; beta < dim; ++beta)
      for (int gamma = beta + 1; gamma < dim; ++gamma)
        for (const auto& [alpha, c] : br.bracket[beta][gamma]) {
          const int shift = weight(alpha) - weight(beta) - weight(gamma);
          (*table)[alpha].add_term((std::uint64_t{1} << beta) | (std::uint64_t{1} << gamma), shift,
                                   Rational(-c));
        }
    return std::shared_ptr<const std::vector<InvForm>>(table);
  });
}

}  // namespace

const LieBracketTable& lie_brackets(int n) {
  require_rank(n);
  static detail::Memo<int, std::shared_ptr<const LieBracketTable>> memo;
  auto table = memo.get(n, [&] {
    return std::shared_ptr<const LieBracketTable>(std::make_shared<LieBracketTable>(build_brackets(n)));
  });
  // the memo owns the table for the life of the process
  return *table;
}

InvForm exterior_d(int n, const OneForm& f) {
  return (*d_table(n))[FormLayout(n).bit(f)];
}

InvForm exterior_d(const InvForm& form) {
  const int n = form.rank();
  InvForm out(n);
  if (form.is_zero()) return out;
  const auto table = d_table(n);
  for (const auto& [key, c] : form.terms()) {
    const std::uint64_t mask = key.first;
    std::uint64_t rest = mask;
    int position = 0;
    while (rest) {
      const int bit = __builtin_ctzll(rest);
      rest &= rest - 1;
      const std::uint64_t below = mask & ((std::uint64_t{1} << bit) - 1);
      const std::uint64_t above = mask & ~((std::uint64_t{2} << bit) - 1);
      for (const auto& [dk, dc] : (*table)[bit].terms()) {
        const int s1 = wedge_sign(below, dk.first);
        if (s1 == 0) continue;
        const int s2 = wedge_sign(below | dk.first, above);
        if (s2 == 0) continue;
        const int sign = s1 * s2 * (position % 2 ? -1 : 1);
        const Rational v = c * dc;
        out.add_term(below | dk.first | above, key.second + dk.second, sign > 0 ? v : Rational(-v));
      }
      ++position;
    }
  }
  return out;
}

namespace {

// γ^2 ∂∂̄, applied bidegree by bidegree.
InvForm ddc_raw(const InvForm& form) {
  const int n = form.rank();
  const FormLayout layout(n);
  InvForm out(n);
  if (form.is_zero()) return out;
  require(!form.has_vertical(), "dd^c needs a basic form (vertical one-forms present)");
  const auto hol = layout.hol_mask();
  std::map<std::pair<int, int>, InvForm> parts;
  for (const auto& [k, c] : form.terms()) {
    const int p = __builtin_popcountll(k.first & hol);
    const int q = __builtin_popcountll(k.first) - p;
    auto it = parts.try_emplace({p, q}, InvForm(n)).first;
    it->second.add_term(k.first, k.second, c);
  }
  for (const auto& [pq, part] : parts) {
    const auto [p, q] = pq;
    const InvForm d1 = exterior_d(part);
    require(!d1.has_vertical(), "dd^c needs a basic form (d leaves vertical terms)");
    const InvForm dbar = d1.bidegree_part(p, q + 1);
    const InvForm d2 = exterior_d(dbar);
    require(!d2.has_vertical(), "dd^c needs a basic form (d leaves vertical terms)");
    const InvForm top_part = d2.bidegree_part(p + 1, q + 1);
    for (const auto& [k, c] : top_part.terms())
      out.add_term(k.first, k.second + 2, c);
  }
  return out;
}

// Fixed by the Ω_12-free part of dd^c(Ω_12) at n = 2, which must be
// Ω^12 (Ω^11 + Ω^22). The full form also carries Ω_12 (Ω^22 - Ω^11).
const Rational& ddc_normalization() {
  static const Rational kappa = [] {
    const int n = 2;
    const FormLayout layout(n);
    const std::uint64_t lower = std::uint64_t{3} << (2 * layout.lower_root(1, 2));
    const InvForm raw = ddc_raw(InvForm::omega_lower(n, 1, 2));
    InvForm upper_part(n);
    for (const auto& [k, c] : raw.terms())
      if (!(k.first & lower)) upper_part.add_term(k.first, k.second, c);
    const InvForm target =
        InvForm::omega_upper(n, 1, 2) * (InvForm::omega_upper(n, 1, 1) + InvForm::omega_upper(n, 2, 2));
    check_internal(!upper_part.is_zero(), "dd^c calibration form vanished");
    const auto& [key, c] = *upper_part.terms().begin();
    const Rational k = target.coefficient(key.first, key.second) / c;
    check_internal(k != 0 && upper_part * k == target, "dd^c calibration is not proportional");
    return k;
  }();
  return kappa;
}

}  // namespace

InvForm ddc(const InvForm& form) {
  InvForm out = ddc_raw(form);
  out *= ddc_normalization();
  check_internal(out.is_class_ready(), "dd^c left a residual power of gamma");
  return out;
}

Rational top_volume(int n) {
  require_rank(n);
  Rational v = 1;
  for (int k = 1; k <= n; ++k) v /= Rational(factorial(2 * k - 1));
  return v;
}

Rational top_coefficient(const InvForm& form) {
  if (form.is_zero()) return 0;
  const auto top = FormLayout(form.rank()).top_mask();
  require(form.terms().size() == 1, "form is not a multiple of the top form");
  const auto& [key, c] = *form.terms().begin();
  require(key.first == top, "form is not of top degree");
  require(key.second == 0, "form carries a residual power of gamma");
  return c;
}

Rational integrate_top(const InvForm& form) {
  if (form.is_zero()) return 0;
  return top_coefficient(form) * top_volume(form.rank());
}

CurvatureMatrix curvature_E(int k, int n) {
  require_rank(n);
  require(k >= 1 && k <= n, "bundle index out of range");
  auto sym = [n](SymbolKind kind, int i, int j) {
    if ((kind == SymbolKind::Upper || kind == SymbolKind::UpperBar) && i > j) std::swap(i, j);
    return InvForm::one_form(n, relabel({kind, i, j}, n));
  };
  CurvatureMatrix K;
  K.label = "E_" + std::to_string(k);
  K.entries.assign(k, std::vector<InvForm>(k, InvForm(n)));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      InvForm theta(n);
      for (int j = k + 1; j <= n; ++j)
        theta -= sym(SymbolKind::Lower, a, j) * sym(SymbolKind::LowerBar, b, j);
      for (int p = 1; p <= n; ++p)
        theta -= sym(SymbolKind::Upper, p, a) * sym(SymbolKind::UpperBar, p, b);
      K.entries[a - 1][b - 1] = std::move(theta);
    }
  return K;
}

CurvatureMatrix dual(const CurvatureMatrix& K) {
  CurvatureMatrix out;
  out.label = K.label + "*";
  const int size = K.size();
  out.entries = K.entries;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) out.entries[a][b] = -K.entries[b][a];
  return out;
}

namespace {

int matrix_rank_of(const CurvatureMatrix& K) {
  require(K.size() > 0 && K.entries[0][0].rank() > 0, "empty curvature matrix");
  return K.entries[0][0].rank();
}

InvForm principal_minor(const CurvatureMatrix& K, const std::vector<int>& rows, int n) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  InvForm out(n);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    InvForm term = InvForm::scalar(n, inversions % 2 ? -1 : 1);
    for (std::size_t a = 0; a < perm.size() && !term.is_zero(); ++a)
      term = term * K.entries[rows[a]][rows[perm[a]]];
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<InvForm> chern_forms(const CurvatureMatrix& K) {
  const int n = matrix_rank_of(K);
  const int size = K.size();
  std::vector<InvForm> out(size + 1, InvForm(n));
  out[0] = InvForm::scalar(n, 1);
  for (unsigned subset = 1; subset < (1u << size); ++subset) {
    std::vector<int> rows;
    for (int a = 0; a < size; ++a)
      if (subset >> a & 1u) rows.push_back(a);
    out[rows.size()] += principal_minor(K, rows, n);
  }
  return out;
}

InvForm total_chern(const CurvatureMatrix& K) {
  InvForm out(matrix_rank_of(K));
  for (const auto& c : chern_forms(K)) out += c;
  return out;
}

InvForm power_sum_form(const CurvatureMatrix& K, int r) {
  require(r >= 0, "power sum index must be nonnegative");
  const int n = matrix_rank_of(K);
  const int size = K.size();
  if (r == 0) return InvForm::scalar(n, size);
  FormMatrix power = K.entries;
  for (int step = 1; step < r; ++step) {
    FormMatrix next(size, std::vector<InvForm>(size, InvForm(n)));
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        for (int c = 0; c < size; ++c) next[a][b] += power[a][c] * K.entries[c][b];
    power = std::move(next);
  }
  InvForm trace(n);
  for (int a = 0; a < size; ++a) trace += power[a][a];
  return trace;
}

InvForm c1_quotient(int k, int n) {
  require_rank(n);
  require(k >= 1 && k <= n, "quotient index out of range");
  InvForm out = chern_forms(curvature_E(k, n))[1];
  if (k > 1) out -= chern_forms(curvature_E(k - 1, n))[1];
  return out;
}

InvForm x_form(int i, int n) {
  require_rank(n);
  require(i >= 1 && i <= n, "x index out of range");
  return -c1_quotient(n + 1 - i, n);
}

}  // namespace spschub
