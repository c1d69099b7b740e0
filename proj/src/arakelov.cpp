#include "spschub/arakelov.hpp"

#include <memory>

#include "memo.hpp"
#include "spschub/error.hpp"

namespace spschub {

namespace {

int top_index(int n) { return n * n + 1; }

BottChern empty_bc(int n, std::string label) {
  BottChern bc;
  bc.n = n;
  bc.label = std::move(label);
  bc.components.assign(top_index(n) + 1, InvForm(n));
  return bc;
}

[[noreturn]] void missing_filtration_component(int k, int n) {
  fail(ErrorCode::Unsupported,
       "unsupported: c~_" + std::to_string(k) + " of the stepwise filtration at n = " +
           std::to_string(n) +
           " needs the two-step Bott-Chern formulas; supply it through the extension map");
}

std::vector<InvForm> x_forms(int n) {
  static detail::Memo<int, std::shared_ptr<const std::vector<InvForm>>> memo;
  return *memo.get(n, [n] {
    auto xs = std::make_shared<std::vector<InvForm>>();
    for (int i = 1; i <= n; ++i) xs->push_back(x_form(i, n));
    return std::shared_ptr<const std::vector<InvForm>>(xs);
  });
}

std::shared_ptr<const BottChern> cached_pair(int n) {
  static detail::Memo<int, std::shared_ptr<const BottChern>> memo;
  return memo.get(n, [n] { return std::make_shared<const BottChern>(bc_pair(n, {})); });
}

const BottChern& pair_for(int n, const BottChernExtension& ext,
                          std::shared_ptr<const BottChern>& holder) {
  holder = ext.empty() ? cached_pair(n) : std::make_shared<const BottChern>(bc_pair(n, ext));
  return *holder;
}

}  // namespace

Rational harmonic(int r) {
  require(r >= 0, "harmonic number index must be nonnegative");
  Rational h = 0;
  for (int k = 1; k <= r; ++k) h += Rational(1, k);
  return h;
}

const InvForm& BottChern::component(int k) const {
  require(k >= 0, "Bott-Chern component index must be nonnegative");
  if (k >= static_cast<int>(components.size())) {
    static const InvForm zero;
    return zero;
  }
  if (!components[k])
    fail(ErrorCode::Unsupported, "unsupported: component " + std::to_string(k) + " of " + label +
                                     " is not available at n = " + std::to_string(n));
  return *components[k];
}

bool BottChern::available(int k) const {
  return k < 0 || k >= static_cast<int>(components.size()) || components[k].has_value();
}

InvForm BottChern::total() const {
  InvForm out(n);
  for (int k = 0; k < static_cast<int>(components.size()); ++k) out += component(k);
  return out;
}

BottChern bc_lagrangian(int n) {
  BottChern bc = empty_bc(n, "E_LG");
  const CurvatureMatrix quotient = dual(curvature_E(n, n));
  for (int k = 2; k <= top_index(n); ++k) {
    InvForm c = power_sum_form(quotient, k - 1) * harmonic(k - 1);
    if (k % 2 == 0) c = -c;
    bc.components[k] = std::move(c);
  }
  return bc;
}

BottChern bc_filtration(int n, const BottChernExtension& ext) {
  BottChern bc = empty_bc(n, "E");
  const FormLayout layout(n);
  InvForm c2(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) c2 -= InvForm::omega_lower(n, i, j);
  if (n >= 2) bc.components[2] = c2;
  for (int k = 3; k <= n; ++k) bc.components[k].reset();
  for (const auto& [k, form] : ext) {
    require(k >= 3 && k <= n, "extension components must have 3 <= k <= n");
    require(form.rank() == n, "extension component has the wrong rank");
    require(!form.has_vertical() && form.is_class_ready(),
            "extension component must be a basic class-ready form");
    for (const auto& [key, c] : form.terms()) {
      const int hol = __builtin_popcountll(key.first & layout.hol_mask());
      require(hol == k - 1 && __builtin_popcountll(key.first) == 2 * (k - 1),
              "extension component c~_" + std::to_string(k) + " must have bidegree (" +
                  std::to_string(k - 1) + "," + std::to_string(k - 1) + ")");
    }
    bc.components[k] = form;
  }
  return bc;
}

BottChern bc_dual(const BottChern& bc) {
  BottChern out = bc;
  out.label = bc.label + "*";
  for (int k = 1; k < static_cast<int>(out.components.size()); k += 2)
    if (out.components[k]) *out.components[k] = -*out.components[k];
  return out;
}

BottChern bc_pair(int n, const BottChernExtension& ext) {
  const BottChern lg = bc_lagrangian(n);
  const BottChern filt = bc_filtration(n, ext);
  const BottChern filt_dual = bc_dual(filt);
  const CurvatureMatrix en = curvature_E(n, n);
  const std::vector<InvForm> c_en = chern_forms(en);
  const std::vector<InvForm> c_en_dual = chern_forms(dual(en));
  auto chern = [n](const std::vector<InvForm>& c, int j) {
    return j < static_cast<int>(c.size()) ? c[j] : InvForm(n);
  };

  BottChern bc = empty_bc(n, "(E,E*)");
  std::vector<std::optional<InvForm>> ddc_filt(filt.components.size());
  for (int k = 2; k <= top_index(n); ++k) {
    bool ok = true;
    for (int a = 2; a <= k; ++a) ok = ok && filt.available(a);
    if (!ok) {
      bc.components[k].reset();
      continue;
    }
    InvForm c = lg.component(k);
    for (int a = 2; a <= k; ++a) {
      const InvForm& ca = filt.component(a);
      if (ca.is_zero()) continue;
      c += ca * chern(c_en_dual, k - a);
      c += filt_dual.component(a) * chern(c_en, k - a);
      if (!ddc_filt[a]) ddc_filt[a] = ddc(ca);
      const int b = k - a;
      if (b >= 2) c += *ddc_filt[a] * filt_dual.component(b);
    }
    bc.components[k] = std::move(c);
  }
  return bc;
}

ArithClass::ArithClass(int rank) : n(rank), form(rank) {}

ArithClass& ArithClass::operator+=(const ArithClass& rhs) {
  require(n == rhs.n, "rank mismatch in arithmetic class sum");
  for (const auto& [w, c] : rhs.schubert) {
    auto& slot = schubert[w];
    slot += c;
    if (slot == 0) schubert.erase(w);
  }
  form += rhs.form;
  return *this;
}

ArithClass& ArithClass::operator*=(const Integer& c) {
  if (c == 0) {
    schubert.clear();
    form = InvForm(n);
    return *this;
  }
  for (auto& [w, coeff] : schubert) coeff *= c;
  form *= Rational(c);
  return *this;
}

ArithClass ArithClass::schubert_class(const SignedPermutation& w) {
  ArithClass out(w.rank());
  out.schubert[w] = 1;
  return out;
}

ArithClass ArithClass::form_class(const InvForm& eta) {
  require(eta.is_class_ready() && !eta.has_vertical(),
          "arithmetic classes need basic class-ready forms");
  ArithClass out(eta.rank());
  out.form = eta;
  return out;
}

InvForm evaluate_at_x(const MultiPoly& f) {
  const int n = f.rank();
  require(n >= 1 && n <= kMaxFormRank, "rank out of range for forms");
  const std::vector<InvForm> xs = x_forms(n);
  return f.evaluate<InvForm>([&](int i) { return xs[i - 1]; },
                             [n](const Integer& c) { return InvForm::scalar(n, Rational(c)); },
                             InvForm::scalar(n, 1));
}

ArithClass arith_class(const CExpansion& e, int n, const BottChernExtension& ext) {
  ArithClass out(n);
  // f_r collects the coefficient of c~_{2r}(E,E*)
  std::map<int, MultiPoly> by_r;
  for (const auto& [index, a] : e) {
    require(index.rank() == n, "rank mismatch in expansion");
    if (index.is_schubert()) {
      out.schubert[index.w] += a;
      continue;
    }
    const int r = index.lambda.largest_repeated_part();
    check_internal(r > 0, "pair index with a strict partition");
    MultiPoly f = c_pair(index.lambda.remove_pair(r), index.pi) * a;
    if (r % 2) f = -f;
    auto it = by_r.try_emplace(r, MultiPoly(n)).first;
    it->second += f;
  }
  std::erase_if(out.schubert, [](const auto& kv) { return kv.second == 0; });
  if (by_r.empty()) return out;
  std::shared_ptr<const BottChern> holder;
  const BottChern& pair = pair_for(n, ext, holder);
  for (const auto& [r, f] : by_r) {
    if (f.is_zero()) continue;
    if (!pair.available(2 * r))
      for (int k = 3; k <= n; ++k)
        if (!ext.count(k)) missing_filtration_component(k, n);
    out.form += evaluate_at_x(f) * pair.component(2 * r);
  }
  return out;
}

ArithClass arith_class(const MultiPoly& h, const BottChernExtension& ext) {
  return arith_class(expand(h), h.rank(), ext);
}

ArithClass arith_product(const ArithClass& a, const ArithClass& b, const BottChernExtension& ext) {
  require(a.n == b.n, "rank mismatch in arithmetic product");
  const int n = a.n;
  ArithClass out(n);
  for (const auto& [u, cu] : a.schubert)
    for (const auto& [v, cv] : b.schubert) {
      ArithClass term = arith_class(structure_constants(u, v), n, ext);
      term *= cu * cv;
      out += term;
    }
  if (!b.form.is_zero())
    for (const auto& [u, cu] : a.schubert)
      out.form += evaluate_at_x(schubert_c(u)) * b.form * Rational(cu);
  if (!a.form.is_zero())
    for (const auto& [v, cv] : b.schubert)
      out.form += evaluate_at_x(schubert_c(v)) * a.form * Rational(cv);
  if (!a.form.is_zero() && !b.form.is_zero()) out.form += ddc(a.form) * b.form;
  return out;
}

ArithDegree arith_degree(const ArithClass& cls) {
  require(cls.schubert.empty(), "class has a Schubert part; its degree is not a number");
  ArithDegree out;
  out.omega_coefficient = top_coefficient(cls.form);
  out.degree = out.omega_coefficient * top_volume(cls.n) / 2;
  return out;
}

ArithDegree arith_monomial_degree(const std::vector<int>& exponents,
                                  const BottChernExtension& ext) {
  const int n = static_cast<int>(exponents.size());
  require(n >= 1 && n <= kMaxFormRank, "rank out of range for forms");
  int total = 0;
  Monomial m;
  for (int i = 0; i < n; ++i) {
    require(exponents[i] >= 0 && exponents[i] <= 255, "exponents must be in 0..255");
    total += exponents[i];
    m[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  require(total == top_index(n),
          "exponents must sum to n^2+1 = " + std::to_string(top_index(n)));
  return arith_degree(arith_class(MultiPoly::monomial(n, m), ext));
}

ArithDegree faltings_height(int n, const BottChernExtension& ext) {
  require(n >= 1 && n <= kMaxFormRank, "rank out of range for forms");
  MultiPoly linear(n);
  for (int i = 1; i <= n; ++i) linear += MultiPoly::variable(n, i) * Integer(i);
  return arith_degree(arith_class(linear.pow(top_index(n)), ext));
}

}  // namespace spschub
