#include "serialize.hpp"

#include <sstream>

#include "spschub/error.hpp"

namespace spschub::io {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorCode::Parse, std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Integer integer_field(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail(ErrorCode::Parse, "coefficient must be an integer or a decimal string");
}

}  // namespace

json to_json(const SignedPermutation& w) {
  return json(std::vector<int>(w.entries().begin(), w.entries().end()));
}

json to_json(const Partition& lambda) {
  return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

json to_json(const MultiPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> exp(f.rank());
    for (int i = 0; i < f.rank(); ++i) exp[i] = m[i];
    out.push_back({{"coeff", to_string(c)}, {"exp", exp}});
  }
  return out;
}

json to_json(const CIndex& index) {
  if (index.is_schubert()) return {{"w", to_json(index.w)}};
  return {{"lambda", to_json(index.lambda)}, {"pi", to_json(index.pi)}};
}

json to_json(const CExpansion& e) {
  json out = json::array();
  for (const auto& [index, c] : e) out.push_back({{"index", to_json(index)}, {"coeff", to_string(c)}});
  return out;
}

json to_json(const InvForm& form) {
  json out = json::array();
  for (const auto& [key, c] : form.terms()) {
    json entry = {{"monomial", monomial_tokens(form.rank(), key.first)}, {"coeff", to_string(c)}};
    if (key.second != 0) entry["gamma"] = key.second;
    out.push_back(std::move(entry));
  }
  return out;
}

json to_json(const ArithClass& cls) {
  json schubert = json::array();
  for (const auto& [w, c] : cls.schubert)
    schubert.push_back({{"w", to_json(w)}, {"coeff", to_string(c)}});
  return {{"schubert", schubert}, {"form", to_json(cls.form)}};
}

MultiPoly poly_from_json(const json& j, int n) {
  if (!j.is_array()) fail(ErrorCode::Parse, "polynomial must be an array of terms");
  MultiPoly out(n);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exp"))
      fail(ErrorCode::Parse, "polynomial terms need \"coeff\" and \"exp\"");
    const auto exp = int_array(term["exp"], "exp");
    if (static_cast<int>(exp.size()) != n) fail(ErrorCode::Parse, "exponent vector has wrong length");
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (exp[i] < 0 || exp[i] > 255) fail(ErrorCode::Parse, "exponent out of range");
      m[i] = static_cast<std::uint8_t>(exp[i]);
    }
    out.add_term(m, integer_field(term["coeff"]));
  }
  return out;
}

SignedPermutation perm_from_json(const json& j) {
  return SignedPermutation(int_array(j, "permutation"));
}

Partition partition_from_json(const json& j) {
  auto parts = int_array(j, "partition");
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) fail(ErrorCode::Parse, "partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

CExpansion expansion_from_json(const json& j, int n) {
  if (!j.is_array()) fail(ErrorCode::Parse, "expansion must be an array");
  CExpansion out;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("index") || !entry.contains("coeff"))
      fail(ErrorCode::Parse, "expansion entries need \"index\" and \"coeff\"");
    const auto& idx = entry["index"];
    CIndex index;
    if (idx.contains("w"))
      index = CIndex::schubert(perm_from_json(idx["w"]));
    else if (idx.contains("lambda") && idx.contains("pi"))
      index = CIndex::pair(partition_from_json(idx["lambda"]), perm_from_json(idx["pi"]));
    else
      fail(ErrorCode::Parse, "index needs \"w\" or \"lambda\" and \"pi\"");
    if (index.rank() != n) fail(ErrorCode::Parse, "index has the wrong rank");
    out[index] += integer_field(entry["coeff"]);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string expansion_to_string(const CExpansion& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : e) {
    const bool negative = c < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const Integer mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << index.to_string();
  }
  return os.str();
}

}  // namespace spschub::io
