#include "spschub/table.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "serialize.hpp"
#include "spschub/error.hpp"
#include "spschub/qbasis.hpp"
#include "spschub/symplectic.hpp"

namespace spschub {

namespace {

std::vector<TableTerm> terms_of(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<TableTerm> out;
  for (const auto& [key, count] : bh_coefficients(w)) {
    if (key.first.largest() > n) continue;
    Integer c(static_cast<unsigned long>(count));
    if (length(key.second) % 2) c = -c;
    out.push_back({key.first, key.second, c});
  }
  return out;
}

std::string terms_string(std::vector<TableTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const TableTerm& a, const TableTerm& b) {
    return std::tie(a.lambda, a.pi) < std::tie(b.lambda, b.pi);
  });
  std::ostringstream os;
  for (const auto& t : terms)
    os << " " << t.coeff.get_str() << "*Q[" << t.lambda.to_string() << "]S[" << t.pi.to_string()
       << "]";
  return os.str();
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream is(text);
  int a;
  while (is >> a) out.push_back(a);
  if (!is.eof()) fail(ErrorCode::Parse, "bad word '" + text + "' in fixture");
  return out;
}

}  // namespace

std::vector<TableRow> schubert_table(int n) {
  std::vector<TableRow> rows;
  for (const auto& w : hyperoctahedral_group(n))
    rows.push_back({w, first_reduced_word(w), terms_of(w), schubert_c(w)});
  return rows;
}

TableCheck check_table(const std::string& fixture_text) {
  io::json fixture;
  try {
    fixture = io::json::parse(fixture_text);
  } catch (const io::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!fixture.is_object() || !fixture.contains("n") || !fixture.contains("rows") ||
      !fixture["n"].is_number_integer() || !fixture["rows"].is_array())
    fail(ErrorCode::Parse, "fixture needs an integer \"n\" and an array \"rows\"");
  const int n = fixture["n"].get<int>();
  require(n >= 1 && n <= 4, "fixture rank must be in 1..4");

  std::map<SignedPermutation, TableRow> computed;
  for (auto& row : schubert_table(n)) computed.emplace(row.w, std::move(row));

  TableCheck check;
  std::map<SignedPermutation, int> seen;
  for (const auto& row : fixture["rows"]) {
    if (!row.contains("w") || !row.contains("terms") || !row["terms"].is_array())
      fail(ErrorCode::Parse, "fixture rows need \"w\" and \"terms\"");
    const SignedPermutation w = io::perm_from_json(row["w"]);
    require(w.rank() == n, "fixture row has the wrong rank");
    ++check.rows;
    ++seen[w];
    const std::string label = w.to_string();
    if (row.contains("word")) {
      const Word word = parse_word(row["word"].get<std::string>());
      if (!is_reduced(word, n) || SignedPermutation::from_word(word, n) != w)
        check.mismatches.push_back(label + ": word '" + row["word"].get<std::string>() +
                                   "' is not a reduced word for w");
    }
    std::vector<TableTerm> expected;
    MultiPoly fixture_poly(n);
    for (const auto& t : row["terms"]) {
      TableTerm term{io::partition_from_json(t.at("lambda")), io::perm_from_json(t.at("pi")),
                     Integer(t.at("coeff").get<long>())};
      require(term.pi.rank() == n, "fixture term has the wrong rank");
      MultiPoly p = qtilde(term.lambda, n) * schubert_a(term.pi);
      fixture_poly += p * term.coeff;
      expected.push_back(std::move(term));
    }
    const TableRow& mine = computed.at(w);
    const std::string want = terms_string(expected), got = terms_string(mine.terms);
    if (want != got)
      check.mismatches.push_back(label + ": expected" + want + ", computed" + got);
    else if (fixture_poly != mine.poly)
      check.mismatches.push_back(label + ": polynomial differs from the fixture expansion");
  }
  for (const auto& [w, row] : computed) {
    const auto it = seen.find(w);
    if (it == seen.end())
      check.mismatches.push_back(w.to_string() + ": missing from the fixture");
    else if (it->second > 1)
      check.mismatches.push_back(w.to_string() + ": appears more than once in the fixture");
  }
  return check;
}

}  // namespace spschub
