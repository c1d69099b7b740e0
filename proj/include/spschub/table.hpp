#pragma once

// The table of symplectic Schubert polynomials over W_n and its comparison
// against a stored fixture.

#include <string>
#include <vector>

#include "spschub/poly.hpp"
#include "spschub/weyl.hpp"

namespace spschub {

struct TableTerm {
  Partition lambda;
  SignedPermutation pi;
  /// Coefficient of Q̃_λ(X_n) 𝔖_ϖ(X_n), sign included.
  Integer coeff;

  bool operator==(const TableTerm&) const = default;
};

struct TableRow {
  SignedPermutation w;
  Word word;
  std::vector<TableTerm> terms;
  MultiPoly poly;
};

/// One row per w in W_n, ordered by length, then by lex-first reduced word.
std::vector<TableRow> schubert_table(int n);

struct TableCheck {
  int rows = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares a fixture ({"n", "rows": [{"w", "word", "terms"}]}) with the
/// computed table, keyed by w.
TableCheck check_table(const std::string& fixture_text);

}  // namespace spschub
