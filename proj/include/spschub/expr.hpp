#pragma once

// Polynomial expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?          right associative
//   atom   := integer | 'x' index | '(' expr ')' | call | 'C[' index ']'
//   call   := qtilde(parts) | schubA(perm) | schubC(perm) | e(k) | e2(k)
//
// e2(k) is e_k(x_1^2, ..., x_n^2). C[-2 1 3] is 𝔠_w and C[2,2; 1 3 2] is
// 𝔠_{λ,ϖ}, the forms printed by CIndex::to_string.

#include <string_view>

#include "spschub/poly.hpp"

namespace spschub {

/// Throws Error(Parse) with the offending position on bad input.
MultiPoly parse_poly(std::string_view text, int n);

}  // namespace spschub
