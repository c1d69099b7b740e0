#pragma once

// JSON and text renderings shared by the C API and the tests.

#include <json.hpp>
#include <string>

#include "spschub/arakelov.hpp"
#include "spschub/forms.hpp"
#include "spschub/poly.hpp"
#include "spschub/symplectic.hpp"
#include "spschub/weyl.hpp"

namespace spschub::io {

using json = nlohmann::ordered_json;

json to_json(const SignedPermutation& w);
json to_json(const Partition& lambda);
/// [{"coeff": "3", "exp": [2, 1]}, ...]
json to_json(const MultiPoly& f);
json to_json(const CIndex& index);
/// [{"index": {...}, "coeff": "2"}, ...]
json to_json(const CExpansion& e);
/// [{"monomial": ["O_12", "O^11"], "coeff": "-3/2"}, ...]
json to_json(const InvForm& form);
json to_json(const ArithClass& cls);

MultiPoly poly_from_json(const json& j, int n);
SignedPermutation perm_from_json(const json& j);
Partition partition_from_json(const json& j);
CExpansion expansion_from_json(const json& j, int n);

/// "2*C[-2 1] + C[1,1; 1 2]"; parses back with parse_poly.
std::string expansion_to_string(const CExpansion& e);

}  // namespace spschub::io
