#pragma once

// Readable doctest output for library types.

#include <doctest.h>

#include "spschub/forms.hpp"
#include "spschub/poly.hpp"
#include "spschub/weyl.hpp"

namespace doctest {

template <>
struct StringMaker<spschub::MultiPoly> {
  static String convert(const spschub::MultiPoly& f) { return f.to_string().c_str(); }
};

template <>
struct StringMaker<spschub::InvForm> {
  static String convert(const spschub::InvForm& f) { return f.to_string().c_str(); }
};

template <>
struct StringMaker<spschub::SignedPermutation> {
  static String convert(const spschub::SignedPermutation& w) { return w.to_string().c_str(); }
};

template <>
struct StringMaker<spschub::Partition> {
  static String convert(const spschub::Partition& p) { return ("(" + p.to_string() + ")").c_str(); }
};

}  // namespace doctest
