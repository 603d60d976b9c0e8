#pragma once

#include "crgstir/qpoly.hpp"
#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<crgstir::IntPoly> {
  static String convert(const crgstir::IntPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<crgstir::BivarPoly> {
  static String convert(const crgstir::BivarPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<crgstir::BigInt> {
  static String convert(const crgstir::BigInt& x) { return x.get_str().c_str(); }
};
}  // namespace doctest
