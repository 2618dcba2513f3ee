#pragma once

#include "extrop/io.hpp"

#include "doctest.h"

#include <initializer_list>
#include <vector>

namespace extrop::testing {

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntMatrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> rs;
  for (const auto& r : rows) rs.push_back(iv(r));
  return IntMatrix::from_rows(cols, rs);
}

inline MonoidElement el(std::initializer_list<long> xs) { return MonoidElement::of(iv(xs)); }

inline Face face(std::initializer_list<std::size_t> xs) { return Face{std::vector<std::size_t>(xs)}; }

inline Cone orthant2() { return Cone::orthant(2); }

}  // namespace extrop::testing

namespace doctest {
template <>
struct StringMaker<extrop::IntVec> {
  static String convert(const extrop::IntVec& v) { return extrop::to_string(v).c_str(); }
};
template <>
struct StringMaker<extrop::Face> {
  static String convert(const extrop::Face& f) { return extrop::to_string(f).c_str(); }
};
}  // namespace doctest
