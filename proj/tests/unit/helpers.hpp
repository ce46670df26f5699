#pragma once

#include <string>

#include "polygroth/constructible.hpp"
#include "polygroth/dsl.hpp"
#include "polygroth/polyhedron.hpp"
#include "polygroth/rational.hpp"

namespace test {

inline polygroth::Rat q(const char* s) { return polygroth::parse_rational(s); }

inline polygroth::QVec pt(std::initializer_list<const char*> xs) {
  polygroth::QVec v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

inline polygroth::HPolyhedron poly(const std::string& text) { return polygroth::parse_polyhedron(text); }

inline polygroth::ConstructibleSet set(const std::string& text) {
  return polygroth::parse_constructible(text);
}

}  // namespace test
