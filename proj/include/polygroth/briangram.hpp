#pragma once

#include <cstdint>
#include <vector>

#include "polygroth/constructible.hpp"
#include "polygroth/limits.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth {

struct BGTerm {
  Face face;
  int sign = 1;       // (-1)^(dim F + ell)
  HPolyhedron cone;   // tangent cone T_F P
};

/// 1_P = sum over relatively bounded faces F of sign * 1_{T_F P}.
struct BGDecomposition {
  HPolyhedron parent;
  int ell = 0;
  std::vector<BGTerm> terms;

  /// The right-hand side as a signed combination.
  SignedPolyCombo combo() const;
};

/// Empty P gives an empty decomposition.
BGDecomposition bg_decompose(const HPolyhedron& P, const Limits& limits = {});

/// Exact check of the decomposition against 1_P.
bool bg_verify(const BGDecomposition& d, const Limits& limits = {});
bool bg_verify(const HPolyhedron& P, const Limits& limits = {});

/// Union of the relatively bounded faces. P must be nonempty.
ConstructibleSet bounded_union(const HPolyhedron& P, const Limits& limits = {});
/// Union of the relatively bounded faces visible from x (x outside P).
ConstructibleSet visible_union(const HPolyhedron& P, const QVec& x, const Limits& limits = {});

std::int64_t bounded_union_chi(const HPolyhedron& P, const Limits& limits = {});
std::int64_t visible_union_chi(const HPolyhedron& P, const QVec& x, const Limits& limits = {});

}  // namespace polygroth
