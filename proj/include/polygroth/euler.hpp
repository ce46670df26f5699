#pragma once

#include <cstdint>

#include "polygroth/constructible.hpp"
#include "polygroth/limits.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth {

struct EulerPair {
  std::int64_t chi = 0;
  std::int64_t chi_b = 0;

  friend bool operator==(const EulerPair&, const EulerPair&) = default;
};

/// Sum of (-1)^dim over the cells of C's arrangement that lie in C.
std::int64_t chi(const ConstructibleSet& C, const Limits& limits = {});

/// chi(C ∩ [-gamma_star, gamma_star]^n).
std::int64_t chi_b(const ConstructibleSet& C, const Limits& limits = {});

EulerPair euler_pair(const ConstructibleSet& C, const Limits& limits = {});

/// 1 + the largest absolute coordinate of a vertex of the arrangement made
/// of C's hyperplanes and the coordinate hyperplanes.
Rat gamma_star(const ConstructibleSet& C);

/// C ∩ [-gamma, gamma]^n.
ConstructibleSet clip_to_box(const ConstructibleSet& C, const Rat& gamma);

std::int64_t chi_in_box(const ConstructibleSet& C, const Rat& gamma, const Limits& limits = {});

/// rec(P) == Lin(P) for nonempty P.
bool recession_is_linear(const HPolyhedron& P);

/// (chi, chi_b) of a polyhedron without cell enumeration.
EulerPair chi_polyhedron_closed_form(const HPolyhedron& P);

}  // namespace polygroth
