#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polygroth/constructible.hpp"
#include "polygroth/limits.hpp"
#include "polygroth/polyhedron.hpp"

namespace polygroth::verify {

struct PolyFixture {
  std::string name;
  HPolyhedron P;
};

/// Fixed suite: simplices and cubes up to R^4, cones, half-spaces, strips,
/// affine subspaces, R^n, the empty set and a few products.
std::vector<PolyFixture> polyhedron_suite();

/// Nonempty random polyhedra in R^1..R^3 with small integer normals.
std::vector<PolyFixture> random_polyhedra(std::uint32_t seed, std::size_t count);

/// Caps used by the suite: the R^4 fixtures need more hyperplanes than the
/// interactive default.
Limits suite_limits();

/// Seeded source of random rationals, points, atoms and Boolean sets.
class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  /// k/d with |k/d| <= bound and d in {1, 2, 3}.
  Rat rational(int bound);
  QVec point(std::size_t n, int bound);
  /// Closed or strict atom with normal entries in [-2, 2].
  Atom atom(std::size_t n);
  std::vector<Atom> atoms(std::size_t n, std::size_t count);
  /// Random Boolean combination using each atom of the pool at least once.
  ConstructibleSet combine(std::size_t n, const std::vector<Atom>& pool);
  ConstructibleSet set(std::size_t n, std::size_t atom_count) { return combine(n, atoms(n, atom_count)); }

 private:
  std::mt19937 rng_;
};

}  // namespace polygroth::verify
