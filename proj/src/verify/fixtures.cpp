#include "polygroth/verify/fixtures.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace polygroth::verify {

namespace {

using RowSpec = std::pair<std::vector<int>, Rat>;

HPolyhedron poly(std::size_t n, std::initializer_list<RowSpec> rows) {
  std::vector<Row> out;
  for (const auto& [a, b] : rows) {
    IntVec v;
    for (int x : a) v.emplace_back(x);
    out.push_back({v, b});
  }
  return HPolyhedron(n, out);
}

HPolyhedron cube(std::size_t n) { return HPolyhedron::box(n, 0, 1); }

HPolyhedron simplex(std::size_t n) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    rows.push_back({a, 0});
  }
  rows.push_back({IntVec(n, -1), -1});
  return HPolyhedron(n, rows);
}

HPolyhedron orthant(std::size_t n) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    rows.push_back({a, 0});
  }
  return HPolyhedron(n, rows);
}

HPolyhedron cross_polytope3() {
  std::vector<Row> rows;
  for (int s0 : {-1, 1})
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) rows.push_back({IntVec{Int(s0), Int(s1), Int(s2)}, -1});
  return HPolyhedron(3, rows);
}

}  // namespace

std::vector<PolyFixture> polyhedron_suite() {
  std::vector<PolyFixture> s;
  for (std::size_t n = 0; n <= 4; ++n) s.push_back({"R" + std::to_string(n), HPolyhedron::whole_space(n)});

  s.push_back({"empty_1d", poly(1, {{{1}, 1}, {{-1}, 0}})});
  s.push_back({"origin_1d", poly(1, {{{1}, 0}, {{-1}, 0}})});
  s.push_back({"interval_01", cube(1)});
  s.push_back({"ray_1d", poly(1, {{{1}, 0}})});

  s.push_back({"square", cube(2)});
  s.push_back({"triangle", simplex(2)});
  s.push_back({"quadrant", orthant(2)});
  s.push_back({"half_plane", poly(2, {{{1, 1}, Rat(1, 2)}})});
  s.push_back({"strip", poly(2, {{{0, 1}, 0}, {{0, -1}, -1}})});
  s.push_back({"line_2d", poly(2, {{{1, -1}, 0}, {{-1, 1}, 0}})});
  s.push_back({"point_2d", poly(2, {{{1, 0}, Rat(1, 2)}, {{-1, 0}, Rat(-1, 2)}, {{0, 1}, Rat(-1, 3)}, {{0, -1}, Rat(1, 3)}})});
  s.push_back({"cone_abs", poly(2, {{{-1, 1}, 0}, {{1, 1}, 0}})});
  s.push_back({"cone_shifted", poly(2, {{{-1, 1}, 1}, {{1, 1}, Rat(-1, 2)}})});
  s.push_back({"unbounded_cut", poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 1}})});
  s.push_back({"ray_2d", poly(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{0, -1}, -2}})});
  s.push_back({"segment_2d", poly(2, {{{1, -1}, 0}, {{-1, 1}, 0}, {{1, 0}, -1}, {{-1, 0}, -3}})});
  s.push_back({"empty_2d", poly(2, {{{1, 1}, 1}, {{-1, -1}, 0}})});

  s.push_back({"simplex_3d", simplex(3)});
  s.push_back({"cube_3d", cube(3)});
  s.push_back({"octant", orthant(3)});
  s.push_back({"slab", poly(3, {{{0, 0, 1}, 0}, {{0, 0, -1}, -2}})});
  s.push_back({"plane_3d", poly(3, {{{1, 2, 3}, 1}, {{-1, -2, -3}, -1}})});
  s.push_back({"line_3d", poly(3, {{{1, 0, 0}, 0}, {{-1, 0, 0}, 0}, {{0, 1, 0}, 1}, {{0, -1, 0}, -1}})});
  s.push_back({"prism_triangle_line", poly(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, -1}})});
  s.push_back({"half_space_3d", poly(3, {{{1, -1, 2}, Rat(3, 2)}})});
  s.push_back({"cone_3d", poly(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 1}, 0}})});
  s.push_back({"cross_polytope", cross_polytope3()});

  s.push_back({"simplex_4d", simplex(4)});
  s.push_back({"cube_4d", cube(4)});
  s.push_back({"square_orthant_line_4d",
               poly(4, {{{1, 0, 0, 0}, 0}, {{-1, 0, 0, 0}, -1}, {{0, 1, 0, 0}, 0}, {{0, -1, 0, 0}, -1}, {{0, 0, 1, 0}, 0}})});
  s.push_back({"affine_4d", poly(4, {{{1, 1, 0, 0}, 1}, {{-1, -1, 0, 0}, -1}, {{0, 0, 1, -1}, 2}, {{0, 0, -1, 1}, -2}})});
  return s;
}

std::vector<PolyFixture> random_polyhedra(std::uint32_t seed, std::size_t count) {
  Random r(seed);
  std::vector<PolyFixture> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(r.integer(1, 3));
    const QVec p = r.point(n, 2);
    const int m = r.integer(1, static_cast<int>(n) + 3);
    std::vector<Row> rows;
    for (int i = 0; i < m; ++i) {
      IntVec a(n);
      do {
        for (auto& x : a) x = r.integer(-2, 2);
      } while (is_zero(a));
      const int pick = r.integer(0, 5);
      const Rat slack = Rat(pick) / 2;
      const Rat b = dot(a, p) - slack;
      rows.push_back({a, b});
      if (pick == 0 && r.integer(0, 3) == 0) rows.push_back({Row{a, b}.reversed()});
    }
    out.push_back({"random_" + std::to_string(k), HPolyhedron(n, rows)});
  }
  return out;
}

Limits suite_limits() {
  Limits l;
  l.max_hyperplanes = 20;
  return l;
}

int Random::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rat Random::rational(int bound) {
  const int d = integer(1, 3);
  const int k = integer(-bound * d, bound * d);
  return Rat(k) / d;
}

QVec Random::point(std::size_t n, int bound) {
  QVec x(n);
  for (auto& c : x) c = rational(bound);
  return x;
}

Atom Random::atom(std::size_t n) {
  QVec a(n);
  do {
    for (auto& c : a) c = integer(-2, 2);
  } while (is_zero(a));
  auto [ia, ib] = primitive_normalize(a, rational(2));
  return Atom{ia, ib, coin()};
}

std::vector<Atom> Random::atoms(std::size_t n, std::size_t count) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(atom(n));
  return out;
}

ConstructibleSet Random::combine(std::size_t n, const std::vector<Atom>& pool) {
  std::vector<ConstructibleSet> parts;
  for (const auto& a : pool) parts.push_back(ConstructibleSet::atom(n, to_qvec(a.a), a.b, a.strict));
  if (parts.empty()) return coin() ? ConstructibleSet::universe(n) : ConstructibleSet::empty(n);
  while (parts.size() > 1) {
    const std::size_t i = static_cast<std::size_t>(integer(0, static_cast<int>(parts.size()) - 1));
    ConstructibleSet x = parts[i];
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
    const std::size_t j = static_cast<std::size_t>(integer(0, static_cast<int>(parts.size()) - 1));
    ConstructibleSet y = parts[j];
    switch (integer(0, 3)) {
      case 0: parts[j] = x & y; break;
      case 1: parts[j] = x | y; break;
      case 2: parts[j] = difference(x, y); break;
      default: parts[j] = (!x) & y; break;
    }
  }
  return integer(0, 4) == 0 ? !parts.front() : parts.front();
}

}  // namespace polygroth::verify
