#include "polygroth/verify/checks.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "polygroth/briangram.hpp"
#include "polygroth/dsl.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/euler.hpp"
#include "polygroth/grothendieck.hpp"
#include "polygroth/motivic.hpp"
#include "polygroth/onedim.hpp"
#include "polygroth/verify/fixtures.hpp"
#include "polygroth/verify/oracles.hpp"

namespace polygroth::verify {

namespace {

/// Collects failures; a check passes when nothing was recorded.
struct Report {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::string note;

  bool overflow = false;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures.size() < 5) {
      failures.push_back(what);
    } else {
      overflow = true;
    }
  }
};

using CheckFn = std::function<void(Report&)>;

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

ConstructibleSet set1(const std::string& body) { return parse_constructible("dim 1; " + body); }
ConstructibleSet set2(const std::string& body) { return parse_constructible("dim 2; " + body); }

std::string str(const GradedClass& c) { return c.render(); }

std::string str(const EulerPair& e) {
  return "(" + std::to_string(e.chi) + ", " + std::to_string(e.chi_b) + ")";
}

// P - t.
HPolyhedron shifted(const HPolyhedron& P, const QVec& t) {
  std::vector<Row> rows;
  for (const Row& r : P.rows()) rows.push_back({r.a, r.b - dot(r.a, t)});
  return HPolyhedron(P.dim(), rows);
}

int parity(int k) { return k % 2 == 0 ? 1 : -1; }

QVec random_exterior_point(Random& rng, const HPolyhedron& P) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    QVec x = rng.point(P.dim(), 3);
    if (!P.contains(x)) return x;
  }
  throw Error("no exterior point found");
}

// Random Boolean combination in R^n, n in 1..3.
ConstructibleSet random_set(Random& rng, int min_atoms, int max_atoms, std::size_t n = 0) {
  if (n == 0) n = static_cast<std::size_t>(rng.integer(1, 3));
  return rng.set(n, static_cast<std::size_t>(rng.integer(min_atoms, max_atoms)));
}

Bivariate random_bivariate(Random& rng) {
  Bivariate p;
  const int terms = rng.integer(1, 4);
  for (int t = 0; t < terms; ++t) p[{rng.integer(0, 2), rng.integer(0, 2)}] += rng.integer(-3, 3);
  return p;
}

IntPoly random_poly(Random& rng, int max_degree) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rng.integer(0, max_degree)) + 1);
  for (auto& x : c) x = rng.integer(-4, 4);
  return IntPoly(c);
}

// ---- criterion 1 ----

void generators_chi(Report& r) {
  const EulerPair closed = euler_pair(set1("x1 >= 0"));
  const EulerPair open = euler_pair(set1("x1 > 0"));
  r.expect(closed == EulerPair{0, 1}, "R>=0 gave " + str(closed));
  r.expect(open == EulerPair{-1, 0}, "R>0 gave " + str(open));
  r.note = "chi(R>=0)=" + std::to_string(closed.chi) + " chi_b(R>=0)=" + std::to_string(closed.chi_b) +
           " chi(R>0)=" + std::to_string(open.chi) + " chi_b(R>0)=" + std::to_string(open.chi_b);
}

// ---- criterion 2 ----

void generator_product_ring(Report& r) {
  const GradedClass a = class_of(set1("x1 >= 0"));
  const GradedClass b = class_of(set1("x1 > 0"));
  r.expect(a == GradedClass::v(), "class(R>=0) = " + str(a));
  r.expect(b == -GradedClass::u(), "class(R>0) = " + str(b));
  r.expect((a * b).is_zero(), "product = " + str(a * b));
  const GradedClass direct = class_of(product(set1("x1 >= 0"), set1("x1 > 0")));
  r.expect(direct.is_zero(), "class(R>=0 x R>0) = " + str(direct));
}

void generator_product_partition(Report& r) {
  const ConstructibleSet C = set2("x1 > 0 & x2 >= 0");
  const ConstructibleSet C1 = set2("x1 - x2 > 0 & x2 >= 0");
  const ConstructibleSet C2 = set2("x2 - x1 >= 0 & x1 > 0");
  r.expect(sets_equal(C, C1 | C2), "C != C1 u C2");
  r.expect(sets_equal(C1 & C2, ConstructibleSet::empty(2)), "C1 and C2 intersect");
  const QMat shear1 = QMat::from_rows({{1, 1}, {0, 1}}, 2);
  const QMat shear2 = QMat::from_rows({{1, 0}, {1, 1}}, 2);
  r.expect(sets_equal(linear_image(C, shear1), C1), "shear does not map C onto C1");
  r.expect(sets_equal(linear_image(C, shear2), C2), "shear does not map C onto C2");
  const GradedClass k = class_of(C);
  const GradedClass k1 = class_of(C1);
  const GradedClass k2 = class_of(C2);
  r.expect(k == k1 && k == k2, "classes differ: " + str(k) + ", " + str(k1) + ", " + str(k2));
  r.expect(k == k1 + k2 && k.is_zero(), "class(C) = " + str(k));
}

// ---- criterion 3 ----

void bg_suite(Report& r) {
  const Limits lim = suite_limits();
  for (const auto& f : polyhedron_suite()) r.expect(bg_verify(f.P, lim), f.name);
}

void bg_random(Report& r) {
  const Limits lim = suite_limits();
  for (const auto& f : random_polyhedra(3001, 20)) r.expect(bg_verify(f.P, lim), f.name + ": " + render_polyhedron(f.P));
}

void bg_strip(Report& r) {
  const HPolyhedron strip = parse_polyhedron("0 1 >= 0\n0 -1 >= -1\n");
  const BGDecomposition d = bg_decompose(strip);
  r.expect(d.ell == 1, "ell = " + std::to_string(d.ell));
  r.expect(d.terms.size() == 3, "terms = " + std::to_string(d.terms.size()));
  int plus = 0;
  int minus = 0;
  for (const auto& t : d.terms) {
    if (t.sign > 0) {
      ++plus;
      r.expect(t.face.dim == 1, "positive term of dim " + std::to_string(t.face.dim));
    } else {
      ++minus;
      r.expect(t.face.dim == 2 && t.cone.rows().empty(), "negative term is not R^2");
    }
  }
  r.expect(plus == 2 && minus == 1, "sign pattern");
  r.expect(bg_verify(d), "identity fails");
}

void bg_interval(Report& r) {
  const HPolyhedron I = parse_polyhedron("1 >= 0\n-1 >= -1\n");
  BGDecomposition d = bg_decompose(I);
  r.expect(d.ell == 0 && d.terms.size() == 3, "shape of the decomposition");
  r.expect(bg_verify(d), "identity fails");
  int negatives = 0;
  for (const auto& t : d.terms) negatives += t.sign < 0;
  r.expect(negatives == 1, "expected one negative term");
  BGDecomposition mutated = d;
  mutated.terms.front().sign = -mutated.terms.front().sign;
  r.expect(!bg_verify(mutated), "sign flip went undetected");
}

void bg_quadrant(Report& r) {
  const HPolyhedron Q = parse_polyhedron("1 0 >= 0\n0 1 >= 0\n");
  const BGDecomposition d = bg_decompose(Q);
  r.expect(d.ell == 0 && d.terms.size() == 1, "expected a single term");
  if (d.terms.size() == 1) {
    r.expect(d.terms[0].face.dim == 0 && d.terms[0].sign == 1, "vertex term");
    r.expect(canonical(d.terms[0].cone) == canonical(Q), "cone is not the quadrant");
  }
  r.expect(bg_verify(d), "identity fails");
}

// ---- criterion 4 ----

void bounded_union_contractible(Report& r) {
  const Limits lim = suite_limits();
  for (const auto& f : polyhedron_suite()) {
    if (is_empty(f.P)) continue;
    const int want = parity(recession(f.P).ell);
    const std::int64_t got = bounded_union_chi(f.P, lim);
    r.expect(got == want, f.name + ": chi(U_b) = " + std::to_string(got));
  }
}

void visible_union_contractible(Report& r) {
  const Limits lim = suite_limits();
  Random rng(4001);
  for (const auto& f : polyhedron_suite()) {
    if (is_empty(f.P) || f.P.rows().empty()) continue;
    const int want = parity(recession(f.P).ell);
    for (int k = 0; k < 10; ++k) {
      const QVec x = random_exterior_point(rng, f.P);
      const std::int64_t got = visible_union_chi(f.P, x, lim);
      r.expect(got == want, f.name + " from " + to_string(x) + ": chi(U_v) = " + std::to_string(got));
    }
  }
}

// ---- criterion 5 ----

void polyhedron_closed_form(Report& r) {
  const Limits lim = suite_limits();
  for (const auto& f : polyhedron_suite()) {
    const ConstructibleSet C = ConstructibleSet::from_polyhedron(f.P);
    const EulerPair cells = euler_pair(C, lim);
    const EulerPair closed = chi_polyhedron_closed_form(f.P);
    r.expect(cells == closed, f.name + ": cells " + str(cells) + " closed form " + str(closed));
    const GradedClass a = class_of(C, lim);
    const GradedClass b = class_of_polyhedron_closed_form(f.P);
    r.expect(a == b, f.name + ": " + str(a) + " vs " + str(b));
  }
}

void cone_closed_form(Report& r) {
  const Limits lim = suite_limits();
  for (const auto& f : polyhedron_suite()) {
    if (is_empty(f.P)) continue;
    for (const Face& F : faces(f.P, lim)) {
      const HPolyhedron T = tangent_cone(F);
      const HPolyhedron K = shifted(T, minimal_face_point(T));
      const GradedClass a = class_of_cone(K);
      const GradedClass b = class_of(ConstructibleSet::from_polyhedron(K), lim);
      r.expect(a == b, f.name + " face dim " + std::to_string(F.dim) + ": " + str(a) + " vs " + str(b));
    }
  }
}

void polyhedron_line_deviation(Report& r) {
  const HPolyhedron line = parse_polyhedron("1 -1 >= 0\n-1 1 >= 0\n");
  const EulerPair e = euler_pair(ConstructibleSet::from_polyhedron(line));
  r.expect(e.chi == -1, "chi(line) = " + std::to_string(e.chi));
  r.expect(e.chi_b == 1, "chi_b(line) = " + std::to_string(e.chi_b));
  r.expect(chi_polyhedron_closed_form(line) == e, "closed form disagrees");
  r.expect(class_of_polyhedron_closed_form(line) == GradedClass::from_euler(2, {-1, 1}), "closed-form class");
  r.note = "line in R^2: chi = -1 (the uncorrected trichotomy would give 0)";
}

// ---- criterion 6 ----

void scissor_random(Report& r) {
  Random rng(6001);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const ConstructibleSet C = random_set(rng, 2, 4, n);
    const ConstructibleSet D = C & random_set(rng, 1, 2, n);
    const GradedClass whole = class_of(C);
    const GradedClass parts = class_of(D) + class_of(difference(C, D));
    r.expect(whole == parts, render_constructible(C) + " / " + render_constructible(D) + ": " + str(whole) +
                                 " vs " + str(parts));
  }
}

void product_law_random(Report& r) {
  Random rng(6002);
  const ConstructibleSet point = set1("x1 = 0");
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 2));
    const std::size_t n = m == 2 ? 1 : static_cast<std::size_t>(rng.integer(1, 2));
    const ConstructibleSet C = random_set(rng, 1, 3, m);
    const ConstructibleSet D = random_set(rng, 1, 3, n);
    const GradedClass lhs = class_of(product(C, D));
    const GradedClass rhs = class_of(C) * class_of(D);
    r.expect(lhs == rhs, render_constructible(C) + " x " + render_constructible(D) + ": " + str(lhs) + " vs " +
                             str(rhs));
    const GradedClass shifted_class = class_of(product(C, point));
    r.expect(shifted_class == class_of(C) * GradedClass::sigma(), "sigma shift on " + render_constructible(C));
  }
}

void rational_iso_collapse(Report& r) {
  const ConstructibleSet a = set1("x1 >= 0 & -x1 >= -1");
  const ConstructibleSet b = set1("x1 >= 0 & -x1 >= -2");
  r.expect(sets_equal(linear_image(a, QMat::from_rows({{2}}, 1)), b), "scaling does not map [0,1] onto [0,2]");
  const GradedClass ka = class_of(a);
  const GradedClass kb = class_of(b);
  r.expect(ka == kb, str(ka) + " vs " + str(kb));
  r.expect(ka == GradedClass::sigma(), "class([0,1]) = " + str(ka));
}

// ---- criterion 7 ----

void ungraded_image(Report& r) {
  Random rng(7001);
  r.expect(ungraded(GradedClass::sigma()) == UngradedClass{1, 1}, "sigma does not map to (1, 1)");
  for (int k = 0; k < 100; ++k) {
    const ConstructibleSet C = random_set(rng, 1, 4);
    const UngradedClass got = ungraded(class_of(C));
    const EulerPair e = euler_pair(C);
    r.expect(got == UngradedClass{e.chi, e.chi_b}, render_constructible(C));
  }
}

// ---- criterion 8 ----

void chi_gamma_points(Report& r) {
  const SubgroupQ Z = SubgroupQ::cyclic(1);
  const std::int64_t zero = chi_gamma(set1("x1 = 0"), Z);
  const std::int64_t half = chi_gamma(set1("x1 = 1/2"), Z);
  r.expect(zero == 2, "chi_Z({0}) = " + std::to_string(zero));
  r.expect(half == 0, "chi_Z({1/2}) = " + std::to_string(half));
  r.note = "chi_Z({0})=" + std::to_string(zero) + " chi_Z({1/2})=" + std::to_string(half);
}

std::vector<SubgroupQ> sample_groups() {
  return {SubgroupQ::cyclic(1), SubgroupQ::cyclic(Rat(1, 2)), SubgroupQ::cyclic(3), SubgroupQ::divisible()};
}

void chi_gamma_additivity(Report& r) {
  Random rng(8001);
  for (int k = 0; k < 200; ++k) {
    const ConstructibleSet A = random_set(rng, 1, 4, 1);
    const ConstructibleSet B = difference(random_set(rng, 1, 4, 1), A);
    for (const SubgroupQ& g : sample_groups()) {
      const std::int64_t whole = chi_gamma(A | B, g);
      const std::int64_t parts = chi_gamma(A, g) + chi_gamma(B, g);
      r.expect(whole == parts, render_constructible(A) + " / " + render_constructible(B) + " over " + g.render());
    }
  }
}

void chi_gamma_divisible_collapse(Report& r) {
  Random rng(8001);
  for (int k = 0; k < 200; ++k) {
    const ConstructibleSet C = random_set(rng, 1, 4, 1);
    const EulerPair e = euler_pair(C);
    const std::int64_t q = chi_gamma(C, SubgroupQ::divisible());
    r.expect(q == e.chi + e.chi_b, render_constructible(C) + ": chi_Q = " + std::to_string(q));
  }
}

// ---- criterion 9 ----

const IntPoly L_minus_1 = IntPoly({-1, 1});

void motivic_generators(Report& r) {
  const VFClass closed = theta_trop_class(set1("x1 >= 0"));
  const VFClass open = theta_trop_class(set1("x1 > 0"));
  const VFClass sphere = theta_trop_class(set1("x1 = 0"));
  r.expect(closed == VFClass(L_minus_1, IntPoly()), "R>=0 -> " + closed.render());
  r.expect(open == VFClass(IntPoly(), L_minus_1), "R>0 -> " + open.render());
  r.expect(sphere == VFClass(L_minus_1, IntPoly({1, -1})), "point -> " + sphere.render());
  r.note = "R>=0 -> " + closed.render() + "; R>0 -> " + open.render();
}

void motivic_relation(Report& r) {
  const VFClass one = VFClass::integer(1);
  const VFClass prod = (VFClass::L() - one) * (VFClass::tau() - one);
  r.expect(prod.is_zero(), "(L-1)(tau-1) = " + prod.render());
  const Bivariate rel{{{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}};
  r.expect(reduce_mixed(rel).empty(), "normal form of (L-1)(tau-1) is nonzero");
}

void psi_morphism(Report& r) {
  Random rng(9001);
  r.expect(psi(VFClass::integer(1)) == IntPoly::constant(1), "psi(1) != 1");
  for (int k = 0; k < 100; ++k) {
    const Bivariate p = random_bivariate(rng);
    const Bivariate q = random_bivariate(rng);
    const VFClass x = to_pair(p);
    const VFClass y = to_pair(q);
    r.expect(psi(x * y) == psi(x) * psi(y), "multiplicativity");
    r.expect(psi(x + y) == psi(x) + psi(y), "additivity");
    r.expect(to_pair(reduce_mixed(bivariate_mul(p, q))) == x * y, "normal form disagrees with the pair model");
  }
  for (int k = 0; k < 30; ++k) {
    const ConstructibleSet C = random_set(rng, 1, 3);
    IntPoly want = IntPoly::constant(chi_b(C));
    for (std::size_t i = 0; i < C.dim(); ++i) want = want * L_minus_1;
    r.expect(psi(theta_trop_class(C)) == want, "psi(theta_trop) on " + render_constructible(C));
  }
}

void kernel_factorization(Report& r) {
  Random rng(9002);
  const VFClass t1 = VFClass::tau() - VFClass::integer(1);
  for (int k = 0; k < 100; ++k) {
    const IntPoly h = random_poly(rng, 3);
    const VFClass x(IntPoly(), h * IntPoly({-1, 1}));
    const auto y = kernel_factor(x);
    r.expect(y.has_value() && t1 * *y == x, "no factor for " + x.render());
    const IntPoly f = random_poly(rng, 3);
    if (f.is_zero()) continue;
    const VFClass z(f, IntPoly::constant(f.eval(1)));
    r.expect(!kernel_factor(z).has_value(), "factor found outside the kernel: " + z.render());
  }
}

void kernel_open_vs_closed_ball(Report& r) {
  const VFClass one = VFClass::integer(1);
  const VFClass open_ball = semialg_class(parse_semialg("torus 1; val(x1) > 0; point;"));
  const VFClass closed_ball = semialg_class(parse_semialg("torus 1; val(x1) >= 0; point;"));
  const LPoly open_psi = psi(open_ball - one);
  const LPoly closed_psi = psi(closed_ball - one);
  r.expect(open_psi.is_zero(), "psi([B_o] - 1) = " + open_psi.render("L"));
  r.expect(closed_psi == L_minus_1, "psi([B] - 1) = " + closed_psi.render("L"));
  r.expect(in_kernel_psi(open_ball - one) && !in_kernel_psi(closed_ball - one), "kernel membership");
  r.note = "psi([B_o]-1)=" + open_psi.render("L") + " psi([B]-1)=" + closed_psi.render("L");
}

// ---- criterion 10 ----

void chi_b_stability(Report& r) {
  const Limits lim = suite_limits();
  Random rng(10001);
  std::vector<ConstructibleSet> corpus;
  for (int k = 0; k < 60; ++k) corpus.push_back(random_set(rng, 1, 4));
  for (const auto& f : polyhedron_suite())
    if (f.P.dim() <= 3) corpus.push_back(ConstructibleSet::from_polyhedron(f.P));
  for (const auto& C : corpus) {
    const std::int64_t base = chi_b(C, lim);
    const std::int64_t doubled = chi_in_box(C, 2 * gamma_star(C), lim);
    r.expect(base == doubled, render_constructible(C) + ": " + std::to_string(base) + " vs " + std::to_string(doubled));
    const std::int64_t closure = chi_b_by_closure(C, lim);
    r.expect(base == closure, render_constructible(C) + ": closure oracle " + std::to_string(closure));
  }
}

void cell_counts_bruteforce(Report& r) {
  struct Fixture {
    std::size_t dim;
    std::vector<Hyperplane> hs;
    std::size_t cells;
  };
  const std::vector<Fixture> fixtures{
      {1, {{{1}, 0}}, 3},
      {1, {{{1}, 0}, {{1}, 1}}, 5},
      {2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, -1}, 0}}, 13},
  };
  std::ostringstream counts;
  for (const auto& f : fixtures) {
    const CellComplex cx = cell_complex(f.dim, f.hs);
    std::vector<std::vector<int>> signs;
    for (const auto& c : cx.cells) signs.push_back(c.signs);
    r.expect(cx.cells.size() == f.cells, "cell count " + std::to_string(cx.cells.size()));
    r.expect(signs == brute_force_sign_vectors(f.dim, cx.hyperplanes), "sign vectors differ from brute force");
    counts << cx.cells.size() << ' ';
  }
  Random rng(10002);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const auto hs = hyperplanes_of(rng.set(n, static_cast<std::size_t>(rng.integer(1, 4))));
    std::vector<std::vector<int>> signs;
    for (const auto& c : cell_complex(n, hs).cells) signs.push_back(c.signs);
    r.expect(signs == brute_force_sign_vectors(n, normalize_arrangement(hs)), "random arrangement " + std::to_string(k));
  }
  const Limits lim = suite_limits();
  for (const auto& f : polyhedron_suite()) {
    if (is_empty(f.P)) continue;
    const std::size_t got = faces(f.P, lim).size();
    const std::size_t want = brute_force_face_count(f.P);
    r.expect(got == want, f.name + ": faces " + std::to_string(got) + " vs " + std::to_string(want));
  }
  r.note = "cells " + counts.str() + "match brute force";
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{"generators_chi", 1, "chi and chi_b of the two generators"}, generators_chi},
      {{"generator_product_ring", 2, "class(R>=0) * class(R>0) = 0"}, generator_product_ring},
      {{"generator_product_partition", 2, "R>0 x R>=0 splits into two isomorphic copies"}, generator_product_partition},
      {{"bg_suite", 3, "decomposition identity on the fixture suite"}, bg_suite},
      {{"bg_random", 3, "decomposition identity on 20 random polyhedra"}, bg_random},
      {{"bg_strip", 3, "strip decomposition"}, bg_strip},
      {{"bg_interval", 3, "interval decomposition and a mutated sign"}, bg_interval},
      {{"bg_quadrant", 3, "quadrant decomposition"}, bg_quadrant},
      {{"bounded_union_contractible", 4, "chi of the bounded union"}, bounded_union_contractible},
      {{"visible_union_contractible", 4, "chi of visible unions from exterior points"}, visible_union_contractible},
      {{"polyhedron_closed_form", 5, "closed-form classes against cells"}, polyhedron_closed_form},
      {{"cone_closed_form", 5, "cone classes against cells"}, cone_closed_form},
      {{"polyhedron_line_deviation", 5, "a line in R^2 has chi = -1"}, polyhedron_line_deviation},
      {{"scissor_random", 6, "class(C) = class(D) + class(C \\ D)"}, scissor_random},
      {{"product_law_random", 6, "class is multiplicative"}, product_law_random},
      {{"rational_iso_collapse", 6, "[0,1] and [0,2] have equal classes"}, rational_iso_collapse},
      {{"ungraded_image", 7, "ungraded image is (chi, chi_b)"}, ungraded_image},
      {{"chi_gamma_points", 8, "chi_Z of {0} and {1/2}"}, chi_gamma_points},
      {{"chi_gamma_additivity", 8, "chi_Gamma is additive"}, chi_gamma_additivity},
      {{"chi_gamma_divisible_collapse", 8, "chi_Q = chi + chi_b"}, chi_gamma_divisible_collapse},
      {{"motivic_generators", 9, "theta_trop of R>=0, R>0 and a point"}, motivic_generators},
      {{"motivic_relation", 9, "(L-1)(tau-1) = 0"}, motivic_relation},
      {{"psi_morphism", 9, "psi is a ring morphism"}, psi_morphism},
      {{"kernel_factorization", 9, "kernel elements factor through tau-1"}, kernel_factorization},
      {{"kernel_open_vs_closed_ball", 9, "open and closed ball kernel candidates"}, kernel_open_vs_closed_ball},
      {{"chi_b_stability", 10, "chi_b is stable under doubling the box"}, chi_b_stability},
      {{"cell_counts_bruteforce", 10, "cells and faces against brute force"}, cell_counts_bruteforce},
  };
  return list;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t star = std::string_view::npos;
  std::size_t mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

CheckResult run_check(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.info.name != name) continue;
    CheckResult res{e.info.name, e.info.criterion, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
      e.fn(rep);
      res.passed = rep.failures.empty();
      if (res.passed) {
        res.detail = rep.note.empty() ? std::to_string(rep.cases) + " cases" : rep.note;
      } else {
        std::string d;
        for (const auto& f : rep.failures) d += (d.empty() ? "" : "; ") + f;
        if (rep.overflow) d += "; ...";
        res.detail = d;
      }
    } catch (const std::exception& ex) {
      res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
  }
  throw UsageError("unknown check: " + name);
}

std::vector<CheckResult> run_checks(std::string_view pattern) {
  std::vector<CheckResult> out;
  for (const auto& e : entries())
    if (glob_match(pattern, e.info.name)) out.push_back(run_check(e.info.name));
  return out;
}

std::string criterion_title(int criterion) {
  static const char* titles[] = {"",
                                 "generator values",
                                 "product of generators vanishes",
                                 "Brianchon-Gram decomposition",
                                 "contractible face unions",
                                 "cone and polyhedron closed forms",
                                 "scissor, product and isomorphism relations",
                                 "ungraded image",
                                 "one-dimensional chi_Gamma",
                                 "motivic model",
                                 "cell oracle self-consistency"};
  if (criterion < 1 || criterion > 10) throw UsageError("criterion out of range");
  return titles[criterion];
}

}  // namespace polygroth::verify
