#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"

using namespace polygroth;
using test::poly;
using test::pt;
using test::set;

namespace {

Hyperplane hp(IntVec a, const char* b) { return Hyperplane{std::move(a), test::q(b)}; }

}  // namespace

TEST_CASE("eval_point") {
  CHECK(eval_point(set("dim 1; x1 >= 0"), pt({"0"})));
  CHECK_FALSE(eval_point(set("dim 1; x1 > 0"), pt({"0"})));
  CHECK_FALSE(eval_point(set("dim 1; x1 >= 0 & !(x1 >= 1)"), pt({"1"})));
  CHECK(eval_point(set("dim 1; x1 >= 0 & !(x1 >= 1)"), pt({"99/100"})));
  CHECK_THROWS_AS(eval_point(set("dim 1; x1 >= 0"), pt({"0", "0"})), UsageError);
}

TEST_CASE("cell_complex counts") {
  auto one = cell_complex(1, {hp({1}, "0")});
  REQUIRE(one.cells.size() == 3);
  CHECK(one.cells[0].signs == std::vector<int>{-1});
  CHECK(one.cells[1].signs == std::vector<int>{0});
  CHECK(one.cells[1].dim == 0);
  CHECK(one.cells[2].signs == std::vector<int>{1});
  CHECK(one.cells[2].dim == 1);

  CHECK(cell_complex(1, {hp({1}, "0"), hp({1}, "1")}).cells.size() == 5);

  auto three = cell_complex(2, {hp({1, 0}, "0"), hp({0, 1}, "0"), hp({1, -1}, "0")});
  CHECK(three.cells.size() == 13);
  int by_dim[3] = {0, 0, 0};
  for (const auto& c : three.cells) ++by_dim[c.dim];
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 6);
  CHECK(by_dim[2] == 6);
  for (std::size_t i = 1; i < three.cells.size(); ++i) CHECK(three.cells[i - 1].signs < three.cells[i].signs);
  for (const auto& c : three.cells)
    for (std::size_t k = 0; k < 3; ++k) CHECK(three.hyperplanes[k].side(c.witness) == c.signs[k]);
}

TEST_CASE("cell_complex deduplicates and caps") {
  auto cc = cell_complex(1, {hp({1}, "0"), hp({-2}, "0"), hp({3}, "0")});
  CHECK(cc.hyperplanes.size() == 1);
  CHECK(cc.cells.size() == 3);
  std::vector<Hyperplane> many;
  for (int i = 0; i < 15; ++i) many.push_back(Hyperplane{{1}, Rat(i)});
  CHECK_THROWS_AS(cell_complex(1, many), ResourceError);
  Limits wide;
  wide.max_hyperplanes = 15;
  CHECK(cell_complex(1, many, wide).cells.size() == 31);
}

TEST_CASE("to_signed_combo") {
  SUBCASE("half-open interval") {
    auto f = to_signed_combo(set("dim 1; x1 >= 0 & !(x1 >= 1)"));
    SignedPolyCombo g(1);
    g.add(poly("1 >= 0"), 1);
    g.add(poly("1 >= 1"), -1);
    CHECK(functions_equal(f, g));
    CHECK(f.terms().size() == 2);
  }
  SUBCASE("closed polyhedron") {
    auto P = poly("1 0 >= 0; 0 1 >= 0; -1 -1 >= -1");
    auto f = to_signed_combo(ConstructibleSet::from_polyhedron(P));
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().begin()->first == *canonical(P));
    CHECK(f.terms().begin()->second == 1);
  }
  SUBCASE("union of overlapping polyhedra") {
    auto f = to_signed_combo(set("dim 1; (x1 >= 0 & x1 <= 2) | (x1 >= 1 & x1 <= 3)"));
    SignedPolyCombo g(1);
    g.add(poly("1 >= 0; -1 >= -2"), 1);
    g.add(poly("1 >= 1; -1 >= -3"), 1);
    g.add(poly("1 >= 1; -1 >= -2"), -1);
    CHECK(functions_equal(f, g));
  }
  SUBCASE("exclusive or of three sets") {
    auto C = set("dim 2; !(x1 >= 0 & x2 >= 0) & (x1 + x2 > 1 | x1 - x2 >= 0)");
    auto X = set("dim 1; (x1 >= 0 & !(x1 >= 2)) | (x1 >= 1 & !(x1 >= 3)) | x1 > 5");
    for (const auto& S : {C, X}) {
      auto f = to_signed_combo(S);
      const auto cc = cell_complex(S.dim(), hyperplanes_of(S));
      for (const auto& cell : cc.cells) CHECK(f.eval(cell.witness) == (S.contains(cell.witness) ? 1 : 0));
    }
  }
}

TEST_CASE("functions_equal") {
  SignedPolyCombo f(1);
  f.add(poly("1 >= 0"), 1);
  f.add(poly("-1 >= -1"), 1);
  f.add(poly("dim 1; true"), -1);
  CHECK(functions_equal(f, SignedPolyCombo::indicator(poly("1 >= 0; -1 >= -1"))));

  CHECK_FALSE(functions_equal(SignedPolyCombo::indicator(poly("1 >= 0")),
                              SignedPolyCombo::indicator(poly("1 >= 1"))));

  auto P = poly("1 0 >= 0; 0 1 >= 0");
  SignedPolyCombo twice(2);
  twice.add(P, 2);
  twice.add(P, -1);
  CHECK(functions_equal(twice, SignedPolyCombo::indicator(P)));
  auto zero_term = twice;
  zero_term.add(poly("1 0 >= 5"), 0);
  CHECK(functions_equal(zero_term, twice));
}

TEST_CASE("sets_equal and set operations") {
  CHECK(sets_equal(set("dim 2; x1 >= 0 & x2 >= 0"), set("dim 2; !(x1 < 0 | x2 < 0)")));
  CHECK_FALSE(sets_equal(set("dim 1; x1 >= 0"), set("dim 1; x1 > 0")));
  auto sq = product(set("dim 1; x1 >= 0 & x1 <= 1"), set("dim 1; x1 >= 0 & x1 <= 1"));
  CHECK(sets_equal(sq, set("dim 2; x1 >= 0 & x1 <= 1 & x2 >= 0 & x2 <= 1")));
  CHECK(sets_equal(translate(set("dim 1; x1 >= 0"), pt({"3/2"})), set("dim 1; x1 >= 3/2")));
  QMat shear = QMat::from_rows({{1, 1}, {0, 1}}, 2);
  CHECK(sets_equal(linear_image(set("dim 2; x1 > 0 & x2 >= 0"), shear), set("dim 2; x1 > x2 & x2 >= 0")));
  CHECK_THROWS_AS(set("dim 1; x1 >= 0") & set("dim 2; x1 >= 0"), UsageError);
  CHECK_THROWS_AS(ConstructibleSet::atom(2, {0, 0}, 1), DegenerateConstraintError);
}
