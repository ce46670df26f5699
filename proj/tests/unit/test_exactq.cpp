#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/linalg.hpp"
#include "polygroth/lp.hpp"

using namespace polygroth;
using test::q;

TEST_CASE("rationals stay exact and canonical") {
  const Rat p = q("5/2");
  const Rat r = q("-7/3");
  CHECK((p + r) - r == p);
  CHECK((p * r) / r == p);
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-0")) == "0");
  CHECK_THROWS_AS(parse_rational("1.5"), UsageError);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("1/-2"), UsageError);
}

TEST_CASE("gauss_solve") {
  SUBCASE("identity") {
    QMat A = QMat::from_rows({{1, 0}, {0, 1}}, 2);
    auto s = gauss_solve(A, {q("1/2"), q("-3")});
    REQUIRE(s.particular);
    CHECK(*s.particular == QVec{q("1/2"), q("-3")});
    CHECK(s.nullspace.empty());
  }
  SUBCASE("one equation") {
    QMat A = QMat::from_rows({{1, 1}}, 2);
    auto s = gauss_solve(A, {0});
    REQUIRE(s.particular);
    CHECK((*s.particular)[0] + (*s.particular)[1] == 0);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(s.nullspace[0][0] == -s.nullspace[0][1]);
    CHECK(s.nullspace[0][0] != 0);
  }
  SUBCASE("contradictory") {
    QMat A = QMat::from_rows({{1, 0}, {1, 0}}, 2);
    CHECK_FALSE(gauss_solve(A, {0, 1}).particular);
  }
  SUBCASE("dimension mismatch") {
    QMat A = QMat::from_rows({{1, 0}}, 2);
    CHECK_THROWS_AS(gauss_solve(A, {0, 1}), UsageError);
  }
}

TEST_CASE("lp_optimize") {
  std::vector<Halfspace> interval{{{1}, 0}, {{-1}, -1}};
  auto r = lp_optimize(interval, {1}, Sense::Maximize);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.point == QVec{1});

  std::vector<Halfspace> ray{{{1}, 0}};
  CHECK(lp_optimize(ray, {1}, Sense::Maximize).status == LpStatus::Unbounded);
  CHECK(lp_optimize(ray, {1}, Sense::Minimize).value == 0);

  std::vector<Halfspace> empty{{{1}, 1}, {{-1}, 0}};
  CHECK(lp_optimize(empty, {1}, Sense::Maximize).status == LpStatus::Infeasible);

  std::vector<Halfspace> bad{{{1, 2}, 0}};
  CHECK_THROWS_AS(lp_optimize(bad, {1}, Sense::Maximize), UsageError);
}

TEST_CASE("lp optimum is attained and feasible on a degenerate polygon") {
  // Several constraints through the vertex (1,1).
  std::vector<Halfspace> hs{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -1}, {{0, -1}, -1},
                            {{-1, -1}, -2}, {{-2, -1}, -3}, {{-1, -2}, -3}};
  auto r = lp_optimize(hs, {3, 2}, Sense::Maximize);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 5);
  for (const auto& h : hs) CHECK(dot(h.a, r.point) >= h.b);
}

TEST_CASE("max_uniform_slack") {
  std::vector<Halfspace> eq{{{1, -1}, 0}};
  std::vector<Halfspace> ineq{{{1, 0}, 0}, {{-1, 0}, -4}};
  auto r = max_uniform_slack(eq, ineq, 2);
  CHECK(r.feasible);
  CHECK(r.slack == 1);
  CHECK(r.point[0] == r.point[1]);

  std::vector<Halfspace> flat{{{1}, 0}, {{-1}, 0}};
  auto z = max_uniform_slack({}, flat, 1);
  CHECK(z.feasible);
  CHECK(z.slack == 0);
}

TEST_CASE("primitive_normalize") {
  auto [a1, b1] = primitive_normalize({q("2/3"), q("4/3")}, 2);
  CHECK(a1 == IntVec{1, 2});
  CHECK(b1 == 3);
  auto [a2, b2] = primitive_normalize({-4, 6}, 1);
  CHECK(a2 == IntVec{-2, 3});
  CHECK(b2 == q("1/2"));
  auto [a3, b3] = primitive_normalize({1, 0}, 0);
  CHECK(a3 == IntVec{1, 0});
  CHECK(b3 == 0);
  auto [a4, b4] = primitive_normalize(to_qvec(a2), b2);
  CHECK(a4 == a2);
  CHECK(b4 == b2);
  CHECK_THROWS_AS(primitive_normalize({0, 0}, 1), DegenerateConstraintError);
}
