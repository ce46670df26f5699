#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"

using namespace polygroth;
using test::pt;
using test::q;

TEST_CASE("constructible DSL") {
  auto C = parse_constructible("dim 2; 2x1 - 3x2 >= 5/2 & x1 > 0");
  CHECK(C.dim() == 2);
  CHECK(C.contains(pt({"2", "0"})));
  CHECK_FALSE(C.contains(pt({"0", "-1"})));
  auto D = parse_constructible("dim 2;\n# comment\n 2*x1 >= 3*x2 + 5/2 & 0 < x1");
  CHECK(sets_equal(C, D));
  auto E = parse_constructible("dim 1; 1/2x1 >= 1");
  CHECK(E.contains(pt({"2"})));
  CHECK_FALSE(E.contains(pt({"3/2"})));
}

TEST_CASE("precedence: ! binds tighter than &, then \\, then |") {
  auto C = parse_constructible("dim 1; x1 >= 0 | x1 >= 5 \\ x1 >= 3 & x1 < 10");
  // x1 >= 0 | (x1 >= 5 \ (x1 >= 3 & x1 < 10))
  CHECK(C.contains(pt({"4"})));
  CHECK(C.contains(pt({"11"})));
  CHECK_FALSE(C.contains(pt({"-1"})));
  auto D = parse_constructible("dim 1; (x1 >= 5 \\ x1 >= 3) & x1 < 10");
  CHECK_FALSE(D.contains(pt({"6"})));
  auto N = parse_constructible("dim 1; !x1 >= 0 & x1 > -1");
  CHECK(N.contains(pt({"-1/2"})));
}

TEST_CASE("constant relations and keywords") {
  CHECK(parse_constructible("dim 1; 0 >= 1").expr()->op == Op::False);
  CHECK(parse_constructible("dim 1; x1 - x1 >= -1").expr()->op == Op::True);
  CHECK(parse_constructible("dim 0; true").dim() == 0);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_constructible("dim 2;\nx1 >= 0 &\n  x3 >= 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_constructible("x1 >= 0"), ParseError);
  CHECK_THROWS_AS(parse_constructible("dim 1; x1 >= 1/0"), ParseError);
  CHECK_THROWS_AS(parse_constructible("dim 1; x1 >= 1.5"), ParseError);
  CHECK_THROWS_AS(parse_constructible("dim 1; x1 >= 0 @"), ParseError);
  CHECK_THROWS_AS(parse_constructible("dim 1; (x1 >= 0"), ParseError);
}

TEST_CASE("polyhedron literal") {
  auto P = parse_polyhedron("# square\n1 0 >= 0\n0 1 >= 0\n\n-1 0 >= -1\n0 -1 >= -1\n");
  CHECK(P.dim() == 2);
  CHECK(P.rows().size() == 4);
  auto Q = parse_polyhedron("2 4 >= 1/3; -1 0 >= -5");
  CHECK(Q.rows()[0].a == IntVec{1, 2});
  CHECK(Q.rows()[0].b == q("1/6"));
  CHECK(parse_polyhedron("dim 3; true").rows().empty());
  CHECK(parse_polyhedron("dim 2; x1 = 0 & x2 >= 1").rows().size() == 3);
  CHECK(is_empty(parse_polyhedron("dim 2; false")));
  CHECK_THROWS_AS(parse_polyhedron("dim 1; x1 > 0"), UsageError);
  CHECK_THROWS_AS(parse_polyhedron("1 0 >= 0\n1 >= 0"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron("1 x >= 0"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron("0 0 >= 1"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron("# nothing\n"), ParseError);
}

TEST_CASE("round trip") {
  for (const char* text : {"dim 2; 2x1 - 3x2 >= 5/2 & x1 > 0", "dim 1; !(x1 >= 0 & x1 < 1) | x1 = 3",
                           "dim 3; !!(x1 >= 0) | (x2 > 1 | x3 >= -1/2) & x1 < 2", "dim 0; true",
                           "dim 2; false | x1 >= 0 \\ x2 >= 0"}) {
    auto C = parse_constructible(text);
    auto again = parse_constructible(render_constructible(C));
    CHECK(render_constructible(again) == render_constructible(C));
    CHECK(same_expression(*again.expr(), *C.expr()));
  }
  auto P = parse_polyhedron("1 0 >= 0; 0 1 >= -1/2");
  CHECK(parse_polyhedron(render_polyhedron(P)) == P);
}

TEST_CASE("semialg DSL") {
  auto s = parse_semialg("torus 1; val(x1) >= 0");
  CHECK(s.n == 1);
  CHECK(s.extra_points == 0);
  CHECK(sets_equal(s.body, parse_constructible("dim 1; x1 >= 0")));

  auto t = parse_semialg("torus 1; val(x1) >= val(t^1)");
  CHECK(sets_equal(t.body, parse_constructible("dim 1; x1 >= 1")));

  auto u = parse_semialg("torus 2; val(x1^2) > val(t^1 * x2)");
  CHECK(sets_equal(u.body, parse_constructible("dim 2; 2x1 - x2 > 1")));

  auto ball = parse_semialg("torus 1; val(x1) >= 0; point;");
  CHECK(ball.extra_points == 1);
  auto pts = parse_semialg("torus 2; point; point");
  CHECK(pts.extra_points == 2);
  CHECK(pts.body.expr()->op == Op::False);

  CHECK_THROWS_AS(parse_semialg("torus 1; val(x1 + 1) >= 0"), UnsupportedError);
  CHECK_THROWS_AS(parse_semialg("torus 1; val(x1) >= 0; val(x1) <= 2"), ParseError);
  CHECK_THROWS_AS(parse_semialg("dim 1; val(x1) >= 0"), ParseError);

  auto r = parse_semialg(render_semialg(u));
  CHECK(same_expression(*r.body.expr(), *u.body.expr()));
  CHECK(parse_semialg(render_semialg(ball)).extra_points == 1);
}
