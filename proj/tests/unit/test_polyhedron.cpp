#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"

using namespace polygroth;
using test::poly;
using test::pt;

namespace {

const char* kSquare = "1 0 >= 0; 0 1 >= 0; -1 0 >= -1; 0 -1 >= -1";

Face face_with_witness(const std::vector<Face>& fs, const QVec& x) {
  for (const auto& f : fs)
    if (f.witness == x) return f;
  FAIL("no face with the requested witness");
  return {};
}

}  // namespace

TEST_CASE("emptiness, dimension, containment") {
  CHECK(is_empty(poly("1 >= 1\n-1 >= 0")));
  CHECK(dimension(poly(kSquare)) == 2);
  CHECK(dimension(poly("1 0 >= 0\n-1 0 >= 0")) == 1);
  CHECK(dimension(poly("dim 3; true")) == 3);
  CHECK_THROWS_AS(dimension(poly("1 >= 1\n-1 >= 0")), DomainError);
  CHECK(contains(poly(kSquare), pt({"1/2", "1"})));
  CHECK_FALSE(contains(poly(kSquare), pt({"1/2", "11/10"})));
}

TEST_CASE("irredundant") {
  CHECK(irredundant(poly("1 >= 0\n1 >= -1")).rows().size() == 1);
  CHECK(irredundant(poly("1 >= 0\n1 >= -1")).rows()[0].b == 0);
  CHECK(irredundant(poly("1 >= 0\n-1 >= 0\n1 >= -5")).rows().size() == 2);
  CHECK(irredundant(poly(std::string(kSquare) + "; 2 0 >= 0")).rows().size() == 4);
  CHECK_THROWS_AS(irredundant(poly("1 >= 1\n-1 >= 0")), DomainError);
}

TEST_CASE("canonical forms identify equal sets") {
  auto a = canonical(poly("1 0 >= 0; 0 1 >= 0; -1 -1 >= -1"));
  auto b = canonical(poly("2 0 >= 0; -1 -1 >= -1; 0 3 >= 0; 1 1 >= -7"));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == *b);
  auto line1 = canonical(poly("1 -1 >= 0; -1 1 >= 0"));
  auto line2 = canonical(poly("2 -2 >= 0; -3 3 >= 0; 1 0 >= -100; 1 0 >= -100"));
  REQUIRE(line2);
  CHECK(*line1 != *line2);
  CHECK_FALSE(canonical(poly("1 >= 1\n-1 >= 0")));
}

TEST_CASE("faces") {
  auto interval = faces(poly("1 >= 0\n-1 >= -1"));
  CHECK(interval.size() == 3);
  CHECK(interval[0].dim == 0);
  CHECK(interval[1].dim == 0);
  CHECK(interval[2].dim == 1);

  auto square = faces(poly(kSquare));
  CHECK(square.size() == 9);
  int counts[3] = {0, 0, 0};
  for (const auto& f : square) ++counts[f.dim];
  CHECK(counts[0] == 4);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 1);
  for (const auto& f : square) {
    for (std::size_t i = 0; i < f.parent.rows().size(); ++i) {
      const bool tight = std::find(f.tight.begin(), f.tight.end(), i) != f.tight.end();
      CHECK(f.parent.rows()[i].tight_at(f.witness) == tight);
    }
  }

  CHECK(faces(poly("dim 3; true")).size() == 1);
  CHECK_THROWS_AS(faces(poly("1 >= 1\n-1 >= 0")), DomainError);
  CHECK_THROWS_AS(faces(poly("dim 7; true")), ResourceError);
}

TEST_CASE("Euler relation on bounded polytopes") {
  for (const char* text : {kSquare, "1 0 0 >= 0; 0 1 0 >= 0; 0 0 1 >= 0; -1 -1 -1 >= -1",
                           "1 1 >= 0; 1 -1 >= 0; -1 1 >= 0; -1 -1 >= -2"}) {
    int s = 0;
    for (const auto& f : faces(poly(text))) s += f.dim % 2 == 0 ? 1 : -1;
    CHECK(s == 1);
  }
}

TEST_CASE("recession") {
  auto bounded = recession(poly(kSquare));
  CHECK(bounded.ell == 0);
  CHECK(is_bounded(poly(kSquare)));
  auto cone = poly("-1 1 >= 0; 1 1 >= 0");
  auto rc = recession(cone);
  CHECK(rc.ell == 0);
  CHECK(*canonical(rc.rec) == *canonical(cone));
  auto strip = recession(poly("0 1 >= 0; 0 -1 >= -1"));
  REQUIRE(strip.ell == 1);
  CHECK(strip.lin_basis[0][1] == 0);
  CHECK(strip.lin_basis[0][0] != 0);
  CHECK_THROWS_AS(recession(poly("1 >= 1\n-1 >= 0")), DomainError);
}

TEST_CASE("relatively bounded faces") {
  auto quadrant = faces(poly("1 0 >= 0; 0 1 >= 0"));
  REQUIRE(quadrant.size() == 4);
  CHECK(is_relatively_bounded(quadrant[0]));  // the vertex
  CHECK_FALSE(is_relatively_bounded(quadrant[1]));
  CHECK_FALSE(is_relatively_bounded(quadrant[2]));
  CHECK_FALSE(is_relatively_bounded(quadrant[3]));

  auto strip = faces(poly("0 1 >= 0; 0 -1 >= -1"));
  REQUIRE(strip.size() == 3);
  CHECK(is_relatively_bounded(strip[0]));
  CHECK(is_relatively_bounded(strip[1]));
  CHECK(is_relatively_bounded(strip[2]));

  for (const auto& f : faces(poly(kSquare))) CHECK(is_relatively_bounded(f));
}

TEST_CASE("tangent cones") {
  auto interval = faces(poly("1 >= 0\n-1 >= -1"));
  auto f0 = face_with_witness(interval, pt({"0"}));
  CHECK(*canonical(tangent_cone(f0)) == *canonical(poly("1 >= 0")));
  CHECK(tangent_cone(interval[2]).rows().empty());

  auto square = faces(poly(kSquare));
  auto v00 = face_with_witness(square, pt({"0", "0"}));
  CHECK(*canonical(tangent_cone(v00)) == *canonical(poly("1 0 >= 0; 0 1 >= 0")));
}

TEST_CASE("visibility") {
  auto interval = faces(poly("1 >= 0\n-1 >= -1"));
  CHECK(is_visible(face_with_witness(interval, pt({"0"})), pt({"-1"})));
  CHECK_FALSE(is_visible(face_with_witness(interval, pt({"1"})), pt({"-1"})));
  CHECK_THROWS_AS(is_visible(interval[0], pt({"1/2"})), DomainError);

  auto square = faces(poly(kSquare));
  CHECK(is_visible(face_with_witness(square, pt({"0", "0"})), pt({"-1", "-1"})));
  CHECK_FALSE(is_visible(face_with_witness(square, pt({"1", "1"})), pt({"-1", "-1"})));
}

TEST_CASE("minimal_face_point") {
  CHECK(minimal_face_point(poly("1 >= 2")) == pt({"2"}));
  CHECK(minimal_face_point(poly("dim 3; true")) == pt({"0", "0", "0"}));
  auto x = minimal_face_point(poly("0 1 >= 1"));
  CHECK(x[1] == 1);
  CHECK_THROWS_AS(minimal_face_point(poly("1 >= 1\n-1 >= 0")), DomainError);
}

TEST_CASE("tangent cones contain the polyhedron") {
  auto P = poly("1 0 0 >= 0; 0 1 0 >= 0; 0 0 1 >= 0; -1 -1 -1 >= -1");
  for (const auto& f : faces(P)) {
    const auto T = tangent_cone(f);
    for (const auto& g : faces(P)) CHECK(T.contains(g.witness));
    CHECK(T.rows().empty() == (f.dim == 3));
  }
}
