#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/grothendieck.hpp"

using namespace polygroth;
using test::poly;
using test::set;

TEST_CASE("class_of generators") {
  CHECK(class_of(set("dim 1; x1 >= 0")) == GradedClass::v());
  CHECK(class_of(set("dim 1; x1 > 0")) == -GradedClass::u());
  CHECK(class_of(set("dim 1; x1 = 0")) == GradedClass::sigma());
  CHECK(class_of(set("dim 0; true")) == GradedClass(1));
  CHECK(class_of(set("dim 0; false")) == GradedClass(0));
}

TEST_CASE("ring laws") {
  const auto half = class_of(set("dim 1; x1 >= 0"));
  const auto open = class_of(set("dim 1; x1 > 0"));
  CHECK((half * open).is_zero());
  CHECK((GradedClass::u() * GradedClass::v()).is_zero());
  const GradedClass x = GradedClass(3) + 2 * GradedClass::u(2) - GradedClass::v(1);
  CHECK(GradedClass(1) * x == x);
  CHECK(x * GradedClass::sigma() == GradedClass::sigma() * x);
  CHECK((x - x).is_zero());
  CHECK(GradedClass::sigma() * GradedClass::sigma() == GradedClass::u(2) + GradedClass::v(2));
}

TEST_CASE("rendering") {
  CHECK((GradedClass::u(2) + GradedClass::v(2)).render() == "u^2 + v^2");
  CHECK((-GradedClass::u()).render() == "-u");
  CHECK(GradedClass().render() == "0");
  CHECK((GradedClass(1) - GradedClass::u()).render() == "1 - u");
  CHECK((GradedClass::v(2) - GradedClass::u(2)).render() == "-u^2 + v^2");
  CHECK((3 * GradedClass::v(3)).render() == "3v^3");
}

TEST_CASE("class_of_cone") {
  CHECK(class_of_cone(poly("dim 2; true")) == GradedClass::v(2) + GradedClass::u(2));
  CHECK(class_of_cone(poly("0 1 >= 0; 0 -1 >= 0")) == GradedClass::v(2) - GradedClass::u(2));
  CHECK(class_of_cone(poly("1 0 >= 0; 0 1 >= 0")) == GradedClass::v(2));
  CHECK(class_of_cone(poly("dim 0; true")) == GradedClass(1));
  CHECK_THROWS_AS(class_of_cone(poly("1 0 >= 1")), DomainError);
}

TEST_CASE("closed-form polyhedron classes") {
  CHECK(class_of_polyhedron_closed_form(poly("1 0 >= 0; -1 0 >= -1; 0 1 >= 0; 0 -1 >= -1")) ==
        GradedClass::u(2) + GradedClass::v(2));
  CHECK(class_of_polyhedron_closed_form(poly("dim 3; true")) == GradedClass::v(3) - GradedClass::u(3));
  CHECK(class_of_polyhedron_closed_form(poly("1 >= 0")) == GradedClass::v());
  CHECK(class_of_polyhedron_closed_form(poly("1 >= 1; -1 >= 0")).is_zero());
}

TEST_CASE("ungraded") {
  CHECK(ungraded(GradedClass::u(2) + GradedClass::v(2)) == UngradedClass{1, 1});
  CHECK(ungraded(GradedClass::sigma()) == UngradedClass{1, 1});
  CHECK(ungraded(GradedClass::v()) == UngradedClass{0, 1});
  CHECK(ungraded(GradedClass(4)) == UngradedClass{4, 4});
}

TEST_CASE("rational isomorphism collapse") {
  CHECK(class_of(set("dim 1; x1 >= 0 & x1 <= 1")) == class_of(set("dim 1; x1 >= 0 & x1 <= 2")));
}
