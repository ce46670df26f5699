#include "doctest.h"
#include "helpers.hpp"

using namespace polygroth;
using test::poly;
using test::set;

TEST_CASE("generator values") {
  CHECK(chi(set("dim 1; x1 >= 0")) == 0);
  CHECK(chi_b(set("dim 1; x1 >= 0")) == 1);
  CHECK(chi(set("dim 1; x1 > 0")) == -1);
  CHECK(chi_b(set("dim 1; x1 > 0")) == 0);
}

TEST_CASE("chi of model sets") {
  CHECK(chi(set("dim 0; true")) == 1);
  CHECK(chi(set("dim 1; true")) == -1);
  CHECK(chi(set("dim 2; true")) == 1);
  CHECK(chi(set("dim 3; true")) == -1);
  CHECK(chi(set("dim 1; x1 >= 0 & x1 < 1")) == 0);
  CHECK(chi(set("dim 2; false")) == 0);
  CHECK(chi_b(set("dim 2; false")) == 0);
}

TEST_CASE("chi_b") {
  CHECK(chi_b(set("dim 1; !(x1 = 0)")) == 0);
  CHECK(chi_b(set("dim 2; x1 >= 0 & x2 >= 0 & x1 + x2 >= 1")) == 1);
  CHECK(chi_b(set("dim 2; x1 = 5")) == 1);
  CHECK(chi_b(set("dim 3; x1 + x2 + x3 = 1")) == 1);
  CHECK(chi_b(set("dim 1; x1 > 0 & x1 < 1")) == -1);
}

TEST_CASE("gamma_star sees coordinate hyperplanes") {
  CHECK(gamma_star(set("dim 2; x1 = 5")) == 6);
  CHECK(gamma_star(set("dim 1; x1 >= -7/2")) == test::q("9/2"));
  CHECK(gamma_star(set("dim 0; true")) == 1);
}

TEST_CASE("closed form trichotomy") {
  CHECK(chi_polyhedron_closed_form(poly("1 >= 1; -1 >= 0")) == EulerPair{0, 0});
  CHECK(chi_polyhedron_closed_form(poly("1 0 >= 0; -1 0 >= -1; 0 1 >= 0; 0 -1 >= -1")) == EulerPair{1, 1});
  CHECK(chi_polyhedron_closed_form(poly("dim 3; true")) == EulerPair{-1, 1});
  CHECK(chi_polyhedron_closed_form(poly("dim 2; true")) == EulerPair{1, 1});
  CHECK(chi_polyhedron_closed_form(poly("1 0 >= 0")) == EulerPair{0, 1});
  CHECK(chi_polyhedron_closed_form(poly("0 1 >= 0; 0 -1 >= 0")) == EulerPair{-1, 1});
  CHECK(euler_pair(set("dim 2; x2 = 0")) == EulerPair{-1, 1});
  CHECK(euler_pair(set("dim 2; x1 >= 0")) == EulerPair{0, 1});
}
