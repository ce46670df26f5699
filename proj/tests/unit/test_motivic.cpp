#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/motivic.hpp"

using namespace polygroth;
using test::set;

namespace {

const VFClass one = VFClass::integer(1);

}  // namespace

TEST_CASE("pair ring") {
  const VFClass L = VFClass::L();
  const VFClass t = VFClass::tau();
  CHECK(L * t == VFClass(IntPoly({0, 1}), IntPoly({0, 1})));
  CHECK(L * t == L + t - one);
  CHECK(((L - one) * (t - one)).is_zero());
  CHECK(one * L == L);
  CHECK_THROWS_AS(VFClass(IntPoly({2}), IntPoly({1})), InvariantError);
}

TEST_CASE("theta_trop on generators") {
  CHECK(theta_trop_class(set("dim 1; x1 = 0")) == VFClass(IntPoly({-1, 1}), IntPoly({1, -1})));
  CHECK(theta_trop_class(set("dim 1; x1 >= 0")) == VFClass(IntPoly({-1, 1}), IntPoly()));
  CHECK(theta_trop_class(set("dim 1; x1 > 0")) == VFClass(IntPoly(), IntPoly({-1, 1})));
}

TEST_CASE("semialg_class") {
  SemialgDesc ball{1, set("dim 1; x1 >= 0"), 1};
  CHECK(semialg_class(ball) == VFClass::L());
  SemialgDesc sphere{2, set("dim 2; x1 = 0 & x2 = 0"), 0};
  CHECK(semialg_class(sphere) == VFClass(IntPoly({1, -2, 1}), IntPoly({1, -2, 1})));
  SemialgDesc nothing{1, set("dim 1; false"), 0};
  CHECK(semialg_class(nothing).is_zero());
}

TEST_CASE("psi and its kernel") {
  SemialgDesc open_ball{1, set("dim 1; x1 > 0"), 1};
  SemialgDesc closed_ball{1, set("dim 1; x1 >= 0"), 1};
  CHECK(psi(semialg_class(open_ball)) == IntPoly({1}));
  CHECK(in_kernel_psi(semialg_class(open_ball) - one));
  CHECK_FALSE(in_kernel_psi(semialg_class(closed_ball) - one));
  CHECK(psi(semialg_class(closed_ball) - one) == IntPoly({-1, 1}));
  CHECK(psi(one) == IntPoly({1}));

  const VFClass x = semialg_class(open_ball) - one;
  auto y = kernel_factor(x);
  REQUIRE(y);
  CHECK((VFClass::tau() - one) * *y == x);
  CHECK_FALSE(kernel_factor(VFClass::L()));
}

TEST_CASE("polynomial rendering") {
  CHECK(IntPoly({1, -2, 1}).render("L") == "L^2 - 2L + 1");
  CHECK(IntPoly({-1, 1}).render("tau") == "tau - 1");
  CHECK(IntPoly().render("L") == "0");
  CHECK(IntPoly({0, -1}).render("L") == "-L");
  CHECK(VFClass::L().render() == "f=L g=1");
}
