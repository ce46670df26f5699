#include "doctest.h"
#include "helpers.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/onedim.hpp"

using namespace polygroth;
using test::q;
using test::set;

TEST_CASE("canonicalize") {
  auto half_open = canonicalize(set("dim 1; x1 >= 0 & !(x1 >= 1)"));
  CHECK(half_open.points == std::vector<Rat>{0});
  REQUIRE(half_open.intervals.size() == 1);
  CHECK(half_open.intervals[0] == OpenInterval{Rat(0), Rat(1)});

  auto point = canonicalize(set("dim 1; x1 >= 0 & x1 <= 0"));
  CHECK(point.points == std::vector<Rat>{0});
  CHECK(point.intervals.empty());

  auto neg = canonicalize(set("dim 1; !(x1 >= 0)"));
  CHECK(neg.points.empty());
  REQUIRE(neg.intervals.size() == 1);
  CHECK_FALSE(neg.intervals[0].lo);
  CHECK(neg.intervals[0].hi == Rat(0));

  auto merged = canonicalize(set("dim 1; (x1 > 0 & x1 < 1) | x1 = 1 | (x1 > 1 & x1 <= 2)"));
  CHECK(merged.points == std::vector<Rat>{2});
  REQUIRE(merged.intervals.size() == 1);
  CHECK(merged.intervals[0] == OpenInterval{Rat(0), Rat(2)});
  CHECK(merged.render() == "(0, 2) u {2}");

  CHECK(canonicalize(set("dim 1; true")).render() == "(-inf, inf)");
  CHECK(canonicalize(set("dim 1; false")).render() == "{}");
  CHECK_THROWS_AS(canonicalize(set("dim 2; x1 >= 0")), UsageError);
}

TEST_CASE("weights") {
  CHECK(weight(canonicalize(set("dim 1; x1 = 0")), 0) == 2);
  CHECK(weight(canonicalize(set("dim 1; x1 >= 0")), 0) == 1);
  CHECK(weight(canonicalize(set("dim 1; !(x1 = 0)")), 0) == -2);
  CHECK(weight(canonicalize(set("dim 1; x1 > 0")), 0) == -1);
  CHECK(weight(canonicalize(set("dim 1; x1 > 0")), 5) == 0);
  CHECK(weight(canonicalize(set("dim 1; x1 < 0")), 5) == 0);
}

TEST_CASE("chi_gamma") {
  const auto Z = SubgroupQ::cyclic(1);
  CHECK(chi_gamma(set("dim 1; x1 = 1/2"), Z) == 0);
  CHECK(chi_gamma(set("dim 1; x1 = 0"), Z) == 2);
  CHECK(chi_gamma(set("dim 1; x1 > 0 & x1 < 1"), Z) == -2);
  CHECK(chi_gamma(set("dim 1; x1 >= 0"), SubgroupQ::divisible()) == 1);
  CHECK(chi_gamma(set("dim 1; x1 = 1/2"), SubgroupQ::cyclic(q("1/2"))) == 2);
  CHECK(chi_gamma(set("dim 1; true"), Z) == 0);
  CHECK_THROWS_AS(SubgroupQ::cyclic(0), UsageError);
  CHECK(SubgroupQ::cyclic(q("3/2")).render() == "3/2*Z");
  CHECK(SubgroupQ::cyclic(q("3/2")).contains(q("-9/2")));
  CHECK_FALSE(SubgroupQ::cyclic(q("3/2")).contains(1));
}
