#include <doctest.h>

#include "semireg/error.hpp"
#include "semireg/semigroup/affine_semigroup.hpp"

using namespace semireg;

namespace {

AffineSemigroup sg(std::vector<Point> gens, std::size_t dim = 2) { return AffineSemigroup::make(dim, std::move(gens)); }

}  // namespace

TEST_CASE("membership") {
  auto s = sg({{1, 0}, {1, 1}});
  CHECK(membership(s, {2, 1}).value);
  CHECK_FALSE(membership(s, {0, 1}).value);
  CHECK(membership(s, {0, 0}).value);
  CHECK(membership(sg({{2, 0}, {3, 0}}), {0, 0}).value);
  CHECK(membership(sg({}), {0, 0}).value);
  CHECK_FALSE(membership(sg({{2, 0}, {3, 0}}), {1, 0}).value);
  CHECK(membership(sg({{2, 0}, {3, 0}}), {5, 0}).value);
}

TEST_CASE("membership with units") {
  auto s = sg({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(membership(s, {-7, 3}).value);
  CHECK_FALSE(membership(s, {4, -1}).value);
  auto lattice = sg({{2, 0}, {-2, 0}, {1, 1}});
  CHECK(membership(lattice, {-1, 1}).value);
  CHECK_FALSE(membership(lattice, {1, 0}).value);
}

TEST_CASE("is_positive") {
  CHECK(is_positive(sg({{1, 0}, {1, 1}})).value);
  Verdict v = is_positive(sg({{1, 0}, {-1, 0}}));
  CHECK_FALSE(v.value);
  REQUIRE(v.witness);
  CHECK(*v.witness == Point{1, 0});
  CHECK(is_positive(sg({})).value);
}

TEST_CASE("is_normal") {
  CHECK(is_normal(sg({{2, 0}, {0, 2}, {1, 1}})).value);
  Verdict v = is_normal(sg({{2, 0}, {3, 0}}));
  CHECK_FALSE(v.value);
  REQUIRE(v.witness);
  CHECK(*v.witness == Point{1, 0});
  CHECK(is_normal(sg({{1, 0}})).value);
  CHECK_FALSE(is_normal(sg({{1, 0}, {1, 1}, {1, 3}})).value);
  CHECK(is_normal(sg({{1, 0}, {1, 2}})).value);
}

TEST_CASE("is_full") {
  CHECK(is_full(sg({{1, 0}}), sg({{1, 0}, {0, 1}})).value);
  CHECK(is_full(sg({{2}}, 1), sg({{1}}, 1)).value);
  Verdict v = is_full(sg({{1, 1}, {1, 2}}), sg({{1, 0}, {0, 1}}));
  CHECK_FALSE(v.value);
  REQUIRE(v.witness);
  CHECK(*v.witness == Point{0, 1});
}

TEST_CASE("split_positive") {
  PositiveSplit a = split_positive(sg({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(a.k == 1);
  CHECK(a.positive_part.generators.size() == 1);
  CHECK(is_positive(a.positive_part).value);
  CHECK(a.contains({-3, 2}));
  CHECK_FALSE(a.contains({0, -1}));
  auto c = a.coordinates({-3, 2});
  REQUIRE(c);
  CHECK(*c == Point{-3, 2});

  PositiveSplit b = split_positive(sg({{1, 0}, {0, 1}}));
  CHECK(b.k == 0);
  CHECK(b.positive_part.generators.size() == 2);

  PositiveSplit z = split_positive(sg({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(z.k == 2);
  CHECK(z.positive_part.generators.empty());
}

TEST_CASE("filtration") {
  auto chain = filtration({{1, 0}, {1, 1}, {2, 1}}, 3);
  REQUIRE(chain.size() == 3);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(is_normal(chain[i]).value);
    if (i) {
      for (const auto& g : chain[i - 1].generators) CHECK(membership(chain[i], g).value);
    }
  }
  auto one = filtration({{1, 0}}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].generators == std::vector<Point>{{1, 0}});

  auto constant = filtration({{1, 2}, {1, 2}, {1, 2}}, 3);
  CHECK(constant[0].generators == constant[2].generators);

  auto saturated = filtration({{1, 0}, {1, 1}, {1, 3}}, 3);
  CHECK_FALSE(membership(saturated[1], {1, 2}).value);
  CHECK(membership(saturated[2], {1, 2}).value);
  CHECK_THROWS_AS(filtration({{1, 0}}, 2), Error);
}

TEST_CASE("group_rank") {
  CHECK(group_rank(sg({{1, 0}, {1, 1}})) == 2);
  CHECK(group_rank(sg({{2, 4}})) == 1);
  CHECK(group_rank(sg({})) == 0);
}

TEST_CASE("box points order") {
  auto box = box_points(2, 1);
  CHECK(box.size() == 9);
  CHECK(box.front() == Point{0, 0});
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(membership(sg({{1, 0}}), {1, 0, 0}), Error);
}
