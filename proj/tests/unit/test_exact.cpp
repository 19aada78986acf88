#include <doctest.h>

#include "semireg/error.hpp"
#include "semireg/exact/cone_dual.hpp"
#include "semireg/exact/linalg.hpp"
#include "semireg/exact/smith.hpp"

using namespace semireg;

namespace {

QMatrix qrows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

ZMatrix zrows(const std::vector<std::vector<long>>& rows) {
  ZMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(QMatrix::identity(2)) == 2);
  CHECK(rank(qrows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(qrows({{2, 2, 2, 2, 2}, {3, 1, 3, 1, 3}, {4, 2, 1, 1, 4}})) == 3);
  CHECK(rank_small({2, 2, 2, 2, 2, 3, 1, 3, 1, 3, 4, 2, 1, 1, 4}, 3, 5) == 3);
}

TEST_CASE("rank_small falls back on overflow") {
  const std::int64_t big = std::int64_t(1) << 62;
  CHECK(rank_small({big, big - 1, big - 1, big - 2}, 2, 2) == 2);
  CHECK(rank_small({big, big, big, big}, 2, 2) == 1);
}

TEST_CASE("cone_coordinates") {
  std::vector<RatVec> gamma{{1, 0}, {1, 1}};
  auto c = cone_coordinates(gamma, {3, 2});
  REQUIRE(c);
  CHECK(*c == RatVec{1, 2});
  c = cone_coordinates(gamma, {0, 0});
  REQUIRE(c);
  CHECK(*c == RatVec{0, 0});
  CHECK_FALSE(cone_coordinates(gamma, {0, 1}));
  auto s = span_coordinates(gamma, {0, 1});
  REQUIRE(s);
  CHECK(*s == RatVec{-1, 1});
}

TEST_CASE("solve, nullspace and inverse") {
  QMatrix a = qrows({{1, 2}, {3, 4}});
  auto x = solve(a, {5, 6});
  REQUIRE(x);
  CHECK(*x == RatVec{-4, Rational(9, 2)});
  CHECK(nullspace(a).empty());
  auto ns = nullspace(qrows({{1, 2, 3}}));
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  QMatrix inv = inverse(a);
  CHECK(inv(0, 0) == -2);
  CHECK(inv(1, 0) == Rational(3, 2));
  CHECK_THROWS_AS(inverse(qrows({{1, 2}, {2, 4}})), Error);
  CHECK_FALSE(solve(qrows({{1, 1}, {1, 1}}), {1, 2}));
}

TEST_CASE("smith normal form") {
  auto check = [](const ZMatrix& m, std::vector<long> diag) {
    SmithForm s = smith_normal_form(m);
    ZMatrix prod = s.U * m * s.V;
    CHECK(prod == s.D);
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(s.D(i, i) == diag[i]);
    CHECK(abs(determinant(to_rational(s.U))) == 1);
    CHECK(abs(determinant(to_rational(s.V))) == 1);
  };
  check(ZMatrix::identity(2), {1, 1});
  check(zrows({{2, 4}, {4, 2}}), {2, 6});
  check(zrows({{1, 0}, {0, 0}}), {1, 0});
  check(zrows({{6, 4, 2}, {3, 9, 12}}), {1, 6});
  SmithForm id = smith_normal_form(ZMatrix::identity(2));
  CHECK(id.U == ZMatrix::identity(2));
  CHECK(id.V == ZMatrix::identity(2));
}

TEST_CASE("unimodular inverse") {
  ZMatrix m = zrows({{2, 1}, {1, 1}});
  CHECK(m * unimodular_inverse(m) == ZMatrix::identity(2));
  CHECK_THROWS(unimodular_inverse(zrows({{2, 0}, {0, 1}})));
}

TEST_CASE("separating functional") {
  LinearFunctional l = separating_functional({{1, 0}, {1, 1}}, {0, 1}, false);
  CHECK(l.coefficients == RatVec{1, -1});
  CHECK(l(Point{1, 0}) == 1);
  CHECK(l(Point{1, 1}) == 0);
  CHECK(l(Point{0, 1}) == -1);

  l = separating_functional({{1, 0}, {3, 2}}, {2, 2}, false);
  CHECK(l.coefficients == RatVec{2, -3});
  CHECK(l(Point{1, 0}) == 2);
  CHECK(l(Point{3, 2}) == 0);
  CHECK(l(Point{2, 2}) == -2);

  try {
    separating_functional({{1, 0}, {1, 1}}, {2, 1}, false);
    FAIL("expected NoSeparator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSeparator);
  }
}

TEST_CASE("dual cone") {
  DualCone d = dual_cone({{1, 0}, {1, 1}}, 2);
  CHECK(d.rays.size() == 2);
  CHECK(d.lineality.empty());
  CHECK(d.contains_dual({3, 2}));
  CHECK_FALSE(d.contains_dual({0, 1}));
  auto g = positive_functional(d, {{1, 0}, {1, 1}});
  REQUIRE(g);
  CHECK(evaluate(*g, {1, 0}) > 0);
  CHECK(evaluate(*g, {1, 1}) > 0);

  DualCone line = dual_cone({{1, 0}, {-1, 0}}, 2);
  CHECK_FALSE(positive_functional(line, {{1, 0}, {-1, 0}}));
  CHECK_THROWS_AS(dual_cone({{1, 0, 0, 0, 0}}, 5), Error);
}
