#include <doctest.h>

#include "semireg/error.hpp"
#include "semireg/regularity/regularity.hpp"
#include "support.hpp"

using namespace semireg;
using namespace testing;

namespace {

MonomialSequence seq(const std::string& text) { return MonomialSequence{4, monos(text)}; }

}  // namespace

TEST_CASE("oracle_regular") {
  CHECK(oracle_regular(seq("x,y,z")).regular);
  OracleVerdict v = oracle_regular(seq("x*y,y*z"));
  CHECK_FALSE(v.regular);
  REQUIRE(v.witness);
  CHECK(v.witness->index == 2);
  CHECK(v.witness->monomial == mono("x"));
  CHECK(verify_witness(seq("x*y,y*z"), *v.witness));
  CHECK(oracle_regular(seq("x*y,z*w")).regular);
  CHECK_FALSE(oracle_regular(seq("x,x")).regular);
  try {
    oracle_regular(seq("x,1"));
    FAIL("expected UnitEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnitEntry);
  }
}

TEST_CASE("oracle is order invariant on samples") {
  for (const char* a : {"x*y,z*w", "x^2,y*z", "x*y,y*z", "x,x*y", "x^2*y,z"}) {
    auto s = seq(a);
    MonomialSequence r{4, {s.items[1], s.items[0]}};
    CHECK(oracle_regular(s).regular == oracle_regular(r).regular);
  }
}

TEST_CASE("star condition") {
  CHECK(star_condition(seq("x*y,z*w")));
  CHECK_FALSE(star_condition(seq("x*y,y*z")));
  CHECK(star_condition(seq("x^2,y,z*w")));
}

TEST_CASE("pd criterion report") {
  RegularityReport r = pd_criterion(seq("x*y,z*w"));
  CHECK(r.pd_criterion);
  CHECK(r.star_condition);
  CHECK(r.oracle_regular);
  CHECK_FALSE(r.discrepancy);
  CHECK(r.subset_pds.size() == 3);

  r = pd_criterion(seq("x*y,y*z"));
  CHECK(r.pd_criterion);
  CHECK_FALSE(r.star_condition);
  CHECK_FALSE(r.oracle_regular);
  CHECK(r.discrepancy);
  REQUIRE(r.witness);
  CHECK(r.witness->monomial == mono("x"));
  CHECK(r.weak_proregularity == "assumed (Noetherian)");

  r = pd_criterion(seq("x,x"));
  CHECK_FALSE(r.pd_criterion);
}

TEST_CASE("parameter sequences in polynomial rings") {
  CHECK(is_parameter_sequence_poly(seq("x,y")));
  CHECK_FALSE(is_parameter_sequence_poly(seq("x*y,y*z")));
  CHECK_FALSE(is_parameter_sequence_poly(seq("1")));
  CHECK(is_parameter_sequence_poly(seq("x^2*y,z")));
}

TEST_CASE("cd subset check") {
  Verdict v = cd_subset_check(seq("x,y,z"));
  CHECK(v.applicable);
  CHECK(v.value);
  v = cd_subset_check(seq("x*y,y*z"));
  CHECK(v.applicable);
  CHECK(v.value);
  v = cd_subset_check(seq("x,x*y"));
  CHECK_FALSE(v.applicable);
}

TEST_CASE("strip units") {
  auto zn = AffineSemigroup::make(2, {{1, 0}, {-1, 0}, {0, 1}});
  UnitStripping u = strip_units(zn, {{-3, 2}, {0, 2}, {-3, 0}});
  CHECK(u.units[0] == Point{-3, 0});
  CHECK(u.positive_parts[0] == Point{0, 2});
  CHECK_FALSE(u.pure_unit[0]);
  CHECK(u.units[1] == Point{0, 0});
  CHECK(u.positive_parts[1] == Point{0, 2});
  CHECK(u.pure_unit[2]);
  CHECK(u.positive_parts[2] == Point{0, 0});
  CHECK_THROWS_AS(strip_units(zn, {{0, -1}}), Error);
}

TEST_CASE("retraction") {
  auto n2 = AffineSemigroup::make(2, {{1, 0}, {0, 1}});
  auto diag = AffineSemigroup::make(2, {{1, 1}});
  FormalSum f{{{2, 1}, 1}, {{2, 2}, 1}};
  CHECK(retraction(diag, n2, f) == FormalSum{{{2, 2}, 1}});
  FormalSum inside{{{1, 1}, 3}, {{3, 3}, Rational(-1, 2)}};
  CHECK(retraction(diag, n2, inside) == inside);
  try {
    retraction(AffineSemigroup::make(2, {{1, 1}, {1, 2}}), n2, f);
    FAIL("expected NotFull");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFull);
  }
}

TEST_CASE("retraction fixes the image of the inclusion") {
  auto n2 = AffineSemigroup::make(2, {{1, 0}, {0, 1}});
  auto axis = AffineSemigroup::make(2, {{1, 0}});
  FormalSum f;
  for (std::int64_t a = 0; a <= 6; ++a) f[{a, 0}] = a + 1;
  CHECK(retraction(axis, n2, f) == f);
}

TEST_CASE("limit transfer") {
  TransferReport r = limit_transfer_check({{1}, {0, 1}, {0, 0, 1}}, 3);
  CHECK(r.verdict.value);
  CHECK(r.truncations == 3);
  CHECK(r.sequences_checked > 0);

  r = limit_transfer_check({{1, 0}, {1, 1}, {1, 1, 1}}, 3);
  CHECK(r.verdict.value);

  try {
    limit_transfer_check({{2}, {3}}, 1);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
}
