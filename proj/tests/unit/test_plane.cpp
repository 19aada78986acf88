#include <doctest.h>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"
#include "semireg/io/parse.hpp"
#include "semireg/plane/plane_cones.hpp"

using namespace semireg;

namespace {

QuasiRationalCone cone(const std::string& text) { return parse_cone(text); }

template <class F>
ErrorKind kind_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Overflow;
}

}  // namespace

TEST_CASE("half planes canonicalize") {
  HalfPlane h = HalfPlane::make(2, -4, true);
  CHECK(h.a == 1);
  CHECK(h.b == -2);
  CHECK(h.strict);
  CHECK(kind_of([] { HalfPlane::make(0, 0, false); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("cone lattice membership") {
  auto c = cone("y >= 0 & x > 0");
  CHECK(cone_lattice_membership(c, {5, 0}));
  CHECK_FALSE(cone_lattice_membership(c, {0, 5}));
  CHECK(cone_lattice_membership(c, {0, 0}));
  CHECK(cone_lattice_membership(cone("x > 0 & y > 0"), {0, 0}));
}

TEST_CASE("model membership") {
  CHECK(model_membership(ModelTag::H1, {-3, 2}));
  CHECK_FALSE(model_membership(ModelTag::H1, {-3, 0}));
  CHECK(model_membership(ModelTag::H1, {3, 0}));
  CHECK(model_membership(ModelTag::H2, {-5, 1}));
  CHECK_FALSE(model_membership(ModelTag::H2, {5, 0}));
  CHECK(model_membership(ModelTag::H, {1, 0}));
  CHECK_FALSE(model_membership(ModelTag::H, {0, 1}));
  CHECK_FALSE(model_membership(ModelTag::HPrime, {1, 0}));
  CHECK(model_membership(ModelTag::HPrime, {0, 0}));
  CHECK(kind_of([] { model_membership(ModelTag::FinitelyGenerated, {1, 1}); }) == ErrorKind::UnsupportedTag);
}

TEST_CASE("classify canonical cones") {
  ModelType h = classify(cone("y >= 0 & x > 0"));
  CHECK(h.tag == ModelTag::H);
  CHECK(h.map == ZMatrix::identity(2));
  CHECK(h.scale == 1);
  CHECK(classify(cone("x > 0 & y > 0")).tag == ModelTag::HPrime);
  CHECK(classify(cone("y >= 0 & y > 0")).tag == ModelTag::H1);
  CHECK(classify(cone("y > 0 & y > 0")).tag == ModelTag::H2);
  CHECK(classify(cone("x >= 0 & y >= 0")).tag == ModelTag::FinitelyGenerated);
}

TEST_CASE("classification agrees with the cone on the box") {
  for (const char* c : {"y >= 0 & x > 0", "x > 0 & y > 0", "y >= 0 & y > 0", "y > 0 & y > 0", "x >= 0 & y >= 0",
                        "2*x-y >= 0 & x+3*y > 0", "x-2*y > 0 & 3*x+y > 0", "x+y >= 0 & x+y > 0", "3*x-2*y > 0 & 3*x-2*y > 0",
                        "-x+4*y >= 0 & 5*x-y > 0"}) {
    CAPTURE(c);
    auto q = cone(c);
    ModelType m = classify(q);
    CHECK(classification_agreement(q, m, 20).value);
  }
}

TEST_CASE("classify rejects lines and empty cones") {
  CHECK(kind_of([] { classify(cone("y >= 0 & -y >= 0")); }) == ErrorKind::NotPositive);
  CHECK(kind_of([] { classify(cone("y > 0 & -y > 0")); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("normalize map") {
  NormalizeResult n = normalize_map({{1, 0}, {0, 1}});
  CHECK(n.t == 1);
  CHECK(n.phi == ZMatrix::identity(2));
  CHECK(n.checks.value);

  n = normalize_map({{1, 0}, {1, 2}});
  CHECK(n.t == 2);
  ZMatrix listed(2, 2);
  listed(0, 0) = 2;
  listed(0, 1) = 0;
  listed(1, 0) = -1;
  listed(1, 1) = 1;
  CHECK(n.phi == listed.transpose());
  CHECK(n.checks.value);
  CHECK(kind_of([] { normalize_map({{1, 0}, {2, 0}}); }) == ErrorKind::DependentGenerators);
}

TEST_CASE("bounding half-lines") {
  HalflineReport r = bounding_halflines(cone("x > 0 & y > 0"));
  CHECK(r.boundary_count == 0);
  CHECK(r.containment.value);
  CHECK(r.multiples.value);
  CHECK(r.boundary.value);

  r = bounding_halflines(cone("y >= 0 & x > 0"));
  CHECK(r.boundary_count == 1);
  bool x_axis = (r.r1.closed && r.r1.direction == Point{1, 0}) || (r.r2.closed && r.r2.direction == Point{1, 0});
  CHECK(x_axis);

  CHECK(kind_of([] { bounding_halflines(cone("x >= 0 & y >= 0")); }) == ErrorKind::FinitelyGeneratedInput);
}

TEST_CASE("pair rejection certificates") {
  ModelSemigroup h{ModelTag::H, {}};
  RejectionCertificate c = param_pair_reject(h, {1, 1}, {2, 1});
  CHECK(verify_certificate(h, {1, 1}, {2, 1}, c));
  CHECK(c.h == Point{1, 1});
  CHECK(c.kind == RejectionCertificate::Kind::First);
  RejectionCertificate canonical{{1, 0}, RejectionCertificate::Kind::Canonical, 1, 1, 8};
  CHECK_FALSE(in_monomial_ideal(h, {8, 0}, {{1, 1}, {2, 1}}));
  CHECK_FALSE(verify_certificate(h, {1, 1}, {2, 1}, canonical));

  ModelSemigroup hp{ModelTag::HPrime, {}};
  for (Point f : {Point{1, 1}, Point{3, 1}, Point{1, 5}}) {
    RejectionCertificate d = param_pair_reject(hp, f, {2, 3});
    CHECK(d.h == Point{1, 1});
    CHECK(d.kind == RejectionCertificate::Kind::Canonical);
    CHECK(verify_certificate(hp, f, {2, 3}, d));
  }

  ModelSemigroup h2{ModelTag::H2, {}};
  RejectionCertificate e = param_pair_reject(h2, {-2, 1}, {0, 3});
  CHECK(e.h == Point{1, 1});
  CHECK(verify_certificate(h2, {-2, 1}, {0, 3}, e));

  CHECK(kind_of([&] { param_pair_reject(h, {0, 0}, {1, 0}); }) == ErrorKind::UnitInput);
  CHECK(kind_of([&] { param_pair_reject(h, {0, 1}, {1, 0}); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("model regular pairs") {
  ModelSemigroup h{ModelTag::H, {}};
  PairRegularity p = model_regular_pair(h, {1, 0}, {1, 2});
  CHECK_FALSE(p.regular);
  REQUIRE(p.witness);
  CHECK(*p.witness == Point{1, 1});
  CHECK(verify_pair_witness(h, {1, 0}, {1, 2}, {1, 1}));

  ModelSemigroup hp{ModelTag::HPrime, {}};
  p = model_regular_pair(hp, {1, 1}, {2, 1});
  CHECK_FALSE(p.regular);
  REQUIRE(p.witness);
  CHECK(verify_pair_witness(hp, {1, 1}, {2, 1}, *p.witness));

  CHECK(kind_of([&] { model_regular_pair(h, {1, 0}, {0, 0}); }) == ErrorKind::UnitInput);
}

TEST_CASE("cone grammar round trip") {
  for (const char* text : {"y >= 0 & x > 0", "2*x-y >= 0 & -x+3*y > 0"}) {
    auto c = cone(text);
    auto d = parse_cone(to_string(c));
    CHECK(c.l1 == d.l1);
    CHECK(c.l2 == d.l2);
  }
  CHECK_THROWS_AS(cone("x > 1 & y > 0"), semireg::ParseError);
  CHECK_THROWS_AS(cone("x > 0"), semireg::ParseError);
  CHECK_THROWS_AS(cone("x > 0 & z > 0"), semireg::ParseError);
}
