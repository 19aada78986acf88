#include <doctest.h>

#include <random>

#include "semireg/error.hpp"
#include "semireg/exact/cone_dual.hpp"
#include "semireg/exact/linalg.hpp"
#include "semireg/exact/smith.hpp"
#include "semireg/io/parse.hpp"
#include "semireg/lazard/lazard.hpp"
#include "semireg/monomial/complex.hpp"
#include "semireg/plane/plane_cones.hpp"
#include "semireg/semigroup/affine_semigroup.hpp"

using namespace semireg;

namespace {

std::mt19937& rng() {
  static std::mt19937 r(424242);
  return r;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

MonomialIdeal random_ideal(std::size_t nvars, int gens, unsigned max_exp) {
  std::vector<Monomial> raw;
  for (int g = 0; g < gens; ++g) {
    std::vector<unsigned> e(nvars);
    for (auto& x : e) x = static_cast<unsigned>(uniform(0, static_cast<int>(max_exp)));
    if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) e[0] = 1;
    raw.emplace_back(e);
  }
  return min_gens(nvars, raw);
}

}  // namespace

TEST_CASE("rank is invariant under row permutation and scaling") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(uniform(1, 4)), cols = static_cast<std::size_t>(uniform(1, 4));
    std::vector<RatVec> m(rows, RatVec(cols));
    for (auto& r : m)
      for (auto& x : r) x = Rational(uniform(-3, 3), uniform(1, 4)), x.canonicalize();
    if (trial % 4 == 0 && rows > 1) m[1] = m[0];
    std::size_t base = rank_of(m);
    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng());
    for (auto& r : shuffled) {
      Rational s(uniform(1, 5) * (uniform(0, 1) ? 1 : -1), uniform(1, 5));
      s.canonicalize();
      for (auto& x : r) x *= s;
    }
    CHECK(rank_of(shuffled) == base);
  }
}

TEST_CASE("cone coordinates reproduce the vector") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RatVec> gamma{{uniform(1, 5), uniform(0, 5), uniform(0, 3)}, {uniform(0, 5), uniform(1, 5), uniform(0, 3)}};
    RatVec v{uniform(0, 9), uniform(0, 9), uniform(0, 9)};
    if (rank_of(gamma) < 2) continue;
    auto c = cone_coordinates(gamma, v);
    if (!c) continue;
    for (std::size_t i = 0; i < v.size(); ++i) CHECK((*c)[0] * gamma[0][i] + (*c)[1] * gamma[1][i] == v[i]);
    for (const auto& x : *c) CHECK(x >= 0);
  }
}

TEST_CASE("smith form re-verifies on random matrices") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 4)), c = static_cast<std::size_t>(uniform(1, 4));
    ZMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-6, 6);
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(determinant(to_rational(s.U))) == 1);
    CHECK(abs(determinant(to_rational(s.V))) == 1);
    auto inv = s.invariants();
    for (std::size_t k = 1; k < inv.size(); ++k) CHECK(inv[k] % inv[k - 1] == 0);
  }
}

TEST_CASE("separating functionals satisfy their sign contract") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> gens{{uniform(0, 4), uniform(-4, 4)}, {uniform(0, 4), uniform(-4, 4)}};
    Point x{uniform(-5, 5), uniform(-5, 5)};
    const bool strict = trial % 2 == 0;
    try {
      LinearFunctional l = separating_functional(gens, x, strict);
      CHECK(l(x) < 0);
      for (const auto& g : gens) {
        CHECK(l(g) >= 0);
        if (strict && (g[0] || g[1])) CHECK(l(g) > 0);
      }
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::NoSeparator || e.kind() == ErrorKind::LineInCone));
    }
  }
}

TEST_CASE("semigroup invariants on random generators") {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> gens;
    const int n = uniform(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back({uniform(0, 3), uniform(-2, 3)});
    auto s = AffineSemigroup::make(2, gens);
    for (const auto& g : s.generators) CHECK(membership(s, g).value);
    CHECK(is_full(s, s).value);
    CHECK(group_rank(s) <= 2);
    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(group_rank(AffineSemigroup::make(2, reversed)) == group_rank(s));
  }
}

TEST_CASE("split_positive agrees with membership on the box") {
  for (auto gens : std::vector<std::vector<Point>>{{{1, 0}, {-1, 0}, {0, 1}},
                                                   {{1, 1}, {-1, -1}, {1, 0}},
                                                   {{2, 0}, {-2, 0}, {1, 1}},
                                                   {{1, 0}, {0, 1}}}) {
    auto s = AffineSemigroup::make(2, gens);
    PositiveSplit p = split_positive(s);
    for (const auto& x : box_points(2, 5)) CHECK(p.contains(x) == membership(s, x).value);
  }
}

TEST_CASE("monomial ideal laws on samples") {
  for (int trial = 0; trial < 150; ++trial) {
    auto i = random_ideal(4, uniform(1, 3), 2), j = random_ideal(4, uniform(1, 3), 2), k = random_ideal(4, uniform(1, 3), 2);
    CHECK(min_gens(4, i.gens) == i);
    CHECK(intersect(i, j) == intersect(j, i));
    CHECK(intersect(intersect(i, j), k) == intersect(i, intersect(j, k)));
    CHECK(radical(radical(i)) == radical(i));
    CHECK(radical(intersect(i, j)) == intersect(radical(i), radical(j)));
    CHECK(height(i) <= cd(i));
    CHECK(cd(i) <= betti_table(i).pd);
    CHECK(taylor_complex(i.gens).is_complex());
    auto shuffled = i.gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng());
    CHECK(betti_table(MonomialIdeal{4, shuffled}) == betti_table(i));
  }
}

TEST_CASE("classify_sequence is stable under canonicalization") {
  for (int trial = 0; trial < 100; ++trial) {
    RatVec p;
    const int w = uniform(0, 4);
    for (int i = 0; i < w; ++i) p.push_back(uniform(-2, 3));
    Rational tail = uniform(0, 3);
    FinSeq a(p, tail);
    p.push_back(tail);
    p.push_back(tail);
    FinSeq b(p, tail);
    SupportPattern I{static_cast<std::size_t>(uniform(0, 3)), {}};
    CHECK(a == b);
    CHECK(classify_sequence(a, I).supported == classify_sequence(b, I).supported);
    CHECK(classify_sequence(a, I).almost_nonneg == classify_sequence(b, I).almost_nonneg);
  }
}

TEST_CASE("split_off grows the family by one") {
  int ran = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FinSeq> betas;
    for (int k = 0; k < 2; ++k) {
      RatVec p;
      for (int i = 0; i < 4; ++i) p.push_back(uniform(3, 9));
      betas.push_back(FinSeq(p, uniform(3, 9)));
    }
    RatVec q;
    for (int i = 0; i < 4; ++i) q.push_back(uniform(1, 5));
    betas.push_back(FinSeq(q, uniform(1, 5)));
    FinSeq alpha = betas[0] + betas[1] - betas[2];
    if (!alpha.nonnegative() || !is_supported(alpha, SupportPattern::all()) || rank_of(betas) != 3) continue;
    ++ran;
    SplitResult r = split_off(betas, SupportPattern::all());
    CHECK(r.gamma.members.size() == betas.size() + 1);
    CHECK(check_family(r.gamma, betas).ok(true));
  }
  CHECK(ran > 5);
}

TEST_CASE("normalize_map checks pass on positive pairs") {
  int ran = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Point a{uniform(0, 4), uniform(0, 4)}, b{uniform(0, 4), uniform(0, 4)};
    if (a[0] * b[1] - a[1] * b[0] == 0) continue;
    ++ran;
    NormalizeResult n = normalize_map({a, b});
    CHECK(n.checks.value);
  }
  CHECK(ran > 20);
}

TEST_CASE("random plane cones") {
  int classified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    HalfPlane l1, l2;
    try {
      l1 = HalfPlane::make(uniform(-3, 3), uniform(-3, 3), uniform(0, 1));
      l2 = trial % 5 == 0 ? HalfPlane::make(l1.a, l1.b, uniform(0, 1))
                          : HalfPlane::make(uniform(-3, 3), uniform(-3, 3), uniform(0, 1));
    } catch (const Error&) {
      continue;
    }
    QuasiRationalCone c{l1, l2};
    ModelType m;
    try {
      m = classify(c);
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::NotPositive || e.kind() == ErrorKind::PreconditionFailed));
      continue;
    }
    ++classified;
    CAPTURE(to_string(c));
    CHECK(classification_agreement(c, m, 12).value);
    if (m.tag == ModelTag::FinitelyGenerated) continue;
    HalflineReport r = bounding_halflines(c, 12);
    CHECK(r.boundary.value);
    CHECK(r.boundary_count <= 1);
    CHECK(r.containment.value);
    CHECK(r.multiples.value);
  }
  CHECK(classified > 50);
}

TEST_CASE("certificates in full subsemigroups of the models") {
  ModelSemigroup m{ModelTag::H, {{2, 0}, {0, 1}}};
  CHECK(m.contains({2, 1}));
  CHECK_FALSE(m.contains({1, 1}));
  RejectionCertificate c = param_pair_reject(m, {2, 1}, {4, 3});
  CHECK(verify_certificate(m, {2, 1}, {4, 3}, c));
  CHECK(m.contains(c.h));

  ModelSemigroup h2{ModelTag::H2, {{1, 0}, {0, 2}}};
  RejectionCertificate d = param_pair_reject(h2, {-3, 2}, {1, 4});
  CHECK(verify_certificate(h2, {-3, 2}, {1, 4}, d));
  PairRegularity p = model_regular_pair(h2, {-3, 2}, {1, 4});
  CHECK_FALSE(p.regular);
  REQUIRE(p.witness);
  CHECK(verify_pair_witness(h2, {-3, 2}, {1, 4}, *p.witness));
}
