#include "semireg/plane/plane_cones.hpp"

#include <numeric>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

namespace {

std::int64_t cross(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

bool is_origin(const Point& p) { return p[0] == 0 && p[1] == 0; }

bool same_direction(const HalfPlane& x, const HalfPlane& y) { return x.a == y.a && x.b == y.b; }

bool opposite_direction(const HalfPlane& x, const HalfPlane& y) { return x.a == -y.a && x.b == -y.b; }

bool satisfies(const HalfPlane& h, const Point& p) {
  std::int64_t v = h(p);
  return h.strict ? v > 0 : v >= 0;
}

Point map_point(const ZMatrix& m, const Point& p) {
  Point out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * static_cast<long>(p[j]);
    out[i] = to_int64(acc);
  }
  return out;
}

Point scaled(const Point& p, std::int64_t k) { return {p[0] * k, p[1] * k}; }

Point minus(const Point& p, const Point& q) { return {p[0] - q[0], p[1] - q[1]}; }

// Coefficients of p = q1 r1 + q2 r2 multiplied by cross(r1, r2).
std::pair<std::int64_t, std::int64_t> scaled_coefficients(const Point& r1, const Point& r2, const Point& p) {
  std::int64_t d = cross(r1, r2);
  std::int64_t q1 = cross(p, r2), q2 = cross(r1, p);
  if (d < 0) q1 = -q1, q2 = -q2;
  return {q1, q2};
}

bool half_plane_case(const QuasiRationalCone& c) { return same_direction(c.l1, c.l2); }

std::string render_pair(const Point& f, const Point& g) { return "[" + to_string(f) + "," + to_string(g) + "]"; }

}  // namespace

HalfPlane HalfPlane::make(std::int64_t a, std::int64_t b, bool strict) {
  if (a == 0 && b == 0) throw Error(ErrorKind::PreconditionFailed, "zero linear form");
  std::int64_t g = std::gcd(a, b);
  return HalfPlane{a / g, b / g, strict};
}

std::int64_t HalfPlane::operator()(const Point& p) const { return a * p[0] + b * p[1]; }

const char* tag_name(ModelTag t) {
  switch (t) {
    case ModelTag::H: return "H";
    case ModelTag::HPrime: return "H'";
    case ModelTag::H1: return "H1";
    case ModelTag::H2: return "H2";
    case ModelTag::FinitelyGenerated: return "FinitelyGenerated";
  }
  return "?";
}

ModelTag parse_tag(const std::string& name) {
  for (ModelTag t : {ModelTag::H, ModelTag::HPrime, ModelTag::H1, ModelTag::H2, ModelTag::FinitelyGenerated})
    if (name == tag_name(t)) return t;
  if (name == "Hprime") return ModelTag::HPrime;
  throw Error(ErrorKind::UnsupportedTag, "unknown model tag", name);
}

bool model_membership(ModelTag tag, const Point& p) {
  if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "model points are pairs", to_string(p));
  if (is_origin(p)) return true;
  const std::int64_t a = p[0], b = p[1];
  switch (tag) {
    case ModelTag::H: return a >= 1 && b >= 0;
    case ModelTag::HPrime: return a >= 1 && b >= 1;
    case ModelTag::H1: return b >= 1 || (b == 0 && a >= 0);
    case ModelTag::H2: return b >= 1;
    case ModelTag::FinitelyGenerated: break;
  }
  throw Error(ErrorKind::UnsupportedTag, "no closed form for finitely generated cones");
}

bool ModelSemigroup::contains(const Point& p) const {
  if (!model_membership(tag, p)) return false;
  return lattice.empty() || LatticeTest(lattice, 2).contains(p);
}

std::pair<Ray, Ray> cone_rays(const QuasiRationalCone& c) {
  const HalfPlane &l1 = c.l1, &l2 = c.l2;
  Ray r1, r2;
  r1.closed = !l1.strict;
  r2.closed = !l2.strict;
  if (opposite_direction(l1, l2)) {
    if (r1.closed && r2.closed) throw Error(ErrorKind::NotPositive, "cone is a line");
    throw Error(ErrorKind::PreconditionFailed, "cone has no point besides the origin");
  }
  if (same_direction(l1, l2)) {
    if (r1.closed && r2.closed) throw Error(ErrorKind::NotPositive, "cone is a closed half plane");
    r1.direction = {l1.b, -l1.a};
    r2.direction = {-l1.b, l1.a};
    return {r1, r2};
  }
  r1.direction = {-l1.b, l1.a};
  if (l2(r1.direction) < 0) r1.direction = {l1.b, -l1.a};
  r2.direction = {-l2.b, l2.a};
  if (l1(r2.direction) < 0) r2.direction = {l2.b, -l2.a};
  return {r1, r2};
}

bool cone_lattice_membership(const QuasiRationalCone& c, const Point& p) {
  if (is_origin(p)) return true;
  if (!half_plane_case(c)) return satisfies(c.l1, p) && satisfies(c.l2, p);
  std::int64_t v = c.l1(p);
  if (v != 0) return v > 0;
  Point r1{c.l1.b, -c.l1.a};
  bool on_r1 = r1[0] * p[0] + r1[1] * p[1] > 0;
  return on_r1 ? !c.l1.strict : !c.l2.strict;
}

ModelType classify(const QuasiRationalCone& c) {
  auto [r1, r2] = cone_rays(c);
  ModelType m;
  if (!r1.closed && r2.closed) std::swap(r1, r2);
  const Point& p1 = r1.direction;
  if (half_plane_case(c)) {
    // unimodular basis (p1, w) with l(w) = 1
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mpz_class(static_cast<long>(c.l1.a)).get_mpz_t(),
               mpz_class(static_cast<long>(c.l1.b)).get_mpz_t());
    Point w{to_int64(s), to_int64(t)};
    std::int64_t det = cross(p1, w);
    m.map = ZMatrix(2, 2);
    m.map(0, 0) = w[1] * det;
    m.map(0, 1) = -w[0] * det;
    m.map(1, 0) = -p1[1] * det;
    m.map(1, 1) = p1[0] * det;
    m.scale = 1;
    m.tag = r1.closed ? ModelTag::H1 : ModelTag::H2;
    return m;
  }
  const Point& p2 = r2.direction;
  std::int64_t det = cross(p1, p2);
  std::int64_t sign = det > 0 ? 1 : -1;
  m.map = ZMatrix(2, 2);
  m.map(0, 0) = sign * p2[1];
  m.map(0, 1) = -sign * p2[0];
  m.map(1, 0) = -sign * p1[1];
  m.map(1, 1) = sign * p1[0];
  m.scale = det * sign;
  if (r1.closed && r2.closed)
    m.tag = ModelTag::FinitelyGenerated;
  else if (r1.closed)
    m.tag = ModelTag::H;
  else
    m.tag = ModelTag::HPrime;
  return m;
}

Verdict classification_agreement(const QuasiRationalCone& c, const ModelType& m, std::int64_t radius) {
  Verdict v;
  v.bounded = true;
  auto in_model = [&](const Point& q) {
    if (m.tag == ModelTag::FinitelyGenerated) return q[0] >= 0 && q[1] >= 0;
    return model_membership(m.tag, q);
  };
  QMatrix inv = inverse(to_rational(m.map));
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y) {
      Point p{x, y};
      if (cone_lattice_membership(c, p) != in_model(map_point(m.map, p))) {
        v.value = false;
        v.witness = p;
        return v;
      }
      if (!in_model(p)) continue;
      // scale * p has a preimage among the cone's lattice points
      RatVec pre = inv.apply(to_rational(scaled(p, m.scale)));
      bool integral = pre[0].get_den() == 1 && pre[1].get_den() == 1;
      if (!integral || !cone_lattice_membership(c, {to_int64(pre[0].get_num()), to_int64(pre[1].get_num())})) {
        v.value = false;
        v.witness = p;
        return v;
      }
    }
  return v;
}

NormalizeResult normalize_map(const std::vector<Point>& generators, std::int64_t radius) {
  std::optional<std::pair<Point, Point>> pair;
  for (std::size_t i = 0; i < generators.size() && !pair; ++i)
    for (std::size_t j = i + 1; j < generators.size() && !pair; ++j)
      if (cross(generators[i], generators[j]) != 0) pair = {generators[i], generators[j]};
  if (!pair) throw Error(ErrorKind::DependentGenerators, "no two independent generators");
  const auto& [a, b] = *pair;
  ZMatrix basis(2, 2);
  basis(0, 0) = static_cast<long>(a[0]);
  basis(1, 0) = static_cast<long>(a[1]);
  basis(0, 1) = static_cast<long>(b[0]);
  basis(1, 1) = static_cast<long>(b[1]);
  SmithForm snf = smith_normal_form(basis);
  NormalizeResult out;
  out.t = to_int64(snf.invariants().back());
  QMatrix phi_q = inverse(to_rational(basis));
  out.phi = ZMatrix(2, 2);
  out.checks.bounded = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational e = phi_q(i, j) * out.t;
      if (e.get_den() != 1) throw std::logic_error("normalize_map: t does not clear the inverse");
      out.phi(i, j) = e.get_num();
    }

  AffineSemigroup s = AffineSemigroup::make(2, generators);
  MembershipOracle oracle(s);
  auto fail = [&](const Point& p) {
    out.checks.value = false;
    out.checks.witness = p;
    return out;
  };
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y) {
      Point p{x, y};
      if (!oracle.in_cone(p)) continue;
      RatVec img = phi_q.apply(to_rational(p));
      Rational i0 = img[0] * out.t, i1 = img[1] * out.t;
      if (i0.get_den() != 1 || i1.get_den() != 1) return fail(p);
      Point q = map_point(out.phi, p);
      if (q[0] < 0 && q[1] < 0) return fail(p);
    }
  for (std::int64_t x = 0; x <= radius; ++x)
    for (std::int64_t y = 0; y <= radius; ++y) {
      // t (x, y) = phi(x a + y b)
      Point p{x * a[0] + y * b[0], x * a[1] + y * b[1]};
      Point q = map_point(out.phi, p);
      if (!oracle.in_cone(p) || q != Point{out.t * x, out.t * y}) return fail({x, y});
    }
  return out;
}

HalflineReport bounding_halflines(const QuasiRationalCone& c, std::int64_t radius, std::int64_t max_multiple) {
  auto [r1, r2] = cone_rays(c);
  if (r1.closed && r2.closed)
    throw Error(ErrorKind::FinitelyGeneratedInput, "closed cones are finitely generated");
  HalflineReport rep{r1, r2, {}, {}, {}, 0};
  rep.containment.bounded = rep.multiples.bounded = true;
  const bool half = half_plane_case(c);
  auto coefficients = [&](const Point& p) -> std::pair<std::int64_t, std::int64_t> {
    if (half) {
      std::int64_t v = c.l1(p);
      return {v, v};
    }
    return scaled_coefficients(r1.direction, r2.direction, p);
  };
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y) {
      Point p{x, y};
      auto [q1, q2] = coefficients(p);
      if (cone_lattice_membership(c, p) && (q1 < 0 || q2 < 0) && rep.containment.value) {
        rep.containment.value = false;
        rep.containment.witness = p;
      }
      if (q1 > 0 && q2 > 0 && rep.multiples.value) {
        bool found = false;
        for (std::int64_t t = 1; t <= max_multiple && !found; ++t) found = cone_lattice_membership(c, scaled(p, t));
        if (!found) {
          rep.multiples.value = false;
          rep.multiples.witness = p;
        }
      }
    }
  std::size_t observed = 0;
  for (const Ray* r : {&r1, &r2}) {
    bool meets = false;
    for (std::int64_t t = 1; t * std::max(std::llabs(r->direction[0]), std::llabs(r->direction[1])) <= radius; ++t)
      meets = meets || cone_lattice_membership(c, scaled(r->direction, t));
    if (meets) ++observed;
  }
  rep.boundary_count = static_cast<std::size_t>(r1.closed) + static_cast<std::size_t>(r2.closed);
  rep.boundary.value = rep.boundary_count <= 1 && observed == rep.boundary_count;
  if (!rep.boundary.value) rep.boundary.witness = Point{static_cast<std::int64_t>(observed)};
  return rep;
}

bool in_monomial_ideal(const ModelSemigroup& s, const Point& m, const std::vector<Point>& gens) {
  for (const auto& g : gens)
    if (s.contains(minus(m, g))) return true;
  return false;
}

namespace {

unsigned least_power(const ModelSemigroup& s, const Point& m, const std::vector<Point>& gens, unsigned bound) {
  for (unsigned k = 1; k <= bound; ++k)
    if (in_monomial_ideal(s, scaled(m, k), gens)) return k;
  return 0;
}

void check_pair(const ModelSemigroup& s, const Point& f, const Point& g) {
  for (const Point* p : {&f, &g}) {
    if (p->size() != 2) throw Error(ErrorKind::DimensionMismatch, "model points are pairs", to_string(*p));
    if (is_origin(*p)) throw Error(ErrorKind::UnitInput, "unit monomial", to_string(*p));
    if (!s.contains(*p)) throw Error(ErrorKind::PreconditionFailed, "exponent outside the model", to_string(*p));
  }
}

}  // namespace

RejectionCertificate param_pair_reject(const ModelSemigroup& s, const Point& f, const Point& g, unsigned power_bound) {
  check_pair(s, f, g);
  Point e = s.tag == ModelTag::H || s.tag == ModelTag::H1 ? Point{1, 0} : Point{1, 1};
  Point canonical;
  for (std::int64_t k = 1; k <= 64 && canonical.empty(); ++k)
    if (s.contains(scaled(e, k))) canonical = scaled(e, k);

  using Kind = RejectionCertificate::Kind;
  std::vector<std::pair<Point, Kind>> candidates;
  if (!canonical.empty()) candidates.emplace_back(canonical, Kind::Canonical);
  candidates.emplace_back(f, Kind::First);
  candidates.emplace_back(g, Kind::Second);
  for (const auto& [h, kind] : candidates) {
    RejectionCertificate c{h, kind, least_power(s, f, {h}, power_bound), least_power(s, g, {h}, power_bound),
                           least_power(s, h, {f, g}, power_bound)};
    if (c.power_f && c.power_g && c.power_h) return c;
  }
  throw Error(ErrorKind::CertificateUnverified, "no collapse certificate within the power bound", render_pair(f, g));
}

bool verify_certificate(const ModelSemigroup& s, const Point& f, const Point& g, const RejectionCertificate& c) {
  if (!c.power_f || !c.power_g || !c.power_h) return false;
  return in_monomial_ideal(s, scaled(f, c.power_f), {c.h}) && in_monomial_ideal(s, scaled(g, c.power_g), {c.h}) &&
         in_monomial_ideal(s, scaled(c.h, c.power_h), {f, g});
}

bool verify_pair_witness(const ModelSemigroup& s, const Point& f, const Point& g, const Point& c) {
  Point shifted{c[0] + g[0] - f[0], c[1] + g[1] - f[1]};
  return s.contains(c) && s.contains(shifted) && !s.contains(minus(c, f));
}

PairRegularity model_regular_pair(const ModelSemigroup& s, const Point& f, const Point& g, std::int64_t radius) {
  check_pair(s, f, g);
  if (radius <= 0) {
    std::int64_t m = 0;
    for (const Point* p : {&f, &g}) m = std::max<std::int64_t>({m, std::llabs((*p)[0]), std::llabs((*p)[1])});
    radius = 2 * m + 4;
  }
  PairRegularity out;
  for (const auto& c : box_points(2, radius)) {
    if (verify_pair_witness(s, f, g, c)) {
      out.regular = false;
      out.witness = c;
      return out;
    }
  }
  return out;
}

}  // namespace semireg
