#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semireg/exact/matrix.hpp"
#include "semireg/semigroup/affine_semigroup.hpp"

namespace semireg {

// a x + b y >= 0, or > 0 when strict. Canonical: gcd(a, b) = 1.
struct HalfPlane {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool strict = false;

  static HalfPlane make(std::int64_t a, std::int64_t b, bool strict);
  std::int64_t operator()(const Point& p) const;
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// When both forms are positive multiples of each other the cone is a half
// plane; then the ray of l1 is the direction (b, -a) and the ray of l2 is
// its opposite, and each strict flag opens its own ray.
struct QuasiRationalCone {
  HalfPlane l1;
  HalfPlane l2;
};

enum class ModelTag { H, HPrime, H1, H2, FinitelyGenerated };

const char* tag_name(ModelTag t);
ModelTag parse_tag(const std::string& name);

// map (acting on column vectors) sends cone points into the model; every
// model point m has scale * m in the image of the cone's lattice points.
struct ModelType {
  ModelTag tag = ModelTag::FinitelyGenerated;
  ZMatrix map;
  std::int64_t scale = 1;
};

// A model semigroup intersected with a finite-index sublattice (the full
// subsemigroups); an empty lattice list means the whole model.
struct ModelSemigroup {
  ModelTag tag = ModelTag::H;
  std::vector<Point> lattice;

  bool contains(const Point& p) const;
};

bool cone_lattice_membership(const QuasiRationalCone& c, const Point& p);

// Throws UnsupportedTag for FinitelyGenerated.
bool model_membership(ModelTag tag, const Point& p);

struct Ray {
  Point direction;  // primitive
  bool closed = false;
};

// Bounding rays (r1 on l1 = 0, r2 on l2 = 0). Throws NotPositive when the cone
// contains a line and PreconditionFailed when it is only the origin.
std::pair<Ray, Ray> cone_rays(const QuasiRationalCone& c);

// Throws NotPositive.
ModelType classify(const QuasiRationalCone& c);

// Membership agreement on [-radius, radius]^2; the witness is the first
// disagreeing point.
Verdict classification_agreement(const QuasiRationalCone& c, const ModelType& m, std::int64_t radius = 20);

struct NormalizeResult {
  std::int64_t t = 1;
  ZMatrix phi;  // acting on column vectors: a -> t e1, b -> t e2
  Verdict checks;
};

// Throws DependentGenerators.
NormalizeResult normalize_map(const std::vector<Point>& generators, std::int64_t radius = 10);

struct HalflineReport {
  Ray r1;
  Ray r2;
  Verdict containment;   // cone points lie in conv(r1, r2)
  Verdict multiples;     // interior points of conv(r1, r2) have a multiple in the cone
  Verdict boundary;      // the cone meets at most one ray
  std::size_t boundary_count = 0;
};

// Throws NotPositive or FinitelyGeneratedInput.
HalflineReport bounding_halflines(const QuasiRationalCone& c, std::int64_t radius = 20, std::int64_t max_multiple = 20);

inline constexpr unsigned kDefaultPowerBound = 8;

struct RejectionCertificate {
  Point h;
  enum class Kind { Canonical, First, Second } kind = Kind::Canonical;
  unsigned power_f = 0;  // f^power_f in (h)
  unsigned power_g = 0;
  unsigned power_h = 0;  // h^power_h in (f, g)
};

// Exponent m lies in the monomial ideal generated by the listed exponents.
bool in_monomial_ideal(const ModelSemigroup& s, const Point& m, const std::vector<Point>& gens);

// rad(f, g) = rad(h) with every power bounded by power_bound. Throws UnitInput,
// PreconditionFailed for points outside the model, CertificateUnverified.
RejectionCertificate param_pair_reject(const ModelSemigroup& s, const Point& f, const Point& g,
                                       unsigned power_bound = kDefaultPowerBound);

bool verify_certificate(const ModelSemigroup& s, const Point& f, const Point& g, const RejectionCertificate& c);

struct PairRegularity {
  bool regular = true;
  std::optional<Point> witness;  // c in S, c + g in f + S, c not in f + S
};

// Throws UnitInput.
PairRegularity model_regular_pair(const ModelSemigroup& s, const Point& f, const Point& g, std::int64_t radius = 0);

bool verify_pair_witness(const ModelSemigroup& s, const Point& f, const Point& g, const Point& c);

}  // namespace semireg
