#include "semireg/exact/cone_dual.hpp"

#include <algorithm>
#include <set>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

Rational LinearFunctional::operator()(const RatVec& x) const { return dot(coefficients, x); }

Rational LinearFunctional::operator()(const Point& x) const { return dot(coefficients, to_rational(x)); }

std::int64_t evaluate(const Point& functional, const Point& x) {
  if (functional.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "functional and point differ in length");
  __int128 s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<__int128>(functional[i]) * x[i];
  if (s > INT64_MAX || s < INT64_MIN) throw Error(ErrorKind::Overflow, "functional value exceeds 64 bits");
  return static_cast<std::int64_t>(s);
}

bool DualCone::contains_dual(const Point& x) const {
  for (const auto& l : lineality)
    if (evaluate(l, x) != 0) return false;
  for (const auto& r : rays)
    if (evaluate(r, x) < 0) return false;
  return true;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DualCone dual_cone(const std::vector<Point>& gens_in, std::size_t dim) {
  if (dim > kMaxDualDimension)
    throw Error(ErrorKind::UnsupportedDimension, "dual cones are computed only up to dimension 4",
                std::to_string(dim));
  std::vector<Point> gens;
  for (const auto& g : gens_in) {
    if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    if (std::any_of(g.begin(), g.end(), [](auto v) { return v != 0; })) gens.push_back(g);
  }
  DualCone out;
  out.dim = dim;

  std::vector<RatVec> grows;
  for (const auto& g : gens) grows.push_back(to_rational(g));
  QMatrix G = grows.empty() ? QMatrix(0, dim) : matrix_from_rows(grows, dim);
  for (const auto& v : nullspace(G)) out.lineality.push_back(primitive(v));
  if (grows.empty()) return out;

  // basis of the row space, used to pick ray representatives orthogonal to the lineality
  std::vector<RatVec> basis;
  for (const auto& g : grows) {
    basis.push_back(g);
    if (rank_of(basis) < basis.size()) basis.pop_back();
  }
  const std::size_t r = basis.size();

  std::set<Point> seen;
  auto consider = [&](const RatVec& u) {
    bool nonneg = true, nonpos = true, nonzero = false;
    for (const auto& g : grows) {
      Rational v = dot(u, g);
      if (v < 0) nonneg = false;
      if (v > 0) nonpos = false;
      if (v != 0) nonzero = true;
    }
    if (!nonzero || (!nonneg && !nonpos)) return;
    RatVec dir = u;
    if (!nonneg)
      for (auto& x : dir) x = -x;
    Point p = primitive(dir);
    if (seen.insert(p).second) out.rays.push_back(p);
  };

  // each extreme ray modulo lineality is cut out by r-1 independent tight generators
  const std::size_t k = r - 1;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<RatVec> tight;
    for (auto i : idx) tight.push_back(grows[i]);
    if (!tight.empty() && rank_of(tight) != k) continue;
    // u = sum lambda_j basis_j with <tight_i, u> = 0
    QMatrix A(k, r);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < r; ++j) A(i, j) = dot(tight[i], basis[j]);
    auto ns = nullspace(A);
    if (ns.size() != 1) continue;
    RatVec u(dim, Rational(0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t c = 0; c < dim; ++c) u[c] += ns[0][j] * basis[j][c];
    consider(u);
  } while (k > 0 && next_combination(idx, grows.size()));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

std::optional<Point> positive_functional(const DualCone& dual, const std::vector<Point>& gens) {
  Point sum(dual.dim, 0);
  for (const auto& r : dual.rays)
    for (std::size_t i = 0; i < dual.dim; ++i) sum[i] += r[i];
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](auto v) { return v == 0; })) continue;
    if (evaluate(sum, g) <= 0) return std::nullopt;
  }
  return sum;
}

LinearFunctional separating_functional(const std::vector<Point>& gens, const Point& x, bool strict) {
  DualCone dual = dual_cone(gens, x.size());
  if (dual.contains_dual(x)) throw Error(ErrorKind::NoSeparator, "point lies in the cone", to_string(x));

  std::optional<Point> best;
  std::int64_t best_value = 0;
  auto offer = [&](const Point& c) {
    std::int64_t v = evaluate(c, x);
    if (v < 0 && (!best || v < best_value)) {
      best = c;
      best_value = v;
    }
  };
  for (const auto& r : dual.rays) offer(r);
  for (const auto& l : dual.lineality) {
    offer(l);
    Point neg = l;
    for (auto& v : neg) v = -v;
    offer(neg);
  }
  RatVec L = to_rational(*best);

  if (strict) {
    auto pos = positive_functional(dual, gens);
    if (!pos) throw Error(ErrorKind::LineInCone, "strict separation requested for a cone containing a line");
    RatVec P = to_rational(*pos);
    Rational px = dot(P, to_rational(x));
    Rational lx = dot(L, to_rational(x));
    Rational eps = px > 0 ? Rational(-lx / (2 * px)) : Rational(1);
    for (std::size_t i = 0; i < L.size(); ++i) L[i] += eps * P[i];
    L = to_rational(primitive(L));
  }

  LinearFunctional out{L};
  for (const auto& g : gens) {
    Rational v = out(g);
    bool zero = std::all_of(g.begin(), g.end(), [](auto c) { return c == 0; });
    if (v < 0 || (strict && !zero && v == 0)) throw std::logic_error("separating functional failed re-evaluation");
  }
  if (out(x) >= 0) throw std::logic_error("separating functional failed re-evaluation");
  return out;
}

}  // namespace semireg
