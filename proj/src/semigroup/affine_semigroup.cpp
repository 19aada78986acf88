#include "semireg/semigroup/affine_semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

bool is_zero(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](auto v) { return v == 0; });
}

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point neg(const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

std::int64_t l1(const Point& p) {
  std::int64_t s = 0;
  for (auto v : p) s += std::llabs(v);
  return s;
}

bool norm_less(const Point& a, const Point& b) {
  auto na = l1(a), nb = l1(b);
  return na != nb ? na < nb : a < b;
}

ZMatrix columns(const std::vector<Point>& gens, std::size_t dim) {
  ZMatrix m(dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = static_cast<long>(gens[j][i]);
  return m;
}

void check_dim(const Point& v, std::size_t dim) {
  if (v.size() != dim)
    throw Error(ErrorKind::DimensionMismatch,
                "point has length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
}

// Column operations on the embedding: bring the unit columns to echelon form
// and reduce every complement column modulo them, so the positive part of a
// point is canonical.
void reduce_complement(ZMatrix& e, std::size_t k) {
  const std::size_t dim = e.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
  std::size_t next = 0;
  for (std::size_t i = 0; i < dim && next < k; ++i) {
    while (true) {
      std::size_t best = k;
      for (std::size_t j = next; j < k; ++j)
        if (e(i, j) != 0 && (best == k || abs(e(i, j)) < abs(e(i, best)))) best = j;
      if (best == k) break;
      e.swap_cols(next, best);
      bool done = true;
      for (std::size_t j = next + 1; j < k; ++j) {
        if (e(i, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), e(i, j).get_mpz_t(), e(i, next).get_mpz_t());
        for (std::size_t r = 0; r < dim; ++r) e(r, j) -= q * e(r, next);
        if (e(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (e(i, next) != 0) {
      if (e(i, next) < 0)
        for (std::size_t r = 0; r < dim; ++r) e(r, next) = -e(r, next);
      pivots.emplace_back(next, i);
      ++next;
    }
  }
  for (std::size_t c = k; c < e.cols(); ++c)
    for (auto [j, i] : pivots) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), e(i, c).get_mpz_t(), e(i, j).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) e(r, c) -= q * e(r, j);
    }
}

}  // namespace

AffineSemigroup AffineSemigroup::make(std::size_t dim, std::vector<Point> gens, std::int64_t bound) {
  AffineSemigroup s;
  s.ambient_dim = dim;
  std::set<Point> seen;
  std::int64_t max_coord = 0;
  for (auto& g : gens) {
    check_dim(g, dim);
    if (is_zero(g) || !seen.insert(g).second) continue;
    for (auto v : g) max_coord = std::max<std::int64_t>(max_coord, std::llabs(v));
    s.generators.push_back(std::move(g));
  }
  s.search_bound = bound > 0 ? std::max(bound, max_coord) : std::max<std::int64_t>(3 * max_coord, 1);
  return s;
}

LatticeTest::LatticeTest(const std::vector<Point>& gens, std::size_t dim) : dim_(dim) {
  SmithForm snf = smith_normal_form(columns(gens, dim));
  U_ = snf.U;
  d_ = snf.invariants();
  rank_ = d_.size();
}

Point LatticeTest::reduce(const Point& v) const {
  check_dim(v, dim_);
  Point out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Integer y = 0;
    for (std::size_t j = 0; j < dim_; ++j) y += U_(i, j) * static_cast<long>(v[j]);
    if (i < rank_) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), d_[i].get_mpz_t());
      y = r;
    }
    out[i] = to_int64(y);
  }
  return out;
}

bool LatticeTest::contains(const Point& v) const { return is_zero(reduce(v)); }

MembershipOracle::MembershipOracle(const AffineSemigroup& s)
    : dim_(s.ambient_dim), units_({}, s.ambient_dim), group_(s.generators, s.ambient_dim) {
  if (dim_ <= kMaxDualDimension) {
    dual_ = dual_cone(s.generators, dim_);
    weight_.assign(dim_, 0);
    for (const auto& r : dual_->rays)
      for (std::size_t i = 0; i < dim_; ++i) weight_[i] += r[i];
    for (const auto& g : s.generators) {
      bool in_lineality = std::all_of(dual_->rays.begin(), dual_->rays.end(),
                                      [&](const Point& r) { return evaluate(r, g) == 0; });
      (in_lineality ? unit_gens_ : free_gens_).push_back(g);
    }
    units_ = LatticeTest(unit_gens_, dim_);
  } else {
    for (const auto& g : s.generators)
      if (std::any_of(g.begin(), g.end(), [](auto v) { return v < 0; }))
        throw Error(ErrorKind::UnsupportedDimension,
                    "membership above dimension 4 needs nonnegative generators", std::to_string(dim_));
    weight_.assign(dim_, 1);
    free_gens_ = s.generators;
  }
}

bool MembershipOracle::in_cone(const Point& v) const {
  check_dim(v, dim_);
  if (!dual_)
    throw Error(ErrorKind::UnsupportedDimension, "cone tests are limited to dimension 4", std::to_string(dim_));
  return dual_->contains_dual(v);
}

bool MembershipOracle::may_contain(const Point& v) const {
  if (dual_) return dual_->contains_dual(v);
  return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

bool MembershipOracle::contains(const Point& v) const {
  check_dim(v, dim_);
  return search(v);
}

bool MembershipOracle::search(const Point& v) const {
  if (!may_contain(v)) return false;
  if (units_.contains(v)) return true;
  Point key = unit_gens_.empty() ? v : units_.reduce(v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool found = false;
  for (const auto& g : free_gens_) {
    if (search(sub(v, g))) {
      found = true;
      break;
    }
  }
  memo_.emplace(std::move(key), found);
  return found;
}

std::vector<Point> box_points(std::size_t dim, std::int64_t radius) {
  std::vector<Point> out;
  Point p(dim, -radius);
  if (dim == 0) return {Point{}};
  for (;;) {
    out.push_back(p);
    std::size_t i = dim;
    while (i-- > 0) {
      if (p[i] < radius) {
        ++p[i];
        break;
      }
      p[i] = -radius;
      if (i == 0) {
        std::stable_sort(out.begin(), out.end(), norm_less);
        return out;
      }
    }
  }
}

std::vector<Point> members_in_box(const MembershipOracle& oracle, std::size_t dim, std::int64_t radius) {
  std::vector<Point> out;
  for (auto& p : box_points(dim, radius))
    if (oracle.contains(p)) out.push_back(std::move(p));
  return out;
}

Verdict membership(const AffineSemigroup& s, const Point& v) {
  check_dim(v, s.ambient_dim);
  MembershipOracle oracle(s);
  return Verdict{oracle.contains(v), std::nullopt, false, true};
}

Verdict is_positive(const AffineSemigroup& s) {
  if (s.generators.empty()) return Verdict{};
  MembershipOracle oracle(s);
  if (oracle.positive()) return Verdict{};
  const Point& u = oracle.unit_generators().front();
  if (!oracle.contains(neg(u))) throw std::logic_error("unit witness failed re-verification");
  return Verdict{false, u, false, true};
}

Verdict is_normal(const AffineSemigroup& s) {
  MembershipOracle oracle(s);
  for (const auto& p : box_points(s.ambient_dim, s.search_bound)) {
    if (oracle.in_cone(p) && oracle.in_group(p) && !oracle.contains(p)) return Verdict{false, p, true, true};
  }
  return Verdict{true, std::nullopt, true, true};
}

Verdict is_full(const AffineSemigroup& sub_s, const AffineSemigroup& sup_s) {
  if (sub_s.ambient_dim != sup_s.ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "semigroups live in different ambient dimensions");
  MembershipOracle sub_o(sub_s), sup_o(sup_s);
  for (const auto& g : sub_s.generators)
    if (!sup_o.contains(g)) throw Error(ErrorKind::NotSubsemigroup, "generator outside the larger semigroup", to_string(g));
  const std::int64_t radius = std::max(sub_s.search_bound, sup_s.search_bound);
  auto members = members_in_box(sub_o, sub_s.ambient_dim, radius);
  std::unordered_set<Point, PointHash> diffs;
  for (const auto& h : members)
    for (const auto& h2 : members) {
      Point d = sub(h, h2);
      if (!is_zero(d)) diffs.insert(std::move(d));
    }
  std::optional<Point> witness;
  for (const auto& d : diffs) {
    if (witness && !norm_less(d, *witness)) continue;
    if (sup_o.contains(d) && !sub_o.contains(d)) witness = d;
  }
  if (witness) return Verdict{false, witness, true, true};
  return Verdict{true, std::nullopt, true, true};
}

std::optional<Point> PositiveSplit::coordinates(const Point& v) const {
  check_dim(v, embedding.rows());
  if (embedding.cols() == 0) {
    if (is_zero(v)) return Point{};
    return std::nullopt;
  }
  auto y = solve(to_rational(embedding), to_rational(v));
  if (!y) return std::nullopt;
  Point out;
  for (const auto& q : *y) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(to_int64(q.get_num()));
  }
  return out;
}

bool PositiveSplit::contains(const Point& v) const {
  auto y = coordinates(v);
  if (!y) return false;
  Point rest(y->begin() + static_cast<std::ptrdiff_t>(k), y->end());
  if (positive_part.ambient_dim == 0) return true;
  return MembershipOracle(positive_part).contains(rest);
}

PositiveSplit split_positive(const AffineSemigroup& s) {
  Verdict normal = is_normal(s);
  if (!normal.value) throw Error(ErrorKind::NotNormal, "semigroup is not normal on the search box", to_string(*normal.witness));
  const std::size_t dim = s.ambient_dim;
  MembershipOracle oracle(s);

  // basis of the group of s
  SmithForm gs = smith_normal_form(columns(s.generators, dim));
  const std::size_t r = gs.rank();
  ZMatrix Uinv = unimodular_inverse(gs.U);
  ZMatrix Bs(dim, r);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < r; ++j) Bs(i, j) = Uinv(i, j) * gs.D(j, j);
  QMatrix Bq = to_rational(Bs);
  auto group_coords = [&](const Point& v) {
    auto w = solve(Bq, to_rational(v));
    Point out;
    for (const auto& q : *w) out.push_back(to_int64(q.get_num()));
    return out;
  };

  std::vector<Point> candidates = s.generators;
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i + 1; j < s.generators.size(); ++j) {
      Point c = add(s.generators[i], s.generators[j]);
      bool in_box = std::all_of(c.begin(), c.end(), [&](auto v) { return std::llabs(v) <= s.search_bound; });
      if (in_box && !is_zero(c)) candidates.push_back(c);
    }
  std::vector<Point> unit_coords;
  for (const auto& c : candidates)
    if (oracle.contains(neg(c))) unit_coords.push_back(group_coords(c));

  SmithForm us = smith_normal_form(columns(unit_coords, r));
  const std::size_t k = us.rank();
  ZMatrix Usinv = unimodular_inverse(us.U);

  PositiveSplit out;
  out.k = k;
  out.embedding = Bs * Usinv;
  reduce_complement(out.embedding, k);
  std::vector<Point> pos_gens;
  for (const auto& g : s.generators) {
    Point w = group_coords(g);
    Point y;
    for (std::size_t i = k; i < r; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += us.U(i, j) * static_cast<long>(w[j]);
      y.push_back(to_int64(acc));
    }
    pos_gens.push_back(std::move(y));
  }
  out.positive_part = AffineSemigroup::make(r - k, std::move(pos_gens), s.search_bound);
  return out;
}

std::vector<AffineSemigroup> filtration(const std::vector<Point>& points, std::size_t depth) {
  if (depth > points.size())
    throw Error(ErrorKind::PreconditionFailed, "filtration depth exceeds the number of points");
  if (points.empty()) return {};
  const std::size_t dim = points.front().size();
  std::int64_t max_coord = 0;
  for (const auto& p : points) {
    check_dim(p, dim);
    for (auto v : p) max_coord = std::max<std::int64_t>(max_coord, std::llabs(v));
  }
  const std::int64_t bound = std::max<std::int64_t>(3 * max_coord, 1);
  const auto box = box_points(dim, bound);

  std::vector<AffineSemigroup> chain;
  for (std::size_t i = 1; i <= depth; ++i) {
    std::vector<Point> gens(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(i));
    AffineSemigroup cur = AffineSemigroup::make(dim, gens, bound);
    auto oracle = std::make_unique<MembershipOracle>(cur);
    for (const auto& p : box) {
      if (oracle->in_cone(p) && oracle->in_group(p) && !oracle->contains(p)) {
        gens.push_back(p);
        cur = AffineSemigroup::make(dim, gens, bound);
        oracle = std::make_unique<MembershipOracle>(cur);
      }
    }
    chain.push_back(std::move(cur));
  }
  return chain;
}

std::size_t group_rank(const AffineSemigroup& s) {
  if (s.generators.empty()) return 0;
  return smith_normal_form(columns(s.generators, s.ambient_dim)).rank();
}

}  // namespace semireg
