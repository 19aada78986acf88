#include <algorithm>
#include <map>
#include <set>

#include "semireg/error.hpp"
#include "semireg/lazard/lazard.hpp"

namespace semireg {

DirectSystem build_direct_system(const std::vector<FinSeq>& points, const SupportPattern& I, std::size_t depth) {
  if (depth == 0 || depth > points.size())
    throw Error(ErrorKind::PreconditionFailed, "depth must lie in 1..number of points");
  for (const auto& p : points) {
    if (!p.almost_nonnegative()) throw Error(ErrorKind::PreconditionFailed, "point has a negative tail", to_string(p));
    if (!is_supported(p, I)) throw Error(ErrorKind::NotSupported, "point is not I-supported", to_string(p));
  }
  DirectSystem out;
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<FinSeq> members;
    if (n == 1)
      members = {points[0]};
    else
      members = extend_mixed(out.families.back().members, points[n - 1], I).members;

    std::vector<FinSeq> inputs(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(n));
    if (n > 1) inputs.insert(inputs.end(), out.families.back().members.begin(), out.families.back().members.end());
    std::vector<Integer> denom(members.size(), 1);
    for (const auto& v : inputs) {
      auto c = cone_coordinates(members, v);
      if (!c) throw std::logic_error("direct system: input outside the family cone");
      for (std::size_t k = 0; k < members.size(); ++k) mpz_lcm(denom[k].get_mpz_t(), denom[k].get_mpz_t(), (*c)[k].get_den_mpz_t());
    }
    for (std::size_t k = 0; k < members.size(); ++k) members[k] = Rational(1, 1) / Rational(denom[k]) * members[k];
    IndependentFamily fam{std::move(members), I};

    if (n > 1) {
      const auto& prev = out.families.back().members;
      ZMatrix t(fam.members.size(), prev.size());
      for (std::size_t j = 0; j < prev.size(); ++j) {
        auto c = integer_coordinates(fam, prev[j]);
        if (!c) throw std::logic_error("direct system: transition is not integral");
        for (std::size_t k = 0; k < c->size(); ++k) t(k, j) = (*c)[k];
      }
      out.transitions.push_back(std::move(t));
    }
    out.families.push_back(std::move(fam));
  }
  return out;
}

FullEmbedding embed_full(const AffineSemigroup& h, std::size_t depth, std::int64_t box) {
  if (depth == 0) throw Error(ErrorKind::PreconditionFailed, "depth must be positive");
  Verdict pos = is_positive(h);
  if (!pos.value) throw Error(ErrorKind::NotPositive, "semigroup has nontrivial units");
  Verdict norm = is_normal(h);
  if (!norm.value) throw Error(ErrorKind::NotNormal, "semigroup is not normal");
  const std::size_t r = h.ambient_dim;
  const auto& gens = h.generators;
  if (gens.empty()) throw Error(ErrorKind::PreconditionFailed, "semigroup has no generators");

  FullEmbedding e;
  const std::size_t last = std::min(gens.size(), r + depth - 1);
  auto chain = filtration(gens, last);
  std::vector<std::size_t> g_positions;
  std::size_t last_block = 0;
  for (std::size_t i = 1; i <= depth; ++i) {
    const std::size_t count = std::min(gens.size(), r + i - 1);
    AffineSemigroup stage = chain[count - 1];
    std::vector<Point> sub(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(count));
    DualCone dual = dual_cone(sub, r);
    auto g = positive_functional(dual, sub);
    if (!g) throw std::logic_error("embed_full: stage cone is not pointed");
    last_block = e.functionals.size();
    g_positions.push_back(e.functionals.size());
    e.functionals.push_back(*g);
    for (const auto& f : dual.rays) e.functionals.push_back(f);
    for (const auto& f : dual.lineality) {
      e.functionals.push_back(f);
      Point neg = f;
      for (auto& x : neg) x = -x;
      e.functionals.push_back(neg);
    }
    e.stages.push_back(std::move(stage));
  }
  auto tail = positive_functional(dual_cone(gens, r), gens);
  if (!tail) throw std::logic_error("embed_full: cone is not pointed");
  e.tail_functional = *tail;

  std::set<std::size_t> exceptions;
  for (auto k : g_positions)
    if (std::all_of(gens.begin(), gens.end(), [&](const Point& p) { return evaluate(e.functionals[k], p) > 0; }))
      exceptions.insert(k + 1);
  e.support = SupportPattern{e.functionals.size(), exceptions};
  for (const auto& p : gens) e.images.push_back(embed_point(e, p));

  MembershipOracle oracle(h);
  auto members = members_in_box(oracle, r, box);
  std::map<std::vector<Rational>, Point> seen;
  const std::size_t w = e.functionals.size();
  for (const auto& p : members) {
    auto key = embed_point(e, p).coords(w);
    auto [it, fresh] = seen.emplace(key, p);
    if (!fresh) {
      Point diff(r);
      for (std::size_t k = 0; k < r; ++k) diff[k] = p[k] - it->second[k];
      e.certificate = Verdict{false, diff, true, true};
      return e;
    }
  }
  // Differences outside h must leave the cone of the last stage.
  for (const auto& p : members)
    for (const auto& q : members) {
      Point x(r);
      for (std::size_t k = 0; k < r; ++k) x[k] = p[k] - q[k];
      if (oracle.contains(x)) continue;
      bool negative = false;
      for (std::size_t k = last_block; k < w && !negative; ++k) negative = evaluate(e.functionals[k], x) < 0;
      if (!negative) {
        e.certificate = Verdict{false, x, true, true};
        return e;
      }
    }
  e.certificate = Verdict{true, std::nullopt, true, true};
  return e;
}

FinSeq embed_point(const FullEmbedding& e, const Point& p) {
  RatVec prefix;
  for (const auto& f : e.functionals) prefix.push_back(Rational(evaluate(f, p)));
  return FinSeq(prefix, Rational(evaluate(e.tail_functional, p)));
}

}  // namespace semireg
