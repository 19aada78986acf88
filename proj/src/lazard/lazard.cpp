#include "semireg/lazard/lazard.hpp"

#include <algorithm>
#include <numeric>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

namespace {

using Family = std::vector<FinSeq>;

std::size_t rank_with(const Family& f, const FinSeq& x) {
  Family all = f;
  all.push_back(x);
  return rank_of(all);
}

FinSeq unit_sequence(std::size_t i) {
  RatVec p(i, 0);
  p[i - 1] = 1;
  return FinSeq(p, 0);
}

// a * b / s componentwise, 0 where s vanishes.
FinSeq proportional_share(const FinSeq& a, const FinSeq& b, const FinSeq& s) {
  const std::size_t w = common_window({a, b, s});
  RatVec x = a.coords(w), y = b.coords(w), z = s.coords(w), out(w + 1);
  for (std::size_t i = 0; i <= w; ++i) out[i] = z[i] == 0 ? Rational(0) : Rational(x[i] * y[i] / z[i]);
  return FinSeq::from_coords(out);
}

// The share beta' split off the first positive summand against the negative
// member, outside the span of the family.
FinSeq split_share(const Family& f, const std::vector<std::size_t>& pos, std::size_t neg, const SupportPattern& I) {
  FinSeq s;
  for (auto p : pos) s = s + f[p];
  const FinSeq& bm = f[pos.front()];
  const FinSeq& bn = f[neg];
  FinSeq share = proportional_share(bm, bn, s);
  if (rank_with(f, share) == f.size() + 1) return share;

  Family all = f;
  all.push_back(share);
  std::size_t w = std::max(common_window(all), I.horizon());
  while (I.indices_upto(w).size() < f.size() + 1) ++w;
  for (std::size_t i : I.indices_upto(w)) {
    if (rank_with(f, unit_sequence(i)) != f.size() + 1) continue;
    const Rational base = share.at(i), top_m = bm.at(i), top_n = bn.at(i), rest = s.at(i) - top_m - top_n;
    for (long l = 2;; ++l) {
      for (int sign : {1, -1}) {
        Rational v = base + Rational(sign, l);
        if (v > 0 && v < top_m && v < top_n && (pos.size() < 2 || rest + v > 0)) return share.with(i, v);
      }
      if (l > 1'000'000) break;
    }
  }
  throw std::logic_error("split_share: no admissible perturbation");
}

void apply_split(Family& f, std::size_t first, std::size_t neg, const FinSeq& share) {
  f[first] = f[first] - share;
  f[neg] = f[neg] - share;
  f.push_back(share);
}

// alpha = sum_{pos} f - f[neg]; returns a family containing alpha and the
// inputs in its cone.
Family one_negative(Family f, std::vector<std::size_t> pos, std::size_t neg, const SupportPattern& I) {
  if (pos.empty()) throw Error(ErrorKind::PreconditionFailed, "no positive summand");
  while (pos.size() >= 2) {
    FinSeq share = split_share(f, pos, neg, I);
    apply_split(f, pos.front(), neg, share);
    pos.erase(pos.begin());
  }
  FinSeq last = f[pos.front()] - f[neg];
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos.front()));
  f.push_back(last);
  return f;
}

Family resolve_into(Family f, const FinSeq& alpha, const SupportPattern& I) {
  for (std::size_t guard = 0; guard <= f.size() + 1; ++guard) {
    auto c = span_coordinates(f, alpha);
    if (!c) {
      f.push_back(alpha);
      return f;
    }
    if (std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; })) return f;
    std::vector<std::size_t> pos;
    std::optional<std::size_t> neg;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const Rational& q = (*c)[k];
      if (q == 0) continue;
      f[k] = Rational(abs(q)) * f[k];
      if (q > 0)
        pos.push_back(k);
      else if (!neg)
        neg = k;
    }
    if (pos.empty()) throw std::logic_error("resolve: nonnegative alpha with only negative coordinates");
    f = one_negative(std::move(f), pos, *neg, I);
  }
  throw std::logic_error("resolve: negative terms did not decrease");
}

void validate_members(const Family& betas, const SupportPattern& I, bool nonneg, bool independent) {
  for (const auto& b : betas) {
    if (!is_supported(b, I)) throw Error(ErrorKind::NotSupported, "sequence is not I-supported", to_string(b));
    if (nonneg ? !b.nonnegative() : !b.almost_nonnegative())
      throw Error(ErrorKind::PreconditionFailed,
                  nonneg ? "sequence has a negative entry" : "sequence has a negative tail", to_string(b));
  }
  if (independent && rank_of(betas) != betas.size())
    throw Error(ErrorKind::DependentGenerators, "sequences are linearly dependent");
}

IndependentFamily finish(Family f, const SupportPattern& I, const Family& inputs, bool nonneg) {
  IndependentFamily out{std::move(f), I};
  if (!check_family(out, inputs).ok(nonneg)) throw std::logic_error("constructed family fails its checks");
  return out;
}

FinSeq alternating_sum(const Family& betas, const std::vector<bool>& eta) {
  FinSeq alpha = Rational(-1) * betas.back();
  for (std::size_t i = 0; i + 1 < betas.size(); ++i)
    if (eta[i]) alpha = alpha + betas[i];
  return alpha;
}

void validate_alpha(const FinSeq& alpha, const SupportPattern& I) {
  if (!alpha.nonnegative()) throw Error(ErrorKind::PreconditionFailed, "alpha has a negative entry", to_string(alpha));
  if (!is_supported(alpha, I)) throw Error(ErrorKind::NotSupported, "alpha is not I-supported", to_string(alpha));
}

}  // namespace

bool FamilyCheck::ok(bool require_nonneg) const {
  bool all = std::all_of(recovered.begin(), recovered.end(), [](bool b) { return b; });
  return independent && supported && almost_nonneg && (!require_nonneg || nonneg) && all;
}

FamilyCheck check_family(const IndependentFamily& f, const std::vector<FinSeq>& inputs) {
  FamilyCheck c;
  c.independent = rank_of(f.members) == f.members.size();
  c.supported = std::all_of(f.members.begin(), f.members.end(), [&](const FinSeq& g) { return is_supported(g, f.support); });
  c.almost_nonneg = std::all_of(f.members.begin(), f.members.end(), [](const FinSeq& g) { return g.almost_nonnegative(); });
  c.nonneg = std::all_of(f.members.begin(), f.members.end(), [](const FinSeq& g) { return g.nonnegative(); });
  for (const auto& v : inputs) {
    bool rec = false;
    if (c.independent) {
      auto q = cone_coordinates(f.members, v);
      if (q) {
        FinSeq sum;
        for (std::size_t k = 0; k < q->size(); ++k) sum = sum + (*q)[k] * f.members[k];
        rec = sum == v;
      }
    }
    c.recovered.push_back(rec);
  }
  return c;
}

SplitResult split_off(const std::vector<FinSeq>& betas, const SupportPattern& I) {
  if (betas.size() < 3)
    throw Error(ErrorKind::PreconditionFailed, "split_off needs at least two positive summands");
  validate_members(betas, I, true, true);
  FinSeq alpha = alternating_sum(betas, std::vector<bool>(betas.size() - 1, true));
  validate_alpha(alpha, I);
  std::vector<std::size_t> pos(betas.size() - 1);
  std::iota(pos.begin(), pos.end(), 0);
  Family f = betas;
  FinSeq share = split_share(f, pos, betas.size() - 1, I);
  apply_split(f, 0, betas.size() - 1, share);
  return {share, finish(std::move(f), I, betas, true)};
}

IndependentFamily resolve_one_negative(const std::vector<FinSeq>& betas, const std::vector<bool>& eta,
                                       const SupportPattern& I) {
  if (betas.size() < 2 || eta.size() + 1 != betas.size())
    throw Error(ErrorKind::PreconditionFailed, "need one flag for each of beta_1..beta_{n-1}");
  validate_members(betas, I, true, true);
  if (std::none_of(eta.begin(), eta.end(), [](bool b) { return b; }))
    throw Error(ErrorKind::PreconditionFailed, "alpha = -beta_n is not nonnegative");
  FinSeq alpha = alternating_sum(betas, eta);
  validate_alpha(alpha, I);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i]) pos.push_back(i);
  Family inputs = betas;
  inputs.push_back(alpha);
  return finish(one_negative(betas, pos, betas.size() - 1, I), I, inputs, true);
}

IndependentFamily resolve(const std::vector<FinSeq>& betas, const FinSeq& alpha, const SupportPattern& I) {
  validate_members(betas, I, true, true);
  if (alpha.is_zero()) throw Error(ErrorKind::PreconditionFailed, "alpha is zero");
  validate_alpha(alpha, I);
  Family inputs = betas;
  inputs.push_back(alpha);
  return finish(resolve_into(betas, alpha, I), I, inputs, true);
}

IndependentFamily adjoin_closure(const std::vector<FinSeq>& betas, const SupportPattern& I) {
  validate_members(betas, I, true, false);
  Family f;
  for (const auto& b : betas) f = f.empty() ? Family{b} : resolve_into(std::move(f), b, I);
  return finish(std::move(f), I, betas, true);
}

const char* route_name(MixedRoute r) {
  switch (r) {
    case MixedRoute::Independent: return "independent";
    case MixedRoute::Contained: return "contained";
    case MixedRoute::Nonnegative: return "nonnegative";
    case MixedRoute::Split: return "split";
    case MixedRoute::Shear: return "shear";
  }
  return "?";
}

namespace {

std::optional<Family> split_route(const Family& inputs, std::size_t cut, const SupportPattern& I) {
  const SupportPattern upper = I.restrict_above(cut);
  Family ddots, dots;
  for (const auto& x : inputs) {
    RatVec c = x.coords(std::max(x.window(), cut));
    RatVec d(cut, 0);
    for (std::size_t i = 0; i < cut; ++i) std::swap(c[i], d[i]);
    ddots.push_back(FinSeq::from_coords(c));
    dots.push_back(FinSeq(d, 0));
  }
  Family gamma;
  for (const auto& b : ddots) gamma = gamma.empty() ? Family{b} : resolve_into(std::move(gamma), b, upper);

  const std::size_t s = gamma.size();
  QMatrix q(inputs.size(), s);
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    auto c = cone_coordinates(gamma, ddots[t]);
    if (!c) return std::nullopt;
    for (std::size_t k = 0; k < s; ++k) q(t, k) = (*c)[k];
  }
  std::vector<RatVec> corrections(s, RatVec(cut, 0));
  for (std::size_t i = 0; i < cut; ++i) {
    RatVec rhs(inputs.size());
    for (std::size_t t = 0; t < inputs.size(); ++t) rhs[t] = dots[t].at(i + 1);
    auto x = solve(q, rhs);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < s; ++k) corrections[k][i] = (*x)[k];
  }
  Family out;
  for (std::size_t k = 0; k < s; ++k) out.push_back(gamma[k] + FinSeq(corrections[k], 0));
  return out;
}

// Unipotent shear adding K times coordinate j to each coordinate up to the cut.
FinSeq shear(const FinSeq& x, std::size_t cut, std::size_t j, const Rational& k) {
  RatVec c = x.coords(std::max({x.window(), cut, j}));
  Rational pivot = c[j - 1];
  for (std::size_t i = 0; i < cut; ++i) c[i] += k * pivot;
  return FinSeq::from_coords(c);
}

}  // namespace

IndependentFamily extend_mixed(const std::vector<FinSeq>& betas, const FinSeq& alpha, const SupportPattern& I,
                               MixedRoute* route) {
  validate_members(betas, I, false, true);
  validate_members({alpha}, I, false, false);
  Family inputs = betas;
  inputs.push_back(alpha);
  auto set_route = [&](MixedRoute r) {
    if (route) *route = r;
  };

  auto c = span_coordinates(betas, alpha);
  if (!c) {
    set_route(MixedRoute::Independent);
    return finish(inputs, I, inputs, false);
  }
  if (std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; })) {
    set_route(MixedRoute::Contained);
    return finish(betas, I, inputs, false);
  }
  if (std::all_of(inputs.begin(), inputs.end(), [](const FinSeq& x) { return x.nonnegative(); })) {
    set_route(MixedRoute::Nonnegative);
    return finish(resolve_into(betas, alpha, I), I, inputs, false);
  }

  std::size_t cut = 0;
  for (const auto& x : inputs)
    for (std::size_t i = 1; i <= x.window(); ++i)
      if (x.at(i) < 0) cut = std::max(cut, i);

  if (auto f = split_route(inputs, cut, I)) {
    IndependentFamily candidate{*f, I};
    if (check_family(candidate, inputs).ok(false)) {
      set_route(MixedRoute::Split);
      return candidate;
    }
  }

  std::size_t j = cut + 1;
  while (!I.contains(j)) ++j;
  Rational k0 = 0;
  for (const auto& x : inputs)
    for (std::size_t i = 1; i <= cut; ++i) k0 = std::max(k0, Rational(-x.at(i) / x.at(j)));
  Integer k = k0.get_num() / k0.get_den() + 1;
  for (int attempt = 0; attempt < 8; ++attempt, k *= 2) {
    Family sheared;
    for (const auto& x : inputs) sheared.push_back(shear(x, cut, j, Rational(k)));
    Family g;
    for (const auto& b : sheared) g = g.empty() ? Family{b} : resolve_into(std::move(g), b, I);
    Family back;
    for (const auto& y : g) back.push_back(shear(y, cut, j, Rational(-k)));
    IndependentFamily candidate{back, I};
    if (check_family(candidate, inputs).ok(false)) {
      set_route(MixedRoute::Shear);
      return candidate;
    }
  }
  throw Error(ErrorKind::NoSolution, "no admissible family after bounded retries");
}

std::optional<std::vector<Integer>> integer_coordinates(const IndependentFamily& f, const FinSeq& v) {
  auto q = cone_coordinates(f.members, v);
  if (!q) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& x : *q) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num());
  }
  return out;
}

}  // namespace semireg
