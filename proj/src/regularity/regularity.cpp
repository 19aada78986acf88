#include "semireg/regularity/regularity.hpp"

#include <algorithm>
#include <bit>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

namespace {

void require_nonunit(const MonomialSequence& s) {
  for (std::size_t j = 0; j < s.items.size(); ++j)
    if (s.items[j].is_unit()) throw Error(ErrorKind::UnitEntry, "sequence item is the unit monomial", std::to_string(j + 1));
}

MonomialIdeal ideal_of(const MonomialSequence& s, std::uint32_t mask) {
  std::vector<Monomial> raw;
  for (std::size_t j = 0; j < s.items.size(); ++j)
    if (mask >> j & 1) raw.push_back(s.items[j]);
  return min_gens(s.nvars, std::move(raw));
}

MonomialIdeal prefix(const MonomialSequence& s, std::size_t len) {
  return min_gens(s.nvars, std::vector<Monomial>(s.items.begin(), s.items.begin() + static_cast<std::ptrdiff_t>(len)));
}

std::vector<std::size_t> indices_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j)
    if (mask >> j & 1) out.push_back(j + 1);
  return out;
}

Point pad(const Point& p, std::size_t n) {
  Point out(n, 0);
  for (std::size_t i = 0; i < std::min(n, p.size()); ++i) out[i] = p[i];
  return out;
}

}  // namespace

OracleVerdict oracle_regular(const MonomialSequence& s) {
  require_nonunit(s);
  OracleVerdict out;
  for (std::size_t j = 0; j < s.items.size(); ++j) {
    MonomialIdeal before = prefix(s, j);
    MonomialIdeal col = colon(before, s.items[j]);
    if (col == before) continue;
    out.regular = false;
    for (const auto& g : col.gens)
      if (!before.contains(g)) {
        out.witness = ZeroDivisorWitness{j + 1, g};
        break;
      }
    return out;
  }
  return out;
}

bool verify_witness(const MonomialSequence& s, const ZeroDivisorWitness& w) {
  if (w.index == 0 || w.index > s.items.size()) return false;
  MonomialIdeal before = prefix(s, w.index - 1);
  return before.contains(product(w.monomial, s.items[w.index - 1])) && !before.contains(w.monomial);
}

bool star_condition(const MonomialSequence& s) {
  for (std::size_t a = 0; a < s.items.size(); ++a)
    for (std::size_t b = a + 1; b < s.items.size(); ++b)
      if (!coprime(s.items[a], s.items[b])) return false;
  return true;
}

RegularityReport pd_criterion(const MonomialSequence& s, std::size_t cap) {
  require_nonunit(s);
  const std::size_t n = s.items.size();
  if (n > cap) throw Error(ErrorKind::GeneratorCap, "sequence longer than the generator cap", std::to_string(n));
  RegularityReport r;
  r.pd_criterion = true;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::size_t pd = betti_table(ideal_of(s, mask), cap).pd;
    r.subset_pds.push_back({indices_of(mask), pd});
    if (pd != static_cast<std::size_t>(std::popcount(mask))) r.pd_criterion = false;
  }
  OracleVerdict o = oracle_regular(s);
  r.oracle_regular = o.regular;
  r.witness = o.witness;
  r.star_condition = star_condition(s);
  r.discrepancy = r.pd_criterion != r.oracle_regular;
  return r;
}

bool is_parameter_sequence_poly(const MonomialSequence& s) {
  for (const auto& m : s.items)
    if (m.is_unit()) return false;
  for (std::size_t i = 1; i <= s.items.size(); ++i)
    if (height(prefix(s, i)) != i) return false;
  return true;
}

Verdict cd_subset_check(const MonomialSequence& s) {
  require_nonunit(s);
  const std::size_t n = s.items.size();
  Verdict v;
  if (cd(prefix(s, n)) < n) {
    v.applicable = false;
    return v;
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (cd(ideal_of(s, mask)) == static_cast<std::size_t>(std::popcount(mask))) continue;
    v.value = false;
    Point w;
    for (auto i : indices_of(mask)) w.push_back(static_cast<std::int64_t>(i));
    v.witness = w;
    return v;
  }
  return v;
}

UnitStripping strip_units(const AffineSemigroup& c, const std::vector<Point>& exponents) {
  UnitStripping out{split_positive(c), {}, {}, {}, {}};
  const PositiveSplit& sp = out.split;
  const std::size_t dim = c.ambient_dim;
  for (const auto& v : exponents) {
    auto y = sp.coordinates(v);
    if (!y || !sp.contains(v)) throw Error(ErrorKind::PreconditionFailed, "exponent is not in the semigroup", to_string(v));
    Point unit(dim, 0), pos(dim, 0), red;
    for (std::size_t j = 0; j < y->size(); ++j) {
      Point& target = j < sp.k ? unit : pos;
      for (std::size_t i = 0; i < dim; ++i) target[i] += to_int64(sp.embedding(i, j) * static_cast<long>((*y)[j]));
      if (j >= sp.k) red.push_back((*y)[j]);
    }
    out.pure_unit.push_back(std::all_of(red.begin(), red.end(), [](auto x) { return x == 0; }));
    out.units.push_back(std::move(unit));
    out.positive_parts.push_back(std::move(pos));
    out.reduced.push_back(std::move(red));
  }
  return out;
}

FormalSum retraction(const AffineSemigroup& sub, const AffineSemigroup& sup, const FormalSum& element) {
  Verdict full = is_full(sub, sup);
  if (!full.value) throw Error(ErrorKind::NotFull, "subsemigroup is not full", to_string(*full.witness));
  MembershipOracle sub_oracle(sub), sup_oracle(sup);
  FormalSum out;
  for (const auto& [exp, coeff] : element) {
    if (!sup_oracle.contains(exp)) throw Error(ErrorKind::PreconditionFailed, "term outside the ambient semigroup", to_string(exp));
    if (coeff != 0 && sub_oracle.contains(exp)) out[exp] = coeff;
  }
  return out;
}

TransferReport limit_transfer_check(const std::vector<Point>& h_infty, std::size_t depth) {
  TransferReport report;
  report.verdict.bounded = true;
  auto truncation = [&](std::size_t n) {
    std::vector<Point> gens;
    for (const auto& g : h_infty) {
      bool inside = true;
      for (std::size_t i = n; i < g.size(); ++i) inside = inside && g[i] == 0;
      if (inside) gens.push_back(pad(g, n));
    }
    return AffineSemigroup::make(n, std::move(gens));
  };

  for (std::size_t n = 1; n <= depth; ++n) {
    AffineSemigroup h = truncation(n);
    Verdict normal = is_normal(h);
    if (!normal.value)
      throw Error(ErrorKind::NotNormal, "truncation H(" + std::to_string(n) + ") is not normal",
                  to_string(*normal.witness));
    ++report.truncations;

    if (n < depth) {
      AffineSemigroup next = truncation(n + 1);
      std::vector<Point> lifted;
      for (const auto& g : h.generators) lifted.push_back(pad(g, n + 1));
      Verdict full = is_full(AffineSemigroup::make(n + 1, lifted, next.search_bound), next);
      if (!full.value) {
        report.verdict = full;
        return report;
      }
    }

    // H(n) free on its generators: monomials of k[H(n)] are monomials of a polynomial ring.
    const std::size_t m = h.generators.size();
    if (m == 0 || m > 4) continue;
    std::vector<RatVec> rows;
    for (const auto& g : h.generators) rows.push_back(to_rational(g));
    if (rank_of(rows) != m) continue;
    std::vector<Monomial> mons;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      Monomial x;
      for (std::size_t i = 0, c = code; i < m; ++i, c /= 3) x[i] = static_cast<kernels::Exp>(c % 3);
      mons.push_back(x);
    }
    for (const auto& a : mons)
      for (const auto& b : mons) {
        MonomialSequence seq{m, {a, b}};
        ++report.sequences_checked;
        if (!is_parameter_sequence_poly(seq) || oracle_regular(seq).regular) continue;
        report.verdict.value = false;
        Point w;
        for (std::size_t i = 0; i < m; ++i) w.push_back(a[i]);
        for (std::size_t i = 0; i < m; ++i) w.push_back(b[i]);
        report.verdict.witness = w;
        return report;
      }
  }
  return report;
}

}  // namespace semireg
