#include "semireg/monomial/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "semireg/error.hpp"
#include "semireg/exact/linalg.hpp"

namespace semireg {

namespace {

int subset_sign(std::uint32_t mask, std::size_t j) {
  return std::popcount(mask & ((std::uint32_t{1} << j) - 1)) % 2 ? -1 : 1;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::GeneratorCap,
                std::to_string(n) + " generators exceed the cap of " + std::to_string(cap));
}

std::vector<Monomial> all_subset_lcms(const std::vector<Monomial>& gens) {
  std::vector<Monomial> out(std::size_t{1} << gens.size());
  kernels::active_kernels().subset_lcms(gens.front().data(), gens.size(), out.front().data());
  return out;
}

template <class LabelFn>
FreeComplex build_complex(const std::vector<Monomial>& gens, std::size_t cap, LabelFn label) {
  if (gens.empty()) throw Error(ErrorKind::PreconditionFailed, "complex needs at least one generator");
  for (const auto& g : gens)
    if (g.is_unit()) throw Error(ErrorKind::PreconditionFailed, "complex on a unit generator");
  const std::size_t n = gens.size();
  check_cap(n, cap);
  const std::uint32_t full = (std::uint32_t{1} << n);
  FreeComplex c;
  c.labels.resize(n + 1);
  c.label_monomials.resize(n + 1);
  std::vector<std::size_t> index(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    auto d = static_cast<std::size_t>(std::popcount(mask));
    index[mask] = c.labels[d].size();
    c.labels[d].push_back(mask);
    c.label_monomials[d].push_back(label(mask));
  }
  for (std::size_t d = 0; d <= n; ++d) c.ranks.push_back(c.labels[d].size());
  c.differentials.resize(n);
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t col = 0; col < c.labels[d].size(); ++col) {
      std::uint32_t mask = c.labels[d][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        std::uint32_t face = mask & ~(std::uint32_t{1} << j);
        c.differentials[d - 1].push_back(
            {index[face], col, subset_sign(mask, j), quotient(c.label_monomials[d][col], label(face))});
      }
    }
  }
  return c;
}

// Ranks of the reduced Taylor differentials; entry +-1 iff deleting a generator
// keeps the lcm. The matrix is block diagonal over lcm values.
std::vector<std::size_t> reduced_ranks(const std::vector<Monomial>& gens) {
  const std::size_t n = gens.size();
  std::vector<std::size_t> ranks(n + 2, 0);
  if (n == 0) return ranks;
  const std::vector<Monomial> lcms = all_subset_lcms(gens);
  std::vector<std::uint32_t> order(lcms.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (lcms[a] != lcms[b]) return lcms[a] < lcms[b];
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  thread_local std::vector<int> local;
  local.assign(lcms.size(), -1);
  std::vector<std::int64_t> dense;
  std::vector<std::vector<std::uint32_t>> by_degree(n + 1);
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && lcms[order[end]] == lcms[order[start]]) ++end;
    if (end - start > 1) {
      for (auto& v : by_degree) v.clear();
      for (std::size_t k = start; k < end; ++k) {
        std::uint32_t mask = order[k];
        auto& bucket = by_degree[static_cast<std::size_t>(std::popcount(mask))];
        local[mask] = static_cast<int>(bucket.size());
        bucket.push_back(mask);
      }
      for (std::size_t d = 1; d <= n; ++d) {
        const auto& cols = by_degree[d];
        const auto& rows = by_degree[d - 1];
        if (cols.empty() || rows.empty()) continue;
        dense.assign(rows.size() * cols.size(), 0);
        bool any = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::uint32_t mask = cols[c];
          for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            std::uint32_t face = mask & ~(std::uint32_t{1} << j);
            if (local[face] < 0 || lcms[face] != lcms[mask]) continue;
            dense[static_cast<std::size_t>(local[face]) * cols.size() + c] = subset_sign(mask, j);
            any = true;
          }
        }
        if (any) ranks[d] += rank_small(dense, rows.size(), cols.size());
      }
      for (std::size_t k = start; k < end; ++k) local[order[k]] = -1;
    }
    start = end;
  }
  return ranks;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool FreeComplex::is_complex() const {
  for (std::size_t d = 2; d <= differentials.size(); ++d) {
    const auto& outer = differentials[d - 2];  // d_{d-1}
    const auto& inner = differentials[d - 1];  // d_d
    std::vector<std::vector<const ComplexEntry*>> by_col(ranks[d - 1]);
    for (const auto& e : outer) by_col[e.col].push_back(&e);
    std::map<std::tuple<std::size_t, std::size_t, Monomial>, long> acc;
    for (const auto& e : inner)
      for (const ComplexEntry* f : by_col[e.row])
        acc[{f->row, e.col, product(f->coefficient, e.coefficient)}] += e.sign * f->sign;
    for (const auto& [key, value] : acc)
      if (value != 0) return false;
  }
  return true;
}

FreeComplex taylor_complex(const std::vector<Monomial>& gens, std::size_t cap) {
  if (gens.size() > cap) check_cap(gens.size(), cap);
  std::vector<Monomial> lcms = gens.empty() ? std::vector<Monomial>{} : all_subset_lcms(gens);
  return build_complex(gens, cap, [&](std::uint32_t mask) { return lcms[mask]; });
}

FreeComplex koszul_complex(const std::vector<Monomial>& gens, std::size_t cap) {
  return build_complex(gens, cap, [&](std::uint32_t mask) {
    Monomial m;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (mask >> j & 1) m = product(m, gens[j]);
    return m;
  });
}

std::vector<std::size_t> reduced_taylor_ranks(const MonomialIdeal& i) {
  std::vector<std::size_t> r = reduced_ranks(i.gens);
  r.resize(i.gens.size() + 1);
  return r;
}

BettiTable betti_table(const MonomialIdeal& i, std::size_t cap) {
  if (i.is_unit()) throw Error(ErrorKind::ImproperIdeal, "the unit ideal has no proper quotient");
  const std::size_t n = i.gens.size();
  check_cap(n, cap);
  const std::vector<std::size_t> r = reduced_ranks(i.gens);
  BettiTable t;
  for (std::size_t d = 0; d <= n; ++d) {
    std::size_t dim = binomial(n, d);
    t.total.push_back(dim - r[d] - r[d + 1]);
  }
  while (t.total.size() > 1 && t.total.back() == 0) t.total.pop_back();
  t.pd = t.total.size() - 1;
  return t;
}

KoszulComparison koszul_compare(const std::vector<Monomial>& gens, std::size_t cap) {
  const auto names = default_variables(kMaxVars);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!coprime(gens[a], gens[b]))
        throw Error(ErrorKind::NotCoprime, "generators share a variable",
                    "(" + to_string(gens[a], names) + "," + to_string(gens[b], names) + ")");
  KoszulComparison out;
  out.koszul = koszul_complex(gens, cap);
  bool unit = true;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      out.phi.push_back(quotient(lcm(gens[a], gens[b]), product(gens[a], gens[b])));
      unit = unit && out.phi.back().is_unit();
    }
  FreeComplex taylor = taylor_complex(gens, cap);
  bool same = taylor.ranks == out.koszul.ranks;
  for (std::size_t d = 0; same && d < taylor.differentials.size(); ++d) {
    const auto& x = taylor.differentials[d];
    const auto& y = out.koszul.differentials[d];
    same = x.size() == y.size();
    for (std::size_t k = 0; same && k < x.size(); ++k)
      same = x[k].row == y[k].row && x[k].col == y[k].col && x[k].sign == y[k].sign &&
             x[k].coefficient == y[k].coefficient;
  }
  out.comparison_ok = unit && same && out.koszul.is_complex();
  return out;
}

std::size_t cd(const MonomialIdeal& i, std::size_t cap) {
  if (i.is_unit()) throw Error(ErrorKind::ImproperIdeal, "cd of the unit ideal");
  std::size_t value = betti_table(radical(i), cap).pd;
  std::size_t pd = betti_table(i, cap).pd;
  if (value > pd) throw std::logic_error("cd exceeds pd");
  return value;
}

}  // namespace semireg
