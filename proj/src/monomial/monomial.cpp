#include "semireg/monomial/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>

#include "semireg/error.hpp"

namespace semireg {

namespace {

const kernels::ExponentKernels& K() { return kernels::active_kernels(); }

std::string render_exps(const Monomial& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out + ")";
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

Monomial::Monomial(const std::vector<unsigned>& e) {
  if (e.size() > kMaxVars) throw Error(ErrorKind::Overflow, "more than 32 variables");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > std::numeric_limits<kernels::Exp>::max()) throw Error(ErrorKind::Overflow, "exponent too large");
    exps[i] = static_cast<kernels::Exp>(e[i]);
  }
}

bool Monomial::is_unit() const {
  return std::all_of(exps.begin(), exps.end(), [](kernels::Exp e) { return e == 0; });
}

unsigned Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps[i]) s |= std::uint32_t{1} << i;
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t words[kMaxVars / 4];
  std::memcpy(words, m.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) h = (h ^ w) * 0xff51afd7ed558ccdULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  K().lcm(a.data(), b.data(), out.data());
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  K().gcd(a.data(), b.data(), out.data());
  return out;
}

bool divides(const Monomial& a, const Monomial& b) { return K().divides(a.data(), b.data()); }

bool coprime(const Monomial& a, const Monomial& b) { return K().coprime(a.data(), b.data()); }

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{a[i]} + b[i];
    if (e > std::numeric_limits<kernels::Exp>::max()) throw Error(ErrorKind::Overflow, "exponent overflow");
    out[i] = static_cast<kernels::Exp>(e);
  }
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("quotient: divisor does not divide");
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = static_cast<kernels::Exp>(a[i] - b[i]);
  return out;
}

Monomial power(const Monomial& a, unsigned t) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned long long e = static_cast<unsigned long long>(a[i]) * t;
    if (e > std::numeric_limits<kernels::Exp>::max())
      throw Error(ErrorKind::Overflow, "exponent overflow", render_exps(a));
    out[i] = static_cast<kernels::Exp>(e);
  }
  return out;
}

std::vector<std::string> default_variables(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::string to_string(const MonomialIdeal& i, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& g : i.gens) {
    if (!out.empty()) out += ',';
    out += to_string(g, vars);
  }
  return out;
}

MonomialIdeal min_gens(std::size_t nvars, std::vector<Monomial> raw) {
  std::sort(raw.begin(), raw.end(), canonical_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  MonomialIdeal out{nvars, {}};
  for (const auto& m : raw) {
    if (!out.contains(m)) out.gens.push_back(m);
  }
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  std::vector<Monomial> raw;
  raw.reserve(i.gens.size() * j.gens.size());
  for (const auto& u : i.gens)
    for (const auto& v : j.gens) raw.push_back(lcm(u, v));
  return min_gens(std::max(i.nvars, j.nvars), std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  std::vector<Monomial> raw = i.gens;
  raw.insert(raw.end(), j.gens.begin(), j.gens.end());
  return min_gens(std::max(i.nvars, j.nvars), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& u) {
  std::vector<Monomial> raw;
  raw.reserve(i.gens.size());
  for (const auto& g : i.gens) raw.push_back(quotient(g, gcd(g, u)));
  return min_gens(i.nvars, std::move(raw));
}

MonomialIdeal radical(const MonomialIdeal& i) {
  std::vector<Monomial> raw;
  raw.reserve(i.gens.size());
  for (const auto& g : i.gens) {
    Monomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) r[v] = g[v] ? 1 : 0;
    raw.push_back(r);
  }
  return min_gens(i.nvars, std::move(raw));
}

MonomialIdeal frobenius_power(const MonomialIdeal& i, unsigned t) {
  if (t == 0) throw Error(ErrorKind::PreconditionFailed, "frobenius power needs t >= 1");
  std::vector<Monomial> raw;
  raw.reserve(i.gens.size());
  for (const auto& g : i.gens) raw.push_back(power(g, t));
  return min_gens(i.nvars, std::move(raw));
}

Polarization polarize(const MonomialIdeal& i, const std::vector<std::string>& vars) {
  std::vector<unsigned> top(kMaxVars, 0);
  for (const auto& g : i.gens)
    for (std::size_t v = 0; v < kMaxVars; ++v) top[v] = std::max<unsigned>(top[v], g[v]);
  Polarization out;
  std::vector<std::size_t> first(kMaxVars, 0);
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    first[v] = out.back_map.size();
    for (unsigned k = 1; k <= top[v]; ++k) {
      if (out.back_map.size() == kMaxVars)
        throw Error(ErrorKind::Overflow, "polarization needs more than 32 variables");
      std::string base = v < vars.size() ? vars[v] : "x" + std::to_string(v + 1);
      out.vars.push_back(base + "_" + std::to_string(k));
      out.back_map.push_back(v);
    }
  }
  std::vector<Monomial> raw;
  for (const auto& g : i.gens) {
    Monomial p;
    for (std::size_t v = 0; v < kMaxVars; ++v)
      for (unsigned k = 0; k < g[v]; ++k) p[first[v] + k] = 1;
    raw.push_back(p);
  }
  out.ideal = min_gens(out.back_map.size(), std::move(raw));
  return out;
}

std::size_t height(const MonomialIdeal& i) {
  if (i.is_unit()) throw Error(ErrorKind::ImproperIdeal, "height of the unit ideal");
  if (i.gens.empty()) return 0;
  std::vector<std::uint32_t> supports;
  std::uint32_t all = 0;
  for (const auto& g : i.gens) {
    supports.push_back(g.support());
    all |= g.support();
  }
  std::vector<std::size_t> bits;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (all >> v & 1) bits.push_back(v);
  const std::size_t n = bits.size();
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack over k-subsets of the variables that occur.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < (std::uint64_t{1} << n)) {
      std::uint32_t cover = 0;
      for (std::size_t b = 0; b < n; ++b)
        if (s >> b & 1) cover |= std::uint32_t{1} << bits[b];
      if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t sp) { return sp & cover; })) return k;
      std::uint64_t c = s & (~s + 1), r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

}  // namespace semireg
