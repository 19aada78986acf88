#include "semireg/exact/linalg.hpp"

#include <numeric>

#include "semireg/error.hpp"

namespace semireg {

namespace {

ZMatrix clear_row_denominators(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational scaled = m(r, c) * l;
      z(r, c) = scaled.get_num();
    }
  }
  return z;
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ZMatrix& input) {
  ZMatrix m = input;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(const QMatrix& m) { return rank(clear_row_denominators(m)); }

std::size_t rank_of(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  return rank(matrix_from_rows(rows, rows.front().size()));
}

std::size_t rank_small(const std::vector<std::int64_t>& input, std::size_t rows, std::size_t cols) {
  thread_local std::vector<std::int64_t> a;
  a.assign(input.begin(), input.end());
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(at(r, c)) * at(i, j) - static_cast<__int128>(at(i, c)) * at(r, j);
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) {
          ZMatrix z(rows, cols);
          for (std::size_t ii = 0; ii < rows; ++ii)
            for (std::size_t jj = 0; jj < cols; ++jj) z(ii, jj) = static_cast<long>(input[ii * cols + jj]);
          return rank(z);
        }
        at(i, j) = static_cast<std::int64_t>(v);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t p = c;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<RatVec> solve(const QMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::vector<RatVec> nullspace(const QMatrix& a) {
  QMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorKind::DependentGenerators, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::optional<RatVec> span_coordinates(const std::vector<RatVec>& family, const RatVec& v) {
  if (family.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return RatVec{};
  }
  QMatrix a = matrix_from_rows(family, v.size()).transpose();
  return solve(a, v);
}

std::optional<RatVec> cone_coordinates(const std::vector<RatVec>& gamma, const RatVec& v) {
  if (!gamma.empty() && rank_of(gamma) < gamma.size())
    throw Error(ErrorKind::DependentGenerators, "cone generators are linearly dependent");
  auto c = span_coordinates(gamma, v);
  if (!c) return std::nullopt;
  for (const auto& x : *c)
    if (x < 0) return std::nullopt;
  RatVec back(v.size(), Rational(0));
  for (std::size_t k = 0; k < gamma.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) back[i] += (*c)[k] * gamma[k][i];
  if (back != v) throw std::logic_error("cone_coordinates: reproduction mismatch");
  return c;
}

Point primitive(const RatVec& v) {
  Integer l = lcm_of_denominators(v);
  IntVec z;
  Integer g = 0;
  for (const auto& q : v) {
    Rational s = q * l;
    z.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  Point out;
  for (auto& x : z) out.push_back(to_int64(g == 0 ? x : Integer(x / g)));
  return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace semireg
