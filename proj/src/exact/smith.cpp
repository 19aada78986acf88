#include "semireg/exact/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "semireg/exact/linalg.hpp"

namespace semireg {

namespace {

void add_row(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
void add_col(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const ZMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  ZMatrix D = m;
  ZMatrix U = ZMatrix::identity(rows);
  ZMatrix V = ZMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = floor_div(D(i, t), D(t, t));
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = floor_div(D(t, j), D(t, t));
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull an offending row into the pivot row and retry
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row(D, t, i, 1);
            add_row(U, t, i, 1);
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < rows; ++c) U(t, c) = -U(t, c);
    }
  }
  return SmithForm{std::move(U), std::move(D), std::move(V)};
}

ZMatrix unimodular_inverse(const ZMatrix& m) {
  QMatrix inv = inverse(to_rational(m));
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (inv(r, c).get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      out(r, c) = inv(r, c).get_num();
    }
  return out;
}

}  // namespace semireg
