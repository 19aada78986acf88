#include "semireg/exact/matrix.hpp"

namespace semireg {

QMatrix matrix_from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ZMatrix matrix_from_points(const std::vector<Point>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = m(r, c);
  return q;
}

std::string to_string(const ZMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace semireg
