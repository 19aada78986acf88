#pragma once

#include "semireg/exact/matrix.hpp"

namespace semireg {

// U * m * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0, U and V unimodular.
struct SmithForm {
  ZMatrix U;
  ZMatrix D;
  ZMatrix V;

  std::size_t rank() const;
  std::vector<Integer> invariants() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const ZMatrix& m);

// Inverse of a unimodular integer matrix (exact; throws if not unimodular).
ZMatrix unimodular_inverse(const ZMatrix& m);

}  // namespace semireg
