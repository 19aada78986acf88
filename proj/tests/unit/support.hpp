#pragma once

#include <string>
#include <vector>

#include "semireg/io/parse.hpp"
#include "semireg/monomial/monomial.hpp"

namespace testing {

inline const std::vector<std::string> xyz{"x", "y", "z", "w"};

inline semireg::Monomial mono(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return semireg::parse_monomial(text, vars);
}

inline std::vector<semireg::Monomial> monos(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return semireg::parse_monomials(text, vars);
}

inline semireg::MonomialIdeal ideal(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return semireg::min_gens(vars.size(), monos(text, vars));
}

inline std::string str(const semireg::MonomialIdeal& i, const std::vector<std::string>& vars = xyz) {
  return semireg::to_string(i, vars);
}

}  // namespace testing
