#pragma once

#include <set>
#include <string>
#include <vector>

#include "semireg/lazard/finseq.hpp"
#include "semireg/monomial/monomial.hpp"
#include "semireg/plane/plane_cones.hpp"

namespace semireg {

// All parsers throw ParseError with a 0-based offset into the input text.

std::vector<std::string> parse_variables(const std::string& text);

// "x^2*y", "1" for the unit.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars);
// Comma-separated monomials, kept in input order.
std::vector<Monomial> parse_monomials(const std::string& text, const std::vector<std::string>& vars);

// "1,0" or "(1,0)".
Point parse_point(const std::string& text);
// Points separated by ';'.
std::vector<Point> parse_points(const std::string& text);

// "a*x+b*y >= 0 & c*x+d*y > 0".
QuasiRationalCone parse_cone(const std::string& text, const std::vector<std::string>& vars = {"x", "y"});
std::string to_string(const HalfPlane& h, const std::vector<std::string>& vars = {"x", "y"});
std::string to_string(const QuasiRationalCone& c, const std::vector<std::string>& vars = {"x", "y"});

// "p1,p2,...|tail".
FinSeq parse_finseq(const std::string& text);
// Sequences separated by ';'.
std::vector<FinSeq> parse_finseqs(const std::string& text);

// "1,3,5".
std::set<std::size_t> parse_index_set(const std::string& text);

}  // namespace semireg
