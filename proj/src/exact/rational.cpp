#include "semireg/exact/rational.hpp"

#include <cctype>
#include <limits>

#include "semireg/error.hpp"

namespace semireg {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

Rational parse_rational(const std::string& text, std::size_t offset) {
  std::size_t i = 0;
  auto digits = [&](std::string& into) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) into += text[i++];
    if (i == start) throw ParseError("expected digits", offset + i);
  };
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num += '-';
    ++i;
  }
  digits(num);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    digits(den);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", offset + i);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator", offset + i);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Integer lcm_of_denominators(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RatVec to_rational(const Point& p) {
  RatVec out;
  out.reserve(p.size());
  for (auto x : p) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer exceeds 64 bits", z.get_str());
  return z.get_si();
}

}  // namespace semireg
