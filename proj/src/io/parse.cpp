#include "semireg/io/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "semireg/error.hpp"

namespace semireg {

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(const std::string& s) {
    skip_ws();
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::int64_t integer() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    std::size_t at = position();
    Integer z(digits());
    if (neg) z = -z;
    if (!z.fits_slong_p()) throw ParseError("integer out of range", at);
    return z.get_si();
  }

  Rational rational() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start), base_ + start);
  }

  std::size_t position() const { return base_ + pos_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

 private:
  const std::string& text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::size_t variable_index(Cursor& c, const std::vector<std::string>& vars) {
  std::size_t at = c.position();
  std::string name = c.identifier();
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", at);
  return static_cast<std::size_t>(it - vars.begin());
}

Monomial monomial(Cursor& c, const std::vector<std::string>& vars) {
  std::vector<unsigned> e(vars.size(), 0);
  do {
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::size_t at = c.position();
      if (c.digits() != "1") throw ParseError("only 1 may appear as a constant", at);
      continue;
    }
    std::size_t v = variable_index(c, vars);
    unsigned long k = 1;
    if (c.accept('^')) {
      std::size_t at = c.position();
      std::string d = c.digits();
      if (d.size() > 5 || std::stoul(d) > std::numeric_limits<kernels::Exp>::max())
        throw ParseError("exponent out of range", at);
      k = std::stoul(d);
    }
    if (e[v] + k > std::numeric_limits<kernels::Exp>::max()) c.fail("exponent out of range");
    e[v] += static_cast<unsigned>(k);
  } while (c.accept('*'));
  return Monomial(e);
}

Point point(Cursor& c) {
  bool paren = c.accept('(');
  Point p{c.integer()};
  while (c.accept(',')) p.push_back(c.integer());
  if (paren) c.expect(')');
  return p;
}

FinSeq finseq(Cursor& c) {
  RatVec prefix;
  if (c.peek() != '|') {
    prefix.push_back(c.rational());
    while (c.accept(',')) prefix.push_back(c.rational());
  }
  c.expect('|');
  return FinSeq(prefix, c.rational());
}

HalfPlane clause(Cursor& c, const std::vector<std::string>& vars) {
  std::int64_t coef[2] = {0, 0};
  bool first = true;
  while (true) {
    std::int64_t sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      break;
    first = false;
    std::int64_t k = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      k = c.integer();
      if (!c.accept('*')) {
        if (k == 0 && (c.peek() == '>' || c.peek() == '\0')) c.fail("constant term in linear form");
        c.fail("expected '*'");
      }
    }
    std::size_t at = c.position();
    std::size_t v = variable_index(c, vars);
    if (v > 1) throw ParseError("cone forms take two variables", at);
    coef[v] += sign * k;
  }
  bool strict;
  if (c.accept(">="))
    strict = false;
  else if (c.accept('>'))
    strict = true;
  else
    c.fail("expected '>=' or '>'");
  std::size_t at = c.position();
  if (c.digits() != "0") throw ParseError("right-hand side must be 0", at);
  return HalfPlane::make(coef[0], coef[1], strict);
}

template <class T, class F>
std::vector<T> separated(const std::string& text, char sep, F item) {
  Cursor c(text);
  std::vector<T> out;
  if (c.done()) return out;
  do out.push_back(item(c));
  while (c.accept(sep));
  c.expect_end();
  return out;
}

}  // namespace

std::vector<std::string> parse_variables(const std::string& text) {
  Cursor c(text);
  std::vector<std::string> out;
  do {
    std::size_t at = c.position();
    std::string v = c.identifier();
    if (std::find(out.begin(), out.end(), v) != out.end()) throw ParseError("duplicate variable '" + v + "'", at);
    out.push_back(v);
  } while (c.accept(','));
  c.expect_end();
  if (out.size() > kernels::kMaxVars) throw ParseError("too many variables", 0);
  return out;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Cursor c(text);
  Monomial m = monomial(c, vars);
  c.expect_end();
  return m;
}

std::vector<Monomial> parse_monomials(const std::string& text, const std::vector<std::string>& vars) {
  return separated<Monomial>(text, ',', [&](Cursor& c) { return monomial(c, vars); });
}

Point parse_point(const std::string& text) {
  Cursor c(text);
  Point p = point(c);
  c.expect_end();
  return p;
}

std::vector<Point> parse_points(const std::string& text) { return separated<Point>(text, ';', point); }

QuasiRationalCone parse_cone(const std::string& text, const std::vector<std::string>& vars) {
  Cursor c(text);
  QuasiRationalCone out;
  out.l1 = clause(c, vars);
  c.expect('&');
  out.l2 = clause(c, vars);
  c.expect_end();
  return out;
}

std::string to_string(const HalfPlane& h, const std::vector<std::string>& vars) {
  std::string out;
  auto term = [&](std::int64_t k, const std::string& v) {
    if (k == 0) return;
    if (k < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::int64_t a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a) + "*";
    out += v;
  };
  term(h.a, vars[0]);
  term(h.b, vars[1]);
  return out + (h.strict ? " > 0" : " >= 0");
}

std::string to_string(const QuasiRationalCone& c, const std::vector<std::string>& vars) {
  return to_string(c.l1, vars) + " & " + to_string(c.l2, vars);
}

FinSeq parse_finseq(const std::string& text) {
  Cursor c(text);
  FinSeq s = finseq(c);
  c.expect_end();
  return s;
}

std::vector<FinSeq> parse_finseqs(const std::string& text) { return separated<FinSeq>(text, ';', finseq); }

std::set<std::size_t> parse_index_set(const std::string& text) {
  std::set<std::size_t> out;
  for (auto v : separated<std::int64_t>(text, ',', [](Cursor& c) {
         std::size_t at = c.position();
         std::int64_t v = c.integer();
         if (v < 1) throw ParseError("indices are 1-based", at);
         return v;
       }))
    out.insert(static_cast<std::size_t>(v));
  return out;
}

}  // namespace semireg
