#include "semireg/lazard/finseq.hpp"

#include <algorithm>

#include "semireg/exact/linalg.hpp"

namespace semireg {

FinSeq::FinSeq(RatVec prefix, Rational tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) { canonicalize(); }

void FinSeq::canonicalize() {
  for (auto& q : prefix_) q.canonicalize();
  tail_.canonicalize();
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Rational FinSeq::at(std::size_t i) const {
  if (i == 0) throw std::out_of_range("FinSeq indices start at 1");
  return i <= prefix_.size() ? prefix_[i - 1] : tail_;
}

RatVec FinSeq::coords(std::size_t w) const {
  RatVec out(w + 1, tail_);
  std::copy(prefix_.begin(), prefix_.end(), out.begin());
  return out;
}

FinSeq FinSeq::from_coords(const RatVec& c) {
  if (c.empty()) return FinSeq();
  return FinSeq(RatVec(c.begin(), c.end() - 1), c.back());
}

FinSeq FinSeq::with(std::size_t i, const Rational& value) const {
  RatVec c = coords(std::max(window(), i));
  c[i - 1] = value;
  return from_coords(c);
}

bool FinSeq::nonnegative() const {
  return tail_ >= 0 && std::all_of(prefix_.begin(), prefix_.end(), [](const Rational& q) { return q >= 0; });
}

namespace {

template <class Op>
FinSeq combine(const FinSeq& a, const FinSeq& b, Op op) {
  std::size_t w = std::max(a.window(), b.window());
  RatVec x = a.coords(w), y = b.coords(w);
  for (std::size_t i = 0; i <= w; ++i) x[i] = op(x[i], y[i]);
  return FinSeq::from_coords(x);
}

}  // namespace

FinSeq operator+(const FinSeq& a, const FinSeq& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

FinSeq operator-(const FinSeq& a, const FinSeq& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

FinSeq operator*(const Rational& c, const FinSeq& a) {
  RatVec x = a.coords(a.window());
  for (auto& q : x) q *= c;
  return FinSeq::from_coords(x);
}

std::string to_string(const FinSeq& a) {
  std::string out;
  for (std::size_t i = 0; i < a.window(); ++i) {
    if (i) out += ',';
    out += to_string(a.prefix()[i]);
  }
  return out + "|" + to_string(a.tail());
}

bool SupportPattern::contains(std::size_t i) const { return (i > threshold) != (exceptions.count(i) > 0); }

std::size_t SupportPattern::horizon() const {
  return exceptions.empty() ? threshold : std::max(threshold, *exceptions.rbegin());
}

SupportPattern SupportPattern::restrict_above(std::size_t l) const {
  SupportPattern out;
  out.threshold = std::max(threshold, l);
  for (auto e : exceptions)
    if (e > l) out.exceptions.insert(e);
  return out;
}

std::vector<std::size_t> SupportPattern::indices_upto(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= w; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool is_supported(const FinSeq& a, const SupportPattern& I) {
  if (a.tail() == 0) return false;
  const std::size_t last = std::max(a.window(), I.horizon());
  for (std::size_t i = 1; i <= last; ++i)
    if (I.contains(i) && a.at(i) == 0) return false;
  return true;
}

SequenceClass classify_sequence(const FinSeq& a, const SupportPattern& I) {
  return {is_supported(a, I), a.almost_nonnegative()};
}

std::size_t common_window(const std::vector<FinSeq>& seqs) {
  std::size_t w = 0;
  for (const auto& s : seqs) w = std::max(w, s.window());
  return w;
}

std::vector<RatVec> coords_of(const std::vector<FinSeq>& seqs, std::size_t w) {
  std::vector<RatVec> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(s.coords(w));
  return out;
}

std::size_t rank_of(const std::vector<FinSeq>& seqs) {
  if (seqs.empty()) return 0;
  return semireg::rank_of(coords_of(seqs, common_window(seqs)));
}

std::optional<RatVec> cone_coordinates(const std::vector<FinSeq>& gamma, const FinSeq& v) {
  std::vector<FinSeq> all = gamma;
  all.push_back(v);
  const std::size_t w = common_window(all);
  return cone_coordinates(coords_of(gamma, w), v.coords(w));
}

std::optional<RatVec> span_coordinates(const std::vector<FinSeq>& gamma, const FinSeq& v) {
  std::vector<FinSeq> all = gamma;
  all.push_back(v);
  const std::size_t w = common_window(all);
  return span_coordinates(coords_of(gamma, w), v.coords(w));
}

}  // namespace semireg
