#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semireg/exact/rational.hpp"

namespace semireg {

// Rational sequence a_1, a_2, ... equal to `tail` beyond the prefix.
class FinSeq {
 public:
  FinSeq() = default;
  FinSeq(RatVec prefix, Rational tail);
  static FinSeq constant(const Rational& value) { return FinSeq({}, value); }

  const RatVec& prefix() const { return prefix_; }
  const Rational& tail() const { return tail_; }
  std::size_t window() const { return prefix_.size(); }

  Rational at(std::size_t i) const;  // 1-based
  // (a_1, ..., a_w, tail) for w >= window(); the span of these vectors over a
  // common w is the span of the sequences.
  RatVec coords(std::size_t w) const;
  static FinSeq from_coords(const RatVec& c);

  FinSeq with(std::size_t i, const Rational& value) const;

  bool is_zero() const { return prefix_.empty() && tail_ == 0; }
  bool nonnegative() const;
  bool almost_nonnegative() const { return tail_ >= 0; }

  friend FinSeq operator+(const FinSeq& a, const FinSeq& b);
  friend FinSeq operator-(const FinSeq& a, const FinSeq& b);
  friend FinSeq operator*(const Rational& c, const FinSeq& a);
  friend bool operator==(const FinSeq& a, const FinSeq& b) { return a.prefix_ == b.prefix_ && a.tail_ == b.tail_; }

 private:
  void canonicalize();

  RatVec prefix_;
  Rational tail_ = 0;
};

// "p1,p2,...|tail"; an empty prefix is "|tail".
std::string to_string(const FinSeq& a);

// I = {i > threshold} xor exceptions.
struct SupportPattern {
  std::size_t threshold = 0;
  std::set<std::size_t> exceptions;

  static SupportPattern all() { return {}; }
  bool contains(std::size_t i) const;
  // Every index beyond the horizon belongs to I.
  std::size_t horizon() const;
  SupportPattern restrict_above(std::size_t l) const;  // I intersected with (l, infinity)
  std::vector<std::size_t> indices_upto(std::size_t w) const;
};

struct SequenceClass {
  bool supported = false;
  bool almost_nonneg = false;
};

SequenceClass classify_sequence(const FinSeq& a, const SupportPattern& I);
bool is_supported(const FinSeq& a, const SupportPattern& I);

std::size_t common_window(const std::vector<FinSeq>& seqs);
std::vector<RatVec> coords_of(const std::vector<FinSeq>& seqs, std::size_t w);
std::size_t rank_of(const std::vector<FinSeq>& seqs);

std::optional<RatVec> cone_coordinates(const std::vector<FinSeq>& gamma, const FinSeq& v);
std::optional<RatVec> span_coordinates(const std::vector<FinSeq>& gamma, const FinSeq& v);

}  // namespace semireg
