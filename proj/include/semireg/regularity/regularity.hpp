#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semireg/monomial/complex.hpp"
#include "semireg/semigroup/affine_semigroup.hpp"

namespace semireg {

struct MonomialSequence {
  std::size_t nvars = 0;
  std::vector<Monomial> items;
};

// 1-based position j and a monomial in ((x_1..x_{j-1}) : x_j) outside (x_1..x_{j-1}).
struct ZeroDivisorWitness {
  std::size_t index = 0;
  Monomial monomial;
};

struct OracleVerdict {
  bool regular = true;
  std::optional<ZeroDivisorWitness> witness;
};

// Throws UnitEntry.
OracleVerdict oracle_regular(const MonomialSequence& s);

// Re-checks a witness: m * x_j lies in the prefix ideal and m does not.
bool verify_witness(const MonomialSequence& s, const ZeroDivisorWitness& w);

bool star_condition(const MonomialSequence& s);

struct SubsetPd {
  std::vector<std::size_t> indices;  // 1-based
  std::size_t pd = 0;
};

struct RegularityReport {
  bool oracle_regular = false;
  bool pd_criterion = false;
  bool star_condition = false;
  bool discrepancy = false;
  std::optional<ZeroDivisorWitness> witness;
  std::vector<SubsetPd> subset_pds;
  std::string weak_proregularity = "assumed (Noetherian)";
};

RegularityReport pd_criterion(const MonomialSequence& s, std::size_t cap = kDefaultGeneratorCap);

// Every prefix ideal is proper with height equal to its length.
bool is_parameter_sequence_poly(const MonomialSequence& s);

// Inapplicable when cd of the whole ideal is below the length; the witness
// lists the 1-based indices of a failing subset.
Verdict cd_subset_check(const MonomialSequence& s);

struct UnitStripping {
  PositiveSplit split;
  std::vector<Point> units;           // unit factor, ambient coordinates
  std::vector<Point> positive_parts;  // positive factor, ambient coordinates
  std::vector<Point> reduced;         // positive factor in the coordinates of C'
  std::vector<bool> pure_unit;
};

// Throws NotNormal, or PreconditionFailed for exponents outside c.
UnitStripping strip_units(const AffineSemigroup& c, const std::vector<Point>& exponents);

using FormalSum = std::map<Point, Rational>;

// Keeps the terms with exponent in sub. Throws NotFull.
FormalSum retraction(const AffineSemigroup& sub, const AffineSemigroup& sup, const FormalSum& element);

struct TransferReport {
  Verdict verdict;
  std::size_t truncations = 0;
  std::size_t sequences_checked = 0;
};

// H(n) = generators supported on the first n coordinates. Throws NotNormal
// with the truncation index in the message.
TransferReport limit_transfer_check(const std::vector<Point>& h_infty, std::size_t depth);

}  // namespace semireg
