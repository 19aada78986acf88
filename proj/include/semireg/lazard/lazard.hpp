#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semireg/exact/matrix.hpp"
#include "semireg/lazard/finseq.hpp"
#include "semireg/semigroup/affine_semigroup.hpp"

namespace semireg {

struct IndependentFamily {
  std::vector<FinSeq> members;
  SupportPattern support;
};

struct FamilyCheck {
  bool independent = false;
  bool supported = false;
  bool almost_nonneg = false;
  bool nonneg = false;
  std::vector<bool> recovered;  // per declared input
  bool ok(bool require_nonneg) const;
};

FamilyCheck check_family(const IndependentFamily& f, const std::vector<FinSeq>& inputs);

struct SplitResult {
  FinSeq beta_prime;
  IndependentFamily gamma;
};

// betas = beta_m..beta_n with alpha = beta_m + ... + beta_{n-1} - beta_n.
SplitResult split_off(const std::vector<FinSeq>& betas, const SupportPattern& I);

// alpha = sum eta_i beta_i - beta_n; eta has one flag per beta_1..beta_{n-1}.
IndependentFamily resolve_one_negative(const std::vector<FinSeq>& betas, const std::vector<bool>& eta,
                                       const SupportPattern& I);

IndependentFamily resolve(const std::vector<FinSeq>& betas, const FinSeq& alpha, const SupportPattern& I);

IndependentFamily adjoin_closure(const std::vector<FinSeq>& betas, const SupportPattern& I);

enum class MixedRoute { Independent, Contained, Nonnegative, Split, Shear };
const char* route_name(MixedRoute r);

IndependentFamily extend_mixed(const std::vector<FinSeq>& betas, const FinSeq& alpha, const SupportPattern& I,
                               MixedRoute* route = nullptr);

struct DirectSystem {
  std::vector<IndependentFamily> families;
  std::vector<ZMatrix> transitions;  // [n] : coordinates of family n in family n+1, one column per member
};

DirectSystem build_direct_system(const std::vector<FinSeq>& points, const SupportPattern& I, std::size_t depth);

// Nonnegative integer coordinates of v over the family, or nullopt.
std::optional<std::vector<Integer>> integer_coordinates(const IndependentFamily& f, const FinSeq& v);

struct FullEmbedding {
  std::vector<AffineSemigroup> stages;
  std::vector<Point> functionals;  // prefix coordinate k is functionals[k](h)
  Point tail_functional;
  std::vector<FinSeq> images;  // one per generator of h
  SupportPattern support;
  Verdict certificate;
};

// Throws NotPositive, NotNormal.
FullEmbedding embed_full(const AffineSemigroup& h, std::size_t depth, std::int64_t box = 10);

// Image of an arbitrary point under the embedding built for `e`.
FinSeq embed_point(const FullEmbedding& e, const Point& p);

}  // namespace semireg
