#pragma once

// Witness pairs (J, x) certifying membership of a weight in the semisimple
// weight set, the preorder on them and the unique maximal witness.

#include <compare>
#include <optional>
#include <vector>

#include "sw/ground.hpp"
#include "sw/serre_weight.hpp"

namespace sw {

struct JXPair {
  EmbeddingSet J;
  ExpVector x;  // x_i in [0, e-1]

  auto operator<=>(const JXPair&) const = default;
};

struct STPair {
  ExpVector s;
  ExpVector t;

  auto operator<=>(const STPair&) const = default;
};

// s_i = r_i + x_i on J and x_i off J; t_i = a_i - b_i + e - s_i.
ExpVector s_of(const JXPair& jx, const SerreWeight& w);
ExpVector t_of(const JXPair& jx, const SerreWeight& w);

// Both inertia congruences at the base embedding.
bool in_sset(const CharacterPair& pair, const SerreWeight& w, const JXPair& jx);

inline constexpr Int kDefaultPairBudget = 1'000'000;

// All 2^f e^f candidate pairs, in increasing (J, x) order.
std::vector<JXPair> all_jx_pairs(const FieldShape& shape, Int budget = kDefaultPairBudget);

std::vector<JXPair> enumerate_sset(const CharacterPair& pair, const SerreWeight& w,
                                   Int budget = kDefaultPairBudget);

// Omega_{i, s(other) - s(jx)} in (p^f - 1) Z_{>=0} for every i.
bool order_leq(const JXPair& jx, const JXPair& other, const SerreWeight& w);

class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<JXPair> candidates)
      : Error(Errc::ambiguity, what), candidates_(std::move(candidates)) {}
  const std::vector<JXPair>& candidates() const { return candidates_; }

 private:
  std::vector<JXPair> candidates_;
};

// Empty when S is empty. Throws AmbiguityError when no unique element
// dominates all of S (its candidates are the dominating elements, or all of S
// when none dominates).
std::optional<JXPair> maximal_element(const std::vector<JXPair>& sset, const SerreWeight& w);
std::optional<JXPair> maximal_element(const CharacterPair& pair, const SerreWeight& w);

STPair jx_to_st(const JXPair& jx, const SerreWeight& w);
// J = {t_i <= e-1}; x = s off J and s - r on J. Throws Errc::input when x leaves [0, e-1].
JXPair st_to_jx(const STPair& st, const SerreWeight& w);

// J of the maximal witness equals {i : t_i < r_i}.
bool j_equals_t_less_r(const JXPair& maximal, const SerreWeight& w);

}  // namespace sw
