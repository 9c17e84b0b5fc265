#pragma once

// Explicit solution of the signed congruence
//   sum_i (-1)^{[i not in J]} r_{i} p^i = Omega_{0,c}  (mod p^f - 1),  r_i in [1, p],
// by the carry-propagating step function delta_J, plus an exhaustive oracle.

#include <optional>
#include <vector>

#include "sw/ground.hpp"
#include "sw/sset.hpp"

namespace sw {

// One carry step at index i. In-range entries are left alone; an entry <= 0
// gains p, an entry > p loses p, and in both cases the successor moves by -1
// (successor outside J) or +1 (successor in J). For f = 1 both updates hit the
// same entry and are applied in that order.
ExpVector delta_J(const FieldShape& shape, ExpVector y, int i, EmbeddingSet J);

// The starting vector y_0 keyed on membership of i and i-1 in J.
ExpVector initial_vector(const FieldShape& shape, EmbeddingSet J, const ExpVector& c);

// Indices where y_0 vanishes (the admissible starting embeddings).
std::vector<int> admissible_starts(const FieldShape& shape, EmbeddingSet J, const ExpVector& c);

// Requires c_i in [1, p-1]. The start defaults to the smallest admissible
// index; an explicit start must be admissible (Errc::input otherwise).
ExpVector r_of(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, std::optional<int> start = std::nullopt);

// c_i = n_i + e - 1 - 2 x_i.
ExpVector congruence_target(const CharacterPair& pair, const JXPair& jx);

// r_of(J, n + e - 1 - 2x); Errc::precondition naming the index when c leaves [1, p-1].
ExpVector r_of_jx(const CharacterPair& pair, const JXPair& jx);

bool solves_congruence(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, const ExpVector& r);

inline constexpr Int kDefaultSolutionBudget = 10'000'000;

// Every r in [1, p]^f solving the congruence, in lexicographic order of the
// little-endian code.
std::vector<ExpVector> brute_solutions(const FieldShape& shape, EmbeddingSet J, const ExpVector& c,
                                       Int budget = kDefaultSolutionBudget);

// The two configurations in which an all-p difference vector is admissible
// beside r(J, x).
enum class ExceptionalConfig { none, full_set, empty_set };

ExceptionalConfig exceptional_config(const CharacterPair& pair, const JXPair& jx);

}  // namespace sw
