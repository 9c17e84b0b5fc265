#pragma once

// Serre weights sigma_{a,b} stored in canonical form: b_i in [0, p-1] with not
// every b_i equal to p-1, and a = b + (a - b) with a_i - b_i in [0, p-1].

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sw/ground.hpp"

namespace sw {

struct SerreWeight {
  FieldShape shape;
  ExpVector a;
  ExpVector b;

  // r_i = a_i - b_i + 1
  ExpVector r() const;
  // a_i - b_i
  ExpVector diff() const;
  Int b_class() const { return omega_class(shape, b, 0); }

  auto operator<=>(const SerreWeight&) const = default;
};

// Canonical representative; throws Errc::input when some a_i - b_i is outside [0, p-1].
SerreWeight canonicalize(const FieldShape& shape, const ExpVector& a, const ExpVector& b);

// The canonical weight with the given a - b and b-class sum_i b_i p^i mod q.
SerreWeight weight_from_diff(const FieldShape& shape, const ExpVector& diff, Int b_class);

bool weights_isomorphic(const SerreWeight& lhs, const SerreWeight& rhs);

// Number of isomorphism classes, p^f (p^f - 1).
Int weight_count(const FieldShape& shape);

inline constexpr Int kDefaultWeightBudget = 5'000'000;

// Visits each isomorphism class once in canonical form. Refuses with
// Errc::budget when p^{2f} exceeds the budget.
void for_each_weight(const FieldShape& shape, Int budget, const std::function<void(const SerreWeight&)>& visit);
std::vector<SerreWeight> enumerate_weights(const FieldShape& shape, Int budget = kDefaultWeightBudget);

// "a0,...,a_{f-1}/b0,...,b_{f-1}"
std::string format_weight(const SerreWeight& w);
SerreWeight parse_weight(const FieldShape& shape, std::string_view text);

ExpVector parse_csv(std::string_view text, std::string_view what);

}  // namespace sw
