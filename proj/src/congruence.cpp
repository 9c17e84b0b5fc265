#include "sw/congruence.hpp"

#include <algorithm>

namespace sw {

ExpVector delta_J(const FieldShape& shape, ExpVector y, int i, EmbeddingSet J) {
  const auto at = [&](int k) -> Int& { return y[static_cast<std::size_t>(k)]; };
  const int next = shape.next(i);
  const Int carry = J.contains(next) ? 1 : -1;
  if (at(i) <= 0) {
    at(i) += shape.p;
    at(next) += carry;
  } else if (at(i) > shape.p) {
    at(i) -= shape.p;
    at(next) += carry;
  }
  return y;
}

ExpVector initial_vector(const FieldShape& shape, EmbeddingSet J, const ExpVector& c) {
  ExpVector y(c.size());
  for (int i = 0; i < shape.degree(); ++i) {
    const Int ci = c[static_cast<std::size_t>(i)];
    const bool in = J.contains(i);
    const bool prev_in = J.contains(shape.prev(i));
    Int v;
    if (in)
      v = prev_in ? ci : ci + 1;
    else
      v = prev_in ? shape.p - ci : shape.p - 1 - ci;
    y[static_cast<std::size_t>(i)] = v;
  }
  return y;
}

std::vector<int> admissible_starts(const FieldShape& shape, EmbeddingSet J, const ExpVector& c) {
  const ExpVector y0 = initial_vector(shape, J, c);
  std::vector<int> out;
  for (int i = 0; i < shape.degree(); ++i)
    if (y0[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

namespace {

void require_target(const FieldShape& shape, const ExpVector& c) {
  if (static_cast<Int>(c.size()) != shape.f) fail(Errc::input, "c needs length f=" + std::to_string(shape.f));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 1 || c[i] > shape.p - 1)
      fail(Errc::precondition, "c_" + std::to_string(i) + "=" + std::to_string(c[i]) + " outside [1, p-1]");
}

}  // namespace

ExpVector r_of(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, std::optional<int> start) {
  require_target(shape, c);
  ExpVector y = initial_vector(shape, J, c);
  const bool positive = std::all_of(y.begin(), y.end(), [](Int v) { return v > 0; });
  if (positive) {
    if (start) fail(Errc::input, "no start embedding applies: y_0 has no zero entry");
    return y;
  }
  int tau0;
  if (start) {
    if (*start < 0 || *start >= shape.degree() || y[static_cast<std::size_t>(*start)] != 0)
      fail(Errc::input, "start embedding " + std::to_string(*start) + " is not a zero of y_0");
    tau0 = *start;
  } else {
    tau0 = static_cast<int>(std::find(y.begin(), y.end(), Int{0}) - y.begin());
  }
  for (int k = 0; k < shape.degree(); ++k) y = delta_J(shape, std::move(y), (tau0 + k) % shape.degree(), J);
  return y;
}

ExpVector congruence_target(const CharacterPair& pair, const JXPair& jx) {
  const Int e = pair.shape().e;
  ExpVector c(jx.x.size());
  for (int i = 0; i < pair.shape().degree(); ++i)
    c[static_cast<std::size_t>(i)] = pair.n()[i] + e - 1 - 2 * jx.x[static_cast<std::size_t>(i)];
  return c;
}

ExpVector r_of_jx(const CharacterPair& pair, const JXPair& jx) {
  return r_of(pair.shape(), jx.J, congruence_target(pair, jx));
}

bool solves_congruence(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, const ExpVector& r) {
  ExpVector signed_r(r.size());
  for (int i = 0; i < shape.degree(); ++i)
    signed_r[static_cast<std::size_t>(i)] = J.contains(i) ? r[static_cast<std::size_t>(i)] : -r[static_cast<std::size_t>(i)];
  return floor_mod(omega_sum(shape, signed_r, 0) - omega_sum(shape, c, 0), shape.q) == 0;
}

std::vector<ExpVector> brute_solutions(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, Int budget) {
  const Int count = checked_pow(shape.p, shape.f);
  if (count > budget)
    fail(Errc::budget, "congruence scan needs p^f=" + std::to_string(count) + " > budget " + std::to_string(budget));
  std::vector<ExpVector> out;
  ExpVector r(static_cast<std::size_t>(shape.f));
  for (Int code = 0; code < count; ++code) {
    Int k = code;
    for (auto& ri : r) {
      ri = k % shape.p + 1;
      k /= shape.p;
    }
    if (solves_congruence(shape, J, c, r)) out.push_back(r);
  }
  return out;
}

ExceptionalConfig exceptional_config(const CharacterPair& pair, const JXPair& jx) {
  const FieldShape& s = pair.shape();
  const auto& n = pair.exponents();
  const auto all = [&](auto pred) {
    for (int i = 0; i < s.degree(); ++i)
      if (!pred(i)) return false;
    return true;
  };
  if (jx.J == EmbeddingSet::full(s.degree()) &&
      all([&](int i) { return n[static_cast<std::size_t>(i)] == s.e && jx.x[static_cast<std::size_t>(i)] == s.e - 1; }))
    return ExceptionalConfig::full_set;
  if (jx.J.empty() &&
      all([&](int i) { return n[static_cast<std::size_t>(i)] == s.p - 1 - s.e && jx.x[static_cast<std::size_t>(i)] == 0; }))
    return ExceptionalConfig::empty_set;
  return ExceptionalConfig::none;
}

}  // namespace sw
