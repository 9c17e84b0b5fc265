#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "sw/congruence.hpp"
#include "sw/packets.hpp"
#include "sw/verify.hpp"

namespace test {

inline sw::CharacterPair make_pair(sw::Int p, sw::Int f, sw::Int e, sw::ExpVector n, sw::CharacterFlags flags = {},
                                   sw::Int n2 = 0) {
  const auto shape = sw::FieldShape::make(p, f, e);
  return sw::CharacterPair(shape, sw::InertiaCharacter(shape, std::move(n)), n2, flags);
}

inline sw::CharacterFlags flags(bool trivial, bool cyc, bool inv_cyc, bool chi2_unr) {
  return sw::CharacterFlags{trivial, cyc, inv_cyc, chi2_unr};
}

inline sw::CharacterPair c1() { return make_pair(5, 2, 1, {4, 2}); }
inline sw::CharacterPair c2() { return make_pair(5, 1, 1, {2}); }
inline sw::CharacterPair c3() { return make_pair(5, 1, 2, {2}, flags(false, true, true, false)); }

inline oracle::Ctx ctx_of(const sw::CharacterPair& pair) {
  const auto& s = pair.shape();
  const auto& fl = pair.flags();
  return oracle::Ctx{s.p, s.f, s.e, pair.exponents(), pair.n2_class(),
                     fl.chi_trivial, fl.chi_cyclotomic, fl.chi_inv_cyclotomic, fl.chi2_unramified};
}

inline sw::SerreWeight to_sw(const sw::CharacterPair& pair, const oracle::Weight& w) {
  return sw::canonicalize(pair.shape(), w.a, w.b);
}

inline std::vector<sw::SerreWeight> to_sw(const sw::CharacterPair& pair, const std::vector<oracle::Weight>& ws) {
  std::vector<sw::SerreWeight> out;
  for (const auto& w : ws) out.push_back(to_sw(pair, w));
  std::sort(out.begin(), out.end());
  return out;
}

inline sw::JXPair to_sw(const oracle::JX& jx) { return sw::JXPair{sw::EmbeddingSet(jx.J), jx.x}; }

inline sw::IndexSet to_sw(const oracle::Set& s) {
  sw::IndexSet out;
  for (const auto& a : s) {
    if (a.kind == 1)
      out.insert(sw::BasisIndex::un());
    else if (a.kind == 2)
      out.insert(sw::BasisIndex::tr());
    else
      out.insert(sw::BasisIndex::ca(a.m, a.k));
  }
  return out;
}

inline oracle::Set to_oracle(const sw::IndexSet& s) {
  oracle::Set out;
  for (const auto& a : s) {
    switch (a.kind) {
      case sw::BasisIndex::Kind::un:
        out.insert({1, 0, 0});
        break;
      case sw::BasisIndex::Kind::tr:
        out.insert({2, 0, 0});
        break;
      default:
        out.insert({0, a.m, a.k});
    }
  }
  return out;
}

inline std::vector<std::string> names(const std::vector<sw::SerreWeight>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(sw::format_weight(w));
  return out;
}

// Every consistent flag choice over every normalized n, n2 = 0, for the
// given shape bounds.
template <typename Fn>
void each_pair(const std::vector<sw::Int>& primes, sw::Int max_f, sw::Int max_e, sw::Int max_ef, Fn&& fn) {
  for (sw::Int p : primes)
    for (sw::Int f = 1; f <= max_f; ++f)
      for (sw::Int e = 1; e <= max_e && e * f <= max_ef; ++e) {
        const auto shape = sw::FieldShape::make(p, f, e);
        oracle::each_vector(static_cast<int>(f), 1, p, [&](const oracle::V& n) {
          if (std::all_of(n.begin(), n.end(), [&](oracle::I x) { return x == p; })) return;
          const sw::CharacterPair base(shape, sw::InertiaCharacter(shape, n), 0);
          for (const auto& fl : sw::flag_combinations(base)) fn(base.with_flags(fl));
        });
      }
}

}  // namespace test
