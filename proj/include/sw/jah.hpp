#pragma once

// Basis coordinates of the extension space, the explicit index set J^AH of a
// weight, and the dimension-vector description of it.

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "sw/ground.hpp"
#include "sw/serre_weight.hpp"
#include "sw/sset.hpp"

namespace sw {

struct BasisIndex {
  enum class Kind { ca, un, tr };
  Kind kind = Kind::ca;
  Int m = 0;  // only for ca
  Int k = 0;  // only for ca, in [0, f'')

  static BasisIndex ca(Int m, Int k) { return {Kind::ca, m, k}; }
  static BasisIndex un() { return {Kind::un, 0, 0}; }
  static BasisIndex tr() { return {Kind::tr, 0, 0}; }

  auto operator<=>(const BasisIndex&) const = default;
};

using IndexSet = std::set<BasisIndex>;

std::string format_index(const BasisIndex& a);

// W'_j for j in [0, e) by a direct scan of the open interval
// (j p q/(p-1), (j+1) p q/(p-1)), together with the embedding attached to each m.
class BasisTable {
 public:
  BasisTable() = default;
  explicit BasisTable(const CharacterPair& pair);

  const std::vector<std::vector<Int>>& w_prime() const { return w_prime_; }
  // Every |W'_j| equals f'.
  bool cardinality_ok() const;
  bool contains(Int m) const { return tau_m_.count(m) != 0; }
  // Smallest i < f' with m = Omega_{i,n} mod q. Errc::input when m is not in W'.
  int tau_of_m(Int m) const;
  // (tau_m - k f') mod f.
  int tau_alpha(const BasisIndex& alpha) const;
  // W' x [0, f'').
  IndexSet full_w() const;

 private:
  FieldShape shape_;
  Period period_;
  std::vector<std::vector<Int>> w_prime_;
  std::map<Int, int> tau_m_;
};

// Asserting form: Errc::invariant when some |W'_j| differs from f'.
std::vector<std::vector<Int>> w_prime_sets(const CharacterPair& pair);

// m_{i,j} = Omega_{i,n} + j q, indexed [i][j].
std::vector<std::vector<Int>> m_grid(const CharacterPair& pair);

// {m_{i,j} : i} == W'_j for every j.
bool m_grid_matches(const CharacterPair& pair, const BasisTable& basis);

struct JahData {
  JXPair jx;      // maximal witness
  STPair st;
  ExpVector r;
  ExpVector xi;   // q s_i + Omega_{i, s-t}
  std::vector<std::vector<Int>> intervals;  // I_i, ascending
  bool includes_tr = false;
};

// Errc::not_a_weight when S is empty; AmbiguityError propagates.
JahData jah_data(const CharacterPair& pair, const SerreWeight& w);

// chi cyclotomic, chi_2 unramified and r = p at every embedding.
bool tr_marker_applies(const CharacterPair& pair, const ExpVector& r);

IndexSet jah_direct(const CharacterPair& pair, const BasisTable& basis, const JahData& data);
IndexSet jah_direct(const CharacterPair& pair, const SerreWeight& w);

// l_i = x_i + [i-1 in J] for the maximal witness.
ExpVector dimension_vector(const JXPair& maximal, const FieldShape& shape);
ExpVector dimension_vector(const CharacterPair& pair, const SerreWeight& w);

// r = p, n = e, t = 0 at every embedding.
bool is_cyclotomic_exceptional(const CharacterPair& pair, const JahData& data);

// The k with tau_(m,k) = i for m = m_{i,j}: tau_m = i mod f', so k = -(i div f') mod f''.
Int k_of_embedding(const CharacterPair& pair, int i);

// Every (m, k') for each (m, k) in s; markers kept.
IndexSet saturate_k(const CharacterPair& pair, const IndexSet& s);

// {(m_{i,j}, k_of_embedding(i)) : j < l_i} plus the markers of jah_direct, or
// all of W plus markers in the cyclotomic-exceptional case. No genericity check.
IndexSet ell_rule_set(const CharacterPair& pair, const BasisTable& basis, const JahData& data);

// Errc::precondition unless weakly generic.
IndexSet jah_fast(const CharacterPair& pair, const SerreWeight& w);

}  // namespace sw
