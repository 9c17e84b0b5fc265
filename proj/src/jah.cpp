#include "sw/jah.hpp"

#include <algorithm>

namespace sw {

std::string format_index(const BasisIndex& a) {
  switch (a.kind) {
    case BasisIndex::Kind::un:
      return "un";
    case BasisIndex::Kind::tr:
      return "tr";
    default:
      return std::to_string(a.m) + ":" + std::to_string(a.k);
  }
}

BasisTable::BasisTable(const CharacterPair& pair) : shape_(pair.shape()), period_(pair.period()) {
  const FieldShape& s = shape_;
  std::map<Int, int> class_to_tau;
  for (int i = 0; i < period_.length; ++i) class_to_tau.emplace(floor_mod(pair.omega_n(i), s.q), i);
  const Int width = checked_mul(s.p, s.repunit());
  w_prime_.resize(static_cast<std::size_t>(s.e));
  for (Int j = 0; j < s.e; ++j) {
    auto& bucket = w_prime_[static_cast<std::size_t>(j)];
    const Int lo = checked_mul(j, width);
    const Int hi = checked_add(lo, width);
    for (Int m = lo + 1; m < hi; ++m) {
      if (m % s.p == 0) continue;
      auto it = class_to_tau.find(floor_mod(m, s.q));
      if (it == class_to_tau.end()) continue;
      bucket.push_back(m);
      tau_m_.emplace(m, it->second);
    }
  }
}

bool BasisTable::cardinality_ok() const {
  return std::all_of(w_prime_.begin(), w_prime_.end(),
                     [&](const auto& b) { return static_cast<int>(b.size()) == period_.length; });
}

int BasisTable::tau_of_m(Int m) const {
  auto it = tau_m_.find(m);
  if (it == tau_m_.end()) fail(Errc::input, "m=" + std::to_string(m) + " is not in W'");
  return it->second;
}

int BasisTable::tau_alpha(const BasisIndex& alpha) const {
  if (alpha.kind != BasisIndex::Kind::ca) fail(Errc::input, "markers carry no embedding");
  if (alpha.k < 0 || alpha.k >= period_.repeats)
    fail(Errc::input, "k=" + std::to_string(alpha.k) + " outside [0, f'')");
  return static_cast<int>(floor_mod(tau_of_m(alpha.m) - alpha.k * period_.length, shape_.f));
}

IndexSet BasisTable::full_w() const {
  IndexSet out;
  for (const auto& bucket : w_prime_)
    for (Int m : bucket)
      for (Int k = 0; k < period_.repeats; ++k) out.insert(BasisIndex::ca(m, k));
  return out;
}

std::vector<std::vector<Int>> w_prime_sets(const CharacterPair& pair) {
  BasisTable basis(pair);
  if (!basis.cardinality_ok())
    fail(Errc::invariant, "some |W'_j| differs from f'=" + std::to_string(pair.period().length) +
                              " for n=" + format_vector(pair.exponents()));
  return basis.w_prime();
}

std::vector<std::vector<Int>> m_grid(const CharacterPair& pair) {
  const FieldShape& s = pair.shape();
  std::vector<std::vector<Int>> grid(static_cast<std::size_t>(s.f), std::vector<Int>(static_cast<std::size_t>(s.e)));
  for (int i = 0; i < s.degree(); ++i)
    for (Int j = 0; j < s.e; ++j)
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = checked_add(pair.omega_n(i), checked_mul(j, s.q));
  return grid;
}

bool m_grid_matches(const CharacterPair& pair, const BasisTable& basis) {
  const auto grid = m_grid(pair);
  for (Int j = 0; j < pair.shape().e; ++j) {
    std::set<Int> column;
    for (const auto& row : grid) column.insert(row[static_cast<std::size_t>(j)]);
    const auto& bucket = basis.w_prime()[static_cast<std::size_t>(j)];
    if (column != std::set<Int>(bucket.begin(), bucket.end())) return false;
  }
  return true;
}

JahData jah_data(const CharacterPair& pair, const SerreWeight& w) {
  const FieldShape& s = pair.shape();
  auto maximal = maximal_element(pair, w);
  if (!maximal) fail(Errc::not_a_weight, format_weight(w) + " has no witness pair");
  JahData d;
  d.jx = *maximal;
  d.st = jx_to_st(d.jx, w);
  d.r = w.r();
  ExpVector diff(d.st.s.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = d.st.s[i] - d.st.t[i];
  d.xi.resize(diff.size());
  d.intervals.resize(diff.size());
  for (int i = 0; i < s.degree(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    d.xi[u] = checked_add(checked_mul(s.q, d.st.s[u]), omega_sum(s, diff, i));
    std::set<Int> interval;
    if (d.jx.J.contains(i)) {
      interval.insert(d.st.t[u]);
      for (Int c = d.r[u]; c < d.st.s[u]; ++c) interval.insert(c);
    } else {
      for (Int c = 0; c < d.st.s[u]; ++c) interval.insert(c);
    }
    d.intervals[u].assign(interval.begin(), interval.end());
  }
  d.includes_tr = tr_marker_applies(pair, d.r);
  return d;
}

bool tr_marker_applies(const CharacterPair& pair, const ExpVector& r) {
  return pair.flags().chi_cyclotomic && pair.flags().chi2_unramified &&
         std::all_of(r.begin(), r.end(), [&](Int v) { return v == pair.shape().p; });
}

namespace {

void add_markers(const CharacterPair& pair, const JahData& data, IndexSet& out) {
  if (pair.flags().chi_trivial) out.insert(BasisIndex::un());
  if (data.includes_tr) out.insert(BasisIndex::tr());
}

}  // namespace

IndexSet jah_direct(const CharacterPair& pair, const BasisTable& basis, const JahData& data) {
  const FieldShape& s = pair.shape();
  IndexSet out;
  for (int i = 0; i < s.degree(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    for (Int d : data.intervals[u]) {
      const Int rhs = checked_sub(data.xi[u], checked_mul(d, s.q));
      if (rhs <= 0) continue;
      const Int j = p_adic_valuation(s, rhs);
      const Int m = rhs / s.power(static_cast<int>(j));
      if (!basis.contains(m)) continue;
      const int target = static_cast<int>((i + j) % s.f);
      for (Int k = 0; k < pair.period().repeats; ++k) {
        const BasisIndex alpha = BasisIndex::ca(m, k);
        if (basis.tau_alpha(alpha) == target) out.insert(alpha);
      }
    }
  }
  add_markers(pair, data, out);
  return out;
}

IndexSet jah_direct(const CharacterPair& pair, const SerreWeight& w) {
  return jah_direct(pair, BasisTable(pair), jah_data(pair, w));
}

Int k_of_embedding(const CharacterPair& pair, int i) {
  const Period& per = pair.period();
  return floor_mod(-(i / per.length), per.repeats);
}

IndexSet saturate_k(const CharacterPair& pair, const IndexSet& s) {
  IndexSet out;
  for (const auto& a : s) {
    if (a.kind != BasisIndex::Kind::ca) {
      out.insert(a);
      continue;
    }
    for (Int k = 0; k < pair.period().repeats; ++k) out.insert(BasisIndex::ca(a.m, k));
  }
  return out;
}

ExpVector dimension_vector(const JXPair& maximal, const FieldShape& shape) {
  ExpVector ell(maximal.x.size());
  for (int i = 0; i < shape.degree(); ++i)
    ell[static_cast<std::size_t>(i)] = maximal.x[static_cast<std::size_t>(i)] + (maximal.J.contains(shape.prev(i)) ? 1 : 0);
  return ell;
}

ExpVector dimension_vector(const CharacterPair& pair, const SerreWeight& w) {
  auto maximal = maximal_element(pair, w);
  if (!maximal) fail(Errc::not_a_weight, format_weight(w) + " has no witness pair");
  return dimension_vector(*maximal, pair.shape());
}

bool is_cyclotomic_exceptional(const CharacterPair& pair, const JahData& data) {
  const FieldShape& s = pair.shape();
  for (int i = 0; i < s.degree(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (data.r[u] != s.p || pair.exponents()[u] != s.e || data.st.t[u] != 0) return false;
  }
  return true;
}

IndexSet ell_rule_set(const CharacterPair& pair, const BasisTable& basis, const JahData& data) {
  IndexSet out;
  if (is_cyclotomic_exceptional(pair, data)) {
    out = basis.full_w();
  } else {
    const auto grid = m_grid(pair);
    const ExpVector ell = dimension_vector(data.jx, pair.shape());
    for (int i = 0; i < pair.shape().degree(); ++i)
      for (Int j = 0; j < ell[static_cast<std::size_t>(i)]; ++j)
        out.insert(BasisIndex::ca(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], k_of_embedding(pair, i)));
  }
  add_markers(pair, data, out);
  return out;
}

IndexSet jah_fast(const CharacterPair& pair, const SerreWeight& w) {
  if (!pair.weakly_generic())
    fail(Errc::precondition, "n=" + format_vector(pair.exponents()) + " is not weakly generic");
  return ell_rule_set(pair, BasisTable(pair), jah_data(pair, w));
}

}  // namespace sw
