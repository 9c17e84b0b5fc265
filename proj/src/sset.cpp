#include "sw/sset.hpp"

namespace sw {

ExpVector s_of(const JXPair& jx, const SerreWeight& w) {
  ExpVector s(jx.x.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] = jx.J.contains(static_cast<int>(i)) ? w.a[i] - w.b[i] + 1 + jx.x[i] : jx.x[i];
  return s;
}

ExpVector t_of(const JXPair& jx, const SerreWeight& w) {
  ExpVector t = s_of(jx, w);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = w.a[i] - w.b[i] + w.shape.e - t[i];
  return t;
}

bool in_sset(const CharacterPair& pair, const SerreWeight& w, const JXPair& jx) {
  const FieldShape& s = pair.shape();
  ExpVector u(w.a.size());
  ExpVector v(w.a.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (jx.J.contains(static_cast<int>(i))) {
      u[i] = w.a[i] + 1 + jx.x[i];
      v[i] = w.b[i] + s.e - 1 - jx.x[i];
    } else {
      u[i] = w.b[i] + jx.x[i];
      v[i] = w.a[i] + s.e - jx.x[i];
    }
  }
  return omega_class(s, u, 0) == pair.chi1_class() && omega_class(s, v, 0) == pair.n2_class();
}

std::vector<JXPair> all_jx_pairs(const FieldShape& shape, Int budget) {
  const Int count = checked_mul(checked_pow(2, shape.f), checked_pow(shape.e, shape.f));
  if (count > budget)
    fail(Errc::budget, "witness scan needs 2^f e^f=" + std::to_string(count) + " > budget " + std::to_string(budget));
  std::vector<JXPair> out;
  out.reserve(static_cast<std::size_t>(count));
  const Int ef = checked_pow(shape.e, shape.f);
  for (std::uint32_t bits = 0; bits < (1u << shape.f); ++bits) {
    for (Int code = 0; code < ef; ++code) {
      JXPair jx{EmbeddingSet(bits), ExpVector(static_cast<std::size_t>(shape.f))};
      Int c = code;
      for (auto& xi : jx.x) {
        xi = c % shape.e;
        c /= shape.e;
      }
      out.push_back(std::move(jx));
    }
  }
  return out;
}

std::vector<JXPair> enumerate_sset(const CharacterPair& pair, const SerreWeight& w, Int budget) {
  std::vector<JXPair> out;
  for (auto& jx : all_jx_pairs(pair.shape(), budget))
    if (in_sset(pair, w, jx)) out.push_back(std::move(jx));
  return out;
}

bool order_leq(const JXPair& jx, const JXPair& other, const SerreWeight& w) {
  const ExpVector s = s_of(jx, w);
  const ExpVector s2 = s_of(other, w);
  ExpVector d(s.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = s2[i] - s[i];
  for (int i = 0; i < w.shape.degree(); ++i) {
    const Int om = omega_sum(w.shape, d, i);
    if (om < 0 || om % w.shape.q != 0) return false;
  }
  return true;
}

std::optional<JXPair> maximal_element(const std::vector<JXPair>& sset, const SerreWeight& w) {
  if (sset.empty()) return std::nullopt;
  std::vector<JXPair> dominating;
  for (const auto& cand : sset) {
    bool top = true;
    for (const auto& other : sset) {
      if (!order_leq(other, cand, w)) {
        top = false;
        break;
      }
    }
    if (top) dominating.push_back(cand);
  }
  if (dominating.size() == 1) return dominating.front();
  if (dominating.empty())
    throw AmbiguityError("no element of S dominates every other (" + std::to_string(sset.size()) + " witnesses)", sset);
  throw AmbiguityError(std::to_string(dominating.size()) + " witnesses dominate S", std::move(dominating));
}

std::optional<JXPair> maximal_element(const CharacterPair& pair, const SerreWeight& w) {
  return maximal_element(enumerate_sset(pair, w), w);
}

STPair jx_to_st(const JXPair& jx, const SerreWeight& w) { return {s_of(jx, w), t_of(jx, w)}; }

JXPair st_to_jx(const STPair& st, const SerreWeight& w) {
  const Int e = w.shape.e;
  const ExpVector r = w.r();
  JXPair jx{EmbeddingSet{}, ExpVector(st.s.size())};
  for (std::size_t i = 0; i < st.s.size(); ++i) {
    if (st.t[i] <= e - 1) {
      jx.J = jx.J.with(static_cast<int>(i));
      jx.x[i] = st.s[i] - r[i];
    } else {
      jx.x[i] = st.s[i];
    }
    if (jx.x[i] < 0 || jx.x[i] > e - 1)
      fail(Errc::input, "(s,t) gives x_" + std::to_string(i) + "=" + std::to_string(jx.x[i]) + " outside [0, e-1]");
  }
  return jx;
}

bool j_equals_t_less_r(const JXPair& maximal, const SerreWeight& w) {
  const ExpVector t = t_of(maximal, w);
  const ExpVector r = w.r();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (maximal.J.contains(static_cast<int>(i)) != (t[i] < r[i])) return false;
  return true;
}

}  // namespace sw
