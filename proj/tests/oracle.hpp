#pragma once

// Brute-force reference implementations written straight from the
// definitions, sharing no code with the library. Slow by design.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using I = std::int64_t;
using V = std::vector<I>;

inline I pw(I p, int k) {
  I r = 1;
  while (k-- > 0) r *= p;
  return r;
}

inline I mod(I a, I m) { return ((a % m) + m) % m; }

// Sum_j p^j a_{(i+j) mod f}
inline I omega(I p, const V& a, int i) {
  const int f = static_cast<int>(a.size());
  I s = 0;
  for (int j = 0; j < f; ++j) s += pw(p, j) * a[static_cast<std::size_t>((i + j) % f)];
  return s;
}

// Odometer over [lo, hi]^f.
template <typename Fn>
void each_vector(int f, I lo, I hi, Fn&& fn) {
  V v(static_cast<std::size_t>(f), lo);
  while (true) {
    fn(v);
    int i = 0;
    while (i < f && v[static_cast<std::size_t>(i)] == hi) v[static_cast<std::size_t>(i++)] = lo;
    if (i == f) return;
    ++v[static_cast<std::size_t>(i)];
  }
}

struct Ctx {
  I p, f, e;
  V n;
  I n2 = 0;  // inertia class of chi2
  bool trivial = false, cyc = false, inv_cyc = false, chi2_unr = false;

  I q() const { return pw(p, static_cast<int>(f)) - 1; }
  int fi() const { return static_cast<int>(f); }
  I chi() const { return mod(omega(p, n, 0), q()); }
};

inline V normalize(I p, int f, I cls) {
  const I q = pw(p, f) - 1;
  V found;
  each_vector(f, 1, p, [&](const V& v) {
    if (std::all_of(v.begin(), v.end(), [&](I x) { return x == p; })) return;
    if (mod(omega(p, v, 0) - cls, q) == 0) found = v;
  });
  return found;
}

inline int period(const V& n) {
  const int f = static_cast<int>(n.size());
  for (int d = 1; d <= f; ++d) {
    if (f % d) continue;
    bool ok = true;
    for (int i = 0; i < f; ++i) ok = ok && n[static_cast<std::size_t>(i)] == n[static_cast<std::size_t>((i + d) % f)];
    if (ok) return d;
  }
  return f;
}

struct Weight {
  V a, b;
  auto operator<=>(const Weight&) const = default;
};

// Canonical weights: a - b in [0, p-1], b in [0, p-1] not all p-1.
inline std::vector<Weight> weights(I p, int f) {
  std::vector<Weight> out;
  each_vector(f, 0, p - 1, [&](const V& d) {
    each_vector(f, 0, p - 1, [&](const V& b) {
      if (std::all_of(b.begin(), b.end(), [&](I x) { return x == p - 1; })) return;
      V a(b.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = b[i] + d[i];
      out.push_back({a, b});
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct JX {
  unsigned J;
  V x;
  auto operator<=>(const JX&) const = default;
};

inline bool in_j(unsigned J, int i) { return (J >> i) & 1u; }

// Both diagonal characters on inertia match.
inline bool witnesses(const Ctx& c, const Weight& w, const JX& jx) {
  const int f = c.fi();
  V u(static_cast<std::size_t>(f)), v(static_cast<std::size_t>(f));
  for (int i = 0; i < f; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (in_j(jx.J, i)) {
      u[k] = w.a[k] + 1 + jx.x[k];
      v[k] = w.b[k] + c.e - 1 - jx.x[k];
    } else {
      u[k] = w.b[k] + jx.x[k];
      v[k] = w.a[k] + c.e - jx.x[k];
    }
  }
  return mod(omega(c.p, u, 0) - (c.chi() + c.n2), c.q()) == 0 && mod(omega(c.p, v, 0) - c.n2, c.q()) == 0;
}

inline std::vector<JX> sset(const Ctx& c, const Weight& w) {
  std::vector<JX> out;
  const int f = c.fi();
  for (unsigned J = 0; J < (1u << f); ++J)
    each_vector(f, 0, c.e - 1, [&](const V& x) {
      if (witnesses(c, w, {J, x})) out.push_back({J, x});
    });
  return out;
}

inline V s_of(const Ctx& c, const Weight& w, const JX& jx) {
  V s(w.a.size());
  for (int i = 0; i < c.fi(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    s[k] = in_j(jx.J, i) ? w.a[k] - w.b[k] + 1 + jx.x[k] : jx.x[k];
  }
  return s;
}

inline V t_of(const Ctx& c, const Weight& w, const JX& jx) {
  const V s = s_of(c, w, jx);
  V t(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) t[k] = w.a[k] - w.b[k] + c.e - s[k];
  return t;
}

inline bool leq(const Ctx& c, const Weight& w, const JX& lo, const JX& hi) {
  const V a = s_of(c, w, lo), b = s_of(c, w, hi);
  V d(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) d[k] = b[k] - a[k];
  for (int i = 0; i < c.fi(); ++i) {
    const I o = omega(c.p, d, i);
    if (o < 0 || mod(o, c.q()) != 0) return false;
  }
  return true;
}

// The element dominating every element of S, if exactly one exists.
inline std::optional<JX> maximal(const Ctx& c, const Weight& w) {
  const auto s = sset(c, w);
  std::vector<JX> top;
  for (const auto& m : s)
    if (std::all_of(s.begin(), s.end(), [&](const JX& o) { return leq(c, w, o, m); })) top.push_back(m);
  if (top.size() != 1) return std::nullopt;
  return top.front();
}

inline std::vector<Weight> wexp(const Ctx& c) {
  std::vector<Weight> out;
  for (const auto& w : weights(c.p, c.fi()))
    if (!sset(c, w).empty()) out.push_back(w);
  return out;
}

// Every r in [1, p]^f with sum (-1)^[i not in J] r_i p^i = Omega_0(c) mod q.
inline std::vector<V> congruence_solutions(I p, unsigned J, const V& cv) {
  const int f = static_cast<int>(cv.size());
  const I q = pw(p, f) - 1;
  std::vector<V> out;
  each_vector(f, 1, p, [&](const V& r) {
    I s = 0;
    for (int i = 0; i < f; ++i) s += (in_j(J, i) ? 1 : -1) * r[static_cast<std::size_t>(i)] * pw(p, i);
    if (mod(s - omega(p, cv, 0), q) == 0) out.push_back(r);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ("ca", m, k) coordinates plus the "un" and "tr" markers.
struct Index {
  int kind;  // 0 ca, 1 un, 2 tr
  I m, k;
  auto operator<=>(const Index&) const = default;
};

using Set = std::set<Index>;

// W'_j by scanning the open interval, with tau_m the smallest matching i < f'.
struct Basis {
  std::vector<V> wprime;
  std::map<I, int> tau;
  int fp = 1, fpp = 1;
};

inline Basis basis(const Ctx& c) {
  Basis b;
  b.fp = period(c.n);
  b.fpp = c.fi() / b.fp;
  const I q = c.q();
  for (I j = 0; j < c.e; ++j) {
    V bucket;
    for (I m = 1; m < c.p * q * c.e; ++m) {
      // j p q/(p-1) < m < (j+1) p q/(p-1), compared without division
      if (!(j * c.p * q < m * (c.p - 1) && m * (c.p - 1) < (j + 1) * c.p * q)) continue;
      if (m % c.p == 0) continue;
      for (int i = 0; i < b.fp; ++i)
        if (mod(m - omega(c.p, c.n, i), q) == 0) {
          bucket.push_back(m);
          b.tau.emplace(m, i);
          break;
        }
    }
    b.wprime.push_back(bucket);
  }
  return b;
}

inline int tau_alpha(const Ctx& c, const Basis& b, I m, I k) {
  return static_cast<int>(mod(b.tau.at(m) - k * b.fp, c.f));
}

struct Jah {
  JX jx;
  V s, t, r, xi;
  std::vector<std::set<I>> intervals;
  Set set;
};

// The defining search: alpha = (m, k) in W with p^j m = xi_i - d q and
// tau_alpha = i + j for some i, d in I_i, j >= 0.
inline Jah jah(const Ctx& c, const Weight& w) {
  Jah out;
  out.jx = *maximal(c, w);
  out.s = s_of(c, w, out.jx);
  out.t = t_of(c, w, out.jx);
  const int f = c.fi();
  out.r.resize(static_cast<std::size_t>(f));
  V diff(static_cast<std::size_t>(f));
  for (int i = 0; i < f; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.r[k] = w.a[k] - w.b[k] + 1;
    diff[k] = out.s[k] - out.t[k];
  }
  const Basis b = basis(c);
  for (int i = 0; i < f; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.xi.push_back(c.q() * out.s[k] + omega(c.p, diff, i));
    std::set<I> iv;
    if (in_j(out.jx.J, i)) {
      iv.insert(out.t[k]);
      for (I d = out.r[k]; d < out.s[k]; ++d) iv.insert(d);
    } else {
      for (I d = 0; d < out.s[k]; ++d) iv.insert(d);
    }
    out.intervals.push_back(iv);
  }
  for (const auto& bucket : b.wprime)
    for (I m : bucket)
      for (I kk = 0; kk < b.fpp; ++kk)
        for (int i = 0; i < f; ++i)
          for (I d : out.intervals[static_cast<std::size_t>(i)])
            for (int j = 0; j < 64; ++j) {
              const I lhs = pw(c.p, j) * m;
              const I rhs = out.xi[static_cast<std::size_t>(i)] - d * c.q();
              if (lhs > rhs) break;
              if (lhs == rhs && tau_alpha(c, b, m, kk) == (i + j) % f) out.set.insert({0, m, kk});
            }
  if (c.trivial) out.set.insert({1, 0, 0});
  const bool all_p = std::all_of(out.r.begin(), out.r.end(), [&](I x) { return x == c.p; });
  if (c.cyc && c.chi2_unr && all_p) out.set.insert({2, 0, 0});
  return out;
}

inline V ell(const Ctx& c, const JX& jx) {
  V l(jx.x.size());
  for (int i = 0; i < c.fi(); ++i) l[static_cast<std::size_t>(i)] = jx.x[static_cast<std::size_t>(i)] + (in_j(jx.J, (i + c.fi() - 1) % c.fi()) ? 1 : 0);
  return l;
}

// L_w: coordinates alpha = (m_{i,j}, k) with j < e - w_i attached to
// embedding i itself, plus UN for a trivial chi.
inline Set l_w(const Ctx& c, const V& w) {
  const Basis b = basis(c);
  Set out;
  for (int i = 0; i < c.fi(); ++i)
    for (I j = 0; j < c.e - w[static_cast<std::size_t>(i)]; ++j) {
      const I m = omega(c.p, c.n, i) + j * c.q();
      for (I k = 0; k < b.fpp; ++k)
        if (b.tau.count(m) && tau_alpha(c, b, m, k) == i) out.insert({0, m, k});
    }
  if (c.trivial) out.insert({1, 0, 0});
  return out;
}

inline Set without_tr(Set s) {
  s.erase({2, 0, 0});
  return s;
}

inline std::vector<V> packet_indices(const Ctx& c) {
  std::vector<V> out;
  each_vector(c.fi(), 0, c.e, [&](const V& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

// P_w for every w, spans compared without TR.
inline std::map<V, std::vector<Weight>> packets(const Ctx& c) {
  std::map<V, std::vector<Weight>> out;
  const auto ws = wexp(c);
  for (const auto& w : packet_indices(c)) {
    auto& bucket = out[w];
    const Set target = l_w(c, w);
    for (const auto& s : ws)
      if (without_tr(jah(c, s).set) == target) bucket.push_back(s);
  }
  return out;
}

// {sigma in W^exp : support in L_sigma}
inline std::vector<Weight> weight_set_direct(const Ctx& c, const Set& support) {
  std::vector<Weight> out;
  for (const auto& s : wexp(c)) {
    const Set span = jah(c, s).set;
    if (std::includes(span.begin(), span.end(), support.begin(), support.end())) out.push_back(s);
  }
  return out;
}

// Componentwise max of {w : support in L_w}.
inline V w_max(const Ctx& c, const Set& support) {
  V best(static_cast<std::size_t>(c.f), 0);
  for (const auto& w : packet_indices(c)) {
    const Set lw = l_w(c, w);
    if (std::includes(lw.begin(), lw.end(), support.begin(), support.end()))
      for (std::size_t i = 0; i < w.size(); ++i) best[i] = std::max(best[i], w[i]);
  }
  return best;
}

}  // namespace oracle
