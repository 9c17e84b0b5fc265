#include "sw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "sw/congruence.hpp"

namespace sw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Above this many weights the enumerate path is skipped in the census cross-check.
constexpr Int kCrossCheckLimit = 150'000;
// Class supports are enumerated exhaustively up to this many basis elements.
constexpr std::size_t kExhaustiveBasis = 12;
// Full orbits are re-run for shapes with f >= 2 and p^f at most this.
constexpr Int kRotationLimit = 125;

std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (const auto& a : s) {
    if (out.size() > 1) out += ',';
    out += format_index(a);
  }
  return out + "}";
}

std::string format_jx(const JXPair& jx, int f) {
  std::string out = "J={";
  for (int i : jx.J.indices(f)) {
    if (out.back() != '{') out += ',';
    out += std::to_string(i);
  }
  return out + "} x=" + format_vector(jx.x);
}

std::string format_weights(const std::vector<SerreWeight>& ws) {
  std::string out = "[";
  for (const auto& w : ws) {
    if (out.size() > 1) out += ' ';
    out += format_weight(w);
  }
  return out + "]";
}

std::string format_vectors(const std::vector<ExpVector>& vs) {
  std::string out = "[";
  for (const auto& v : vs) {
    if (out.size() > 1) out += ' ';
    out += format_vector(v);
  }
  return out + "]";
}

bool is_note_check(const std::string& check) {
  return std::any_of(std::begin(kNoteChecks), std::end(kNoteChecks), [&](const char* c) { return check == c; });
}

class Recorder {
 public:
  Recorder(const CharacterPair& pair, std::string suite, SuiteTally& tally, std::vector<Finding>& out)
      : pair_(pair), suite_(std::move(suite)), tally_(tally), out_(out) {}

  void tick() { ++tally_.checks; }

  void fail(const std::string& check, std::string subject, std::string expected, std::string observed) {
    const bool note = is_note_check(check) || !pair_.weakly_generic();
    push(check, std::move(subject), std::move(expected), std::move(observed),
         note ? Severity::boundary_note : Severity::violation);
  }

  void note(const std::string& check, std::string subject, std::string expected, std::string observed) {
    push(check, std::move(subject), std::move(expected), std::move(observed), Severity::boundary_note);
  }

 private:
  void push(const std::string& check, std::string subject, std::string expected, std::string observed, Severity sev) {
    Finding f;
    f.suite = suite_;
    f.check = check;
    f.p = pair_.shape().p;
    f.f = pair_.shape().f;
    f.e = pair_.shape().e;
    f.n = pair_.exponents();
    f.n2 = pair_.n2_class();
    f.flags = pair_.flags();
    f.subject = std::move(subject);
    f.expected = std::move(expected);
    f.observed = std::move(observed);
    f.severity = sev;
    if (sev == Severity::violation)
      ++tally_.violations;
    else
      ++tally_.notes;
    out_.push_back(std::move(f));
  }

  const CharacterPair& pair_;
  std::string suite_;
  SuiteTally& tally_;
  std::vector<Finding>& out_;
};

struct Context {
  CharacterPair base;
  BasisTable basis;
  std::vector<SerreWeight> wexp;
  std::vector<std::optional<JahData>> data;
  std::vector<std::string> data_error;
};

Context make_context(const CharacterPair& pair) {
  Context ctx;
  ctx.base = pair;
  ctx.basis = BasisTable(pair);
  ctx.wexp = w_exp_ss(pair);
  for (const auto& sigma : ctx.wexp) {
    try {
      ctx.data.emplace_back(jah_data(pair, sigma));
      ctx.data_error.emplace_back();
    } catch (const AmbiguityError& err) {
      std::string cands;
      for (const auto& c : err.candidates()) cands += (cands.empty() ? "" : "; ") + format_jx(c, pair.shape().degree());
      ctx.data.emplace_back(std::nullopt);
      ctx.data_error.push_back("no unique maximal witness among " + cands);
    }
  }
  return ctx;
}

ExpVector constant(const FieldShape& s, Int v) { return ExpVector(static_cast<std::size_t>(s.f), v); }

bool all_equal(const ExpVector& v, Int x) {
  return std::all_of(v.begin(), v.end(), [&](Int y) { return y == x; });
}

void gen_conj_suite(const Context& ctx, const CharacterPair& pair, Recorder& rec) {
  for (std::size_t i = 0; i < ctx.wexp.size(); ++i) {
    rec.tick();
    const std::string subject = format_weight(ctx.wexp[i]);
    if (!ctx.data[i]) {
      rec.fail("maximal-witness", subject, "a unique maximal witness", ctx.data_error[i]);
      continue;
    }
    JahData d = *ctx.data[i];
    d.includes_tr = tr_marker_applies(pair, d.r);
    const IndexSet direct = jah_direct(pair, ctx.basis, d);
    const IndexSet fast = ell_rule_set(pair, ctx.basis, d);
    if (direct != fast)
      rec.fail("fast-equals-direct", subject,
               format_set(fast) + " l=" + format_vector(dimension_vector(d.jx, pair.shape())), format_set(direct));
    if (pair.period().repeats > 1) {
      const IndexSet all_k = saturate_k(pair, fast);
      if (all_k != direct) rec.note("all-k-reading", subject, format_set(all_k), format_set(direct));
    }
  }
}

void congruence_suite(const Context& ctx, Recorder& rec) {
  const CharacterPair& pair = ctx.base;
  const FieldShape& s = pair.shape();
  for (const auto& jx : all_jx_pairs(s)) {
    const ExpVector c = congruence_target(pair, jx);
    if (std::any_of(c.begin(), c.end(), [&](Int v) { return v < 1 || v > s.p - 1; })) continue;
    const std::string subject = format_jx(jx, s.degree()) + " c=" + format_vector(c);
    const auto sols = brute_solutions(s, jx.J, c);
    const ExpVector r = r_of(s, jx.J, c);

    rec.tick();
    if (std::find(sols.begin(), sols.end(), r) == sols.end())
      rec.fail("solves", subject, "r in " + format_vectors(sols), format_vector(r));

    for (int start : admissible_starts(s, jx.J, c)) {
      rec.tick();
      const ExpVector other = r_of(s, jx.J, c, start);
      if (other != r)
        rec.fail("tau0-independence", subject, format_vector(r),
                 "start " + std::to_string(start) + " gives " + format_vector(other));
    }

    rec.tick();
    if (sols.empty() || sols.size() > 2)
      rec.fail("solution-count", subject, "1 or 2 solutions", format_vectors(sols));

    const ExceptionalConfig cfg = exceptional_config(pair, jx);
    if (sols.size() == 2) {
      ExpVector p_on_j(c.size());
      ExpVector swapped(c.size());
      for (int i = 0; i < s.degree(); ++i) {
        const bool in = jx.J.contains(i);
        p_on_j[static_cast<std::size_t>(i)] = in ? s.p : 1;
        swapped[static_cast<std::size_t>(i)] = in ? 1 : s.p;
      }
      const std::set<ExpVector> want{p_on_j, swapped};
      rec.tick();
      if (std::set<ExpVector>(sols.begin(), sols.end()) != want)
        rec.fail("pattern", subject, format_vectors({p_on_j, swapped}), format_vectors(sols));
      const ExpVector chosen = cfg == ExceptionalConfig::none ? p_on_j : constant(s, 1);
      rec.tick();
      if (r != chosen) rec.fail("selection", subject, format_vector(chosen), format_vector(r));
      if (cfg == ExceptionalConfig::none)
        rec.note("size2-outside-named", subject, "one solution outside the named configurations",
                 format_vectors(sols));
      else
        rec.note("exceptional", subject, cfg == ExceptionalConfig::full_set ? "full J" : "empty J",
                 format_vectors(sols));
    } else if (cfg != ExceptionalConfig::none) {
      rec.tick();
      rec.fail("exceptional-size", subject, "2 solutions", format_vectors(sols));
    }
  }

  for (std::size_t i = 0; i < ctx.wexp.size(); ++i) {
    if (!ctx.data[i]) continue;
    const SerreWeight& sigma = ctx.wexp[i];
    const JXPair& jx = ctx.data[i]->jx;
    const std::string subject = format_weight(sigma) + " " + format_jx(jx, s.degree());
    rec.tick();
    ExpVector expected;
    try {
      expected = r_of_jx(pair, jx);
    } catch (const Error& err) {
      rec.fail("weight-selection", subject, "r(J, c) defined", err.what());
      continue;
    }
    const ExpVector r = sigma.r();
    const bool ok = r == expected || (exceptional_config(pair, jx) != ExceptionalConfig::none && all_equal(r, s.p));
    if (!ok) rec.fail("weight-selection", subject, format_vector(expected), format_vector(r));
  }
}

struct StructureRecorders {
  Recorder& sset;
  Recorder& mgrid;
  Recorder& props;
  Recorder& card;
  bool run_sset;
  bool run_mgrid;
  bool run_props;
  bool run_card;
};

bool divisible(Int v, Int m) { return floor_mod(v, m) == 0; }

void structure_suites(const Context& ctx, StructureRecorders& r) {
  const CharacterPair& pair = ctx.base;
  const FieldShape& s = pair.shape();
  const Int repeats = pair.period().repeats;

  if (r.run_mgrid) {
    r.mgrid.tick();
    if (!ctx.basis.cardinality_ok()) {
      std::string sizes;
      for (const auto& b : ctx.basis.w_prime()) sizes += (sizes.empty() ? "" : ",") + std::to_string(b.size());
      r.mgrid.fail("w-prime-cardinality", "W'", "|W'_j| = " + std::to_string(pair.period().length), sizes);
    }
    r.mgrid.tick();
    if (!m_grid_matches(pair, ctx.basis)) r.mgrid.fail("grid-equals-w-prime", "W'", "W'_j = {m_ij}", "mismatch");
  }

  const auto grid = m_grid(pair);
  for (std::size_t idx = 0; idx < ctx.wexp.size(); ++idx) {
    const SerreWeight& sigma = ctx.wexp[idx];
    const std::string subject = format_weight(sigma);
    if (r.run_sset) {
      r.sset.tick();
      if (!ctx.data[idx]) r.sset.fail("unique-max", subject, "a unique maximal witness", ctx.data_error[idx]);
    }
    if (!ctx.data[idx]) continue;
    const JahData& d = *ctx.data[idx];

    if (r.run_sset) {
      for (const auto& other : enumerate_sset(pair, sigma))
        if (other != d.jx && order_leq(other, d.jx, sigma) && order_leq(d.jx, other, sigma))
          r.sset.note("ties", subject, format_jx(d.jx, s.degree()), format_jx(other, s.degree()));
      r.sset.tick();
      if (!j_equals_t_less_r(d.jx, sigma))
        r.sset.fail("J-equals-t-less-r", subject, format_jx(d.jx, s.degree()),
                    "t=" + format_vector(d.st.t) + " r=" + format_vector(d.r));
      r.sset.tick();
      try {
        const JXPair back = st_to_jx(d.st, sigma);
        if (back != d.jx) r.sset.fail("st-round-trip", subject, format_jx(d.jx, s.degree()), format_jx(back, s.degree()));
      } catch (const Error& err) {
        r.sset.fail("st-round-trip", subject, format_jx(d.jx, s.degree()), err.what());
      }
    }

    if (r.run_props) {
      const bool config2 = all_equal(d.st.t, 0) && all_equal(d.st.s, s.p - 1 + s.e) && all_equal(d.r, s.p);
      const bool config3 = s.e == 1 && all_equal(d.r, s.p) && all_equal(pair.exponents(), 1) && all_equal(d.st.t, 0);
      for (int i = 0; i < s.degree(); ++i) {
        const auto u = static_cast<std::size_t>(i);
        const auto& iv = d.intervals[u];
        const Int t = d.st.t[u];
        const bool t_in = std::find(iv.begin(), iv.end(), t) != iv.end();
        const std::string at = subject + " i=" + std::to_string(i);
        r.props.tick();
        if (t_in != (t < d.r[u]))
          r.props.fail("prop1", at, t < d.r[u] ? "t in I" : "t not in I", t_in ? "t in I" : "t not in I");
        for (Int c : iv) {
          r.props.tick();
          const bool got = divisible(d.xi[u] - c * s.q, s.p);
          const bool want = c == t || (config2 && c == s.p);
          if (got != want)
            r.props.fail("prop2", at + " d=" + std::to_string(c), want ? "p | xi - dq" : "p does not divide xi - dq",
                         "xi - dq = " + std::to_string(d.xi[u] - c * s.q));
        }
        if (t < d.r[u]) {
          r.props.tick();
          const bool got = divisible(d.xi[u] - t * s.q, s.p * s.p);
          if (got != config3)
            r.props.fail("prop3", at, config3 ? "p^2 | xi - tq" : "p^2 does not divide xi - tq",
                         "xi - tq = " + std::to_string(d.xi[u] - t * s.q));
        }
      }
    }

    if (r.run_props || r.run_card) {
      JahData bare = d;
      bare.includes_tr = false;
      const CharacterPair plain = pair.with_flags({});
      const IndexSet direct = jah_direct(plain, ctx.basis, bare);
      if (r.run_props) {
        for (int i = 0; i < s.degree(); ++i)
          for (Int j = 1; j < s.e; ++j)
            for (Int k = 0; k < repeats; ++k) {
              const auto& row = grid[static_cast<std::size_t>(i)];
              if (!direct.count(BasisIndex::ca(row[static_cast<std::size_t>(j)], k))) continue;
              r.props.tick();
              if (!direct.count(BasisIndex::ca(row[static_cast<std::size_t>(j - 1)], k)))
                r.props.fail("prop4", subject,
                             format_index(BasisIndex::ca(row[static_cast<std::size_t>(j - 1)], k)) + " present",
                             "missing below " + format_index(BasisIndex::ca(row[static_cast<std::size_t>(j)], k)));
            }
        for (const auto& a : direct) {
          r.props.tick();
          for (Int k = 0; k < repeats; ++k)
            if (!direct.count(BasisIndex::ca(a.m, k))) {
              r.props.fail("k-saturation", subject, "all k for m=" + std::to_string(a.m),
                           "missing " + format_index(BasisIndex::ca(a.m, k)));
              break;
            }
        }
      }
      if (r.run_card && !is_cyclotomic_exceptional(pair, d)) {
        r.card.tick();
        std::size_t total = 0;
        for (const auto& iv : d.intervals) total += iv.size();
        if (direct.size() != total)
          r.card.fail("ca-count", subject, std::to_string(total), std::to_string(direct.size()));
      }
    }
  }
}

void census_suite(const Context& ctx, Recorder& rec) {
  const CharacterPair& pair = ctx.base;
  const FieldShape& s = pair.shape();
  const Int pf = checked_pow(s.p, s.f);
  const Int weights = checked_mul(pf, pf);
  const bool auto_enumerates = weights <= kEnumerateThreshold;
  if (weights <= kCrossCheckLimit) {
    rec.tick();
    const auto other = w_exp_ss(pair, auto_enumerates ? WexpMethod::indexed : WexpMethod::enumerate);
    if (other != ctx.wexp)
      rec.fail("enumerate-vs-indexed", "W^exp", format_weights(ctx.wexp), format_weights(other));
  }
  if (pair.weakly_generic()) {
    rec.tick();
    const auto built = w_exp_ss(pair, WexpMethod::constructive);
    if (built != ctx.wexp) rec.fail("constructive", "W^exp", format_weights(ctx.wexp), format_weights(built));
  }
  const Int base = checked_mul(checked_pow(s.e, s.f), checked_pow(2, s.f));
  const Int size = static_cast<Int>(ctx.wexp.size());
  if (pair.strongly_generic()) {
    rec.tick();
    const Int want = base + (pair.inertia_cyclotomic() ? 1 : 0) + (pair.inertia_inv_cyclotomic() ? 1 : 0);
    if (size != want) rec.fail("strong-count", "W^exp", std::to_string(want), std::to_string(size));
  } else if (pair.weakly_generic()) {
    rec.tick();
    if (size > base) rec.fail("weak-count", "W^exp", "<= " + std::to_string(base), std::to_string(size));
  }
}

std::vector<WeightEntry> entries_of(const Context& ctx) {
  std::vector<WeightEntry> out;
  for (std::size_t i = 0; i < ctx.wexp.size(); ++i) {
    if (!ctx.data[i]) fail(Errc::ambiguity, format_weight(ctx.wexp[i]) + ": " + ctx.data_error[i]);
    out.push_back({ctx.wexp[i], *ctx.data[i], {}});
  }
  return out;
}

bool leq(const PacketIndex& a, const PacketIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void packets_suite(const CharacterPair& pair, const PacketTable& table, Recorder& rec) {
  const FieldShape& s = pair.shape();
  rec.tick();
  for (std::size_t idx : table.unmatched)
    rec.fail("unmatched", format_weight(table.weights[idx].weight), "span equal to some L_w",
             format_set(table.weights[idx].span));

  for (const auto& [w, span] : table.l_w)
    for (const auto& [w2, span2] : table.l_w) {
      rec.tick();
      const bool below = leq(w, w2);
      const bool contains = std::includes(span.begin(), span.end(), span2.begin(), span2.end());
      if (below != contains)
        rec.fail("l-w-monotone", format_vector(w) + " " + format_vector(w2),
                 below ? "L_w contains L_w'" : "L_w does not contain L_w'", format_set(span) + " vs " + format_set(span2));
    }

  const bool strong = pair.strongly_generic();
  for (const auto& [w, members] : table.packets) {
    rec.tick();
    Int want = Int{1} << (s.f - delta_w(s, w));
    if (strong && all_equal(w, 0) && pair.inertia_cyclotomic()) want = 2;
    if (strong && all_equal(w, s.e) && pair.inertia_inv_cyclotomic()) want = 2;
    const Int got = static_cast<Int>(members.size());
    if (strong ? got != want : got > want)
      rec.fail(strong ? "size-strong" : "size-weak", format_vector(w), (strong ? "" : "<= ") + std::to_string(want),
               std::to_string(got));
    for (std::size_t idx : members)
      if (table.weights[idx].span.count(BasisIndex::tr()))
        rec.note("tr-reading", format_weight(table.weights[idx].weight), "packet read without TR",
                 "P_" + format_vector(w));
  }
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t cell_seed(const CharacterPair& pair, std::uint64_t seed) {
  std::uint64_t h = mix(seed, static_cast<std::uint64_t>(pair.shape().p));
  h = mix(h, static_cast<std::uint64_t>(pair.shape().f));
  h = mix(h, static_cast<std::uint64_t>(pair.shape().e));
  for (Int v : pair.exponents()) h = mix(h, static_cast<std::uint64_t>(v));
  const auto& fl = pair.flags();
  h = mix(h, (fl.chi_trivial ? 1u : 0u) | (fl.chi_cyclotomic ? 2u : 0u) | (fl.chi_inv_cyclotomic ? 4u : 0u) |
                 (fl.chi2_unramified ? 8u : 0u));
  return h;
}

std::vector<ExtensionClass> class_supports(const CharacterPair& pair, const PacketTable& table, Int samples,
                                           std::uint64_t seed) {
  std::vector<BasisIndex> basis;
  for (const auto& a : table.basis.full_w()) basis.push_back(a);
  if (pair.flags().chi_trivial) basis.push_back(BasisIndex::un());
  if (pair.flags().chi_cyclotomic && pair.flags().chi2_unramified) basis.push_back(BasisIndex::tr());
  std::vector<ExtensionClass> out;
  const auto from_mask = [&](auto bit) {
    ExtensionClass cls;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (bit(i)) cls.support.insert(basis[i]);
    return cls;
  };
  if (basis.size() <= kExhaustiveBasis) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask)
      out.push_back(from_mask([&](std::size_t i) { return (mask >> i) & 1u; }));
    return out;
  }
  std::mt19937_64 rng(cell_seed(pair, seed));
  out.push_back({});
  for (Int k = 0; k < samples; ++k) {
    std::vector<bool> bits(basis.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (rng() & 1u) != 0;
    out.push_back(from_mask([&](std::size_t i) { return static_cast<bool>(bits[i]); }));
  }
  return out;
}

bool subset_of(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void decomposition_suite(const CharacterPair& pair, const PacketTable& table, Int samples, std::uint64_t seed,
                         Recorder& rec) {
  const FieldShape& s = pair.shape();
  const IndexSet& l0 = table.l_w.at(constant(s, 0));
  for (const auto& cls : class_supports(pair, table, samples, seed)) {
    const std::string subject = "{" + format_class(cls) + "}";
    WeightSetResult res;
    try {
      res = weight_set(pair, table, cls);
    } catch (const Error& err) {
      rec.tick();
      rec.fail("weight-set", subject, "a weight set", err.what());
      continue;
    }
    rec.tick();
    if (is_tres_ramifiee(pair, cls) == subset_of(cls.support, l0))
      rec.fail("tres-ramifiee", subject, subset_of(cls.support, l0) ? "in L_0" : "outside L_0",
               res.tres_ramifiee ? "tres ramifiee" : "not tres ramifiee");

    if (res.tres_ramifiee) {
      const SerreWeight tw = tres_ramifiee_weight(pair);
      rec.tick();
      if (res.weights != std::vector<SerreWeight>{tw})
        rec.fail("tr-single-weight", subject, format_weight(tw), format_weights(res.weights));
      rec.tick();
      if (!all_equal(tw.diff(), s.p - 1) || tw.b_class() != floor_mod(pair.n2_class(), s.q))
        rec.fail("tr-weight-shape", subject, "a - b = p - 1, b-class n2", format_weight(tw));
      rec.tick();
      auto it = std::find_if(table.weights.begin(), table.weights.end(),
                             [&](const WeightEntry& e) { return e.weight == tw; });
      if (it == table.weights.end())
        rec.fail("tr-weight-in-wexp", subject, format_weight(tw) + " in W^exp", "absent");
      else if (!it->span.count(BasisIndex::tr()))
        rec.fail("tr-weight-in-wexp", subject, "TR in its span", format_set(it->span));
      rec.tick();
      if (std::find(res.direct.begin(), res.direct.end(), tw) == res.direct.end())
        rec.fail("tr-direct", subject, format_weight(tw) + " in the direct set", format_weights(res.direct));
      if (res.direct.size() > 1)
        rec.note("tr-direct-extra", subject, format_weight(tw), format_weights(res.direct));
      continue;
    }

    const auto adm = admissible_indices(table, cls);
    const std::set<PacketIndex> adm_set(adm.begin(), adm.end());
    rec.tick();
    for (const auto& w : adm)
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        PacketIndex down = w;
        --down[i];
        if (!adm_set.count(down)) {
          rec.fail("downward-closed", subject, format_vector(down) + " admissible", "below " + format_vector(w));
          goto closed_done;
        }
      }
  closed_done:
    rec.tick();
    {
      IndexSet meet = table.l_w.at(*res.w_max);
      IndexSet inter;
      bool first = true;
      for (const auto& w : adm) {
        const IndexSet& span = table.l_w.at(w);
        if (first) {
          inter = span;
          first = false;
        } else {
          IndexSet next;
          std::set_intersection(inter.begin(), inter.end(), span.begin(), span.end(), std::inserter(next, next.end()));
          inter.swap(next);
        }
      }
      if (!adm_set.count(*res.w_max) || meet != inter)
        rec.fail("w-max-intersection", subject, "L_wmax = meet of admissible L_w",
                 "w_max=" + format_vector(*res.w_max) + " L=" + format_set(meet) + " meet=" + format_set(inter));
    }
    rec.tick();
    if (res.weights != res.direct)
      rec.fail("union-equals-direct", subject, format_weights(res.direct), format_weights(res.weights));
    rec.tick();
    {
      std::size_t total = 0;
      std::set<SerreWeight> seen;
      for (const auto& [w, members] : table.packets) {
        if (!leq(w, *res.w_max)) continue;
        total += members.size();
        for (std::size_t idx : members) seen.insert(table.weights[idx].weight);
      }
      if (seen.size() != total)
        rec.fail("disjoint", subject, std::to_string(seen.size()) + " distinct", std::to_string(total) + " members");
    }
  }
}

void finish(SuiteTally& t) {
  if (!t.status.empty()) return;
  t.status = t.violations ? "violations" : t.notes ? "notes" : "ok";
}

template <typename Fn>
void guarded(const CharacterPair& pair, const std::string& suite, SuiteTally& tally, std::vector<Finding>& out, Fn&& fn) {
  const auto start = Clock::now();
  try {
    fn();
  } catch (const Error& err) {
    Recorder rec(pair, suite, tally, out);
    rec.tick();
    rec.fail("error", "cell", "completion", std::string(errc_name(err.code())) + ": " + err.what());
    tally.status = "error";
    tally.detail = err.what();
  }
  tally.seconds += seconds_since(start);
}

bool wants(const SweepConfig& c, const std::string& suite) {
  return std::find(c.suites.begin(), c.suites.end(), suite) != c.suites.end();
}

}  // namespace

GenericityFilter parse_filter(std::string_view text) {
  if (text == "all") return GenericityFilter::all;
  if (text == "weak") return GenericityFilter::weak;
  if (text == "strong") return GenericityFilter::strong;
  if (text == "boundary") return GenericityFilter::boundary;
  fail(Errc::input, "filter: expected all|weak|strong|boundary, got '" + std::string(text) + "'");
}

const char* filter_name(GenericityFilter f) noexcept {
  switch (f) {
    case GenericityFilter::all:
      return "all";
    case GenericityFilter::weak:
      return "weak";
    case GenericityFilter::strong:
      return "strong";
    default:
      return "boundary";
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gen-conj", "congruence", "sset-max",     "m-grid", "props1-4",
                                              "cardinality", "packets", "decomposition", "census"};
  return names;
}

void validate_config(const SweepConfig& c) {
  if (c.suites.empty()) fail(Errc::input, "suites: at least one suite is required");
  for (const auto& s : c.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      fail(Errc::input, "suite: unknown name '" + s + "'");
  if (c.primes.empty()) fail(Errc::input, "primes: at least one prime is required");
  for (Int p : c.primes)
    if (!is_prime(p)) fail(Errc::input, "primes: " + std::to_string(p) + " is not prime");
  if (c.max_f < 1 || c.max_e < 1 || c.max_ef < 1) fail(Errc::input, "max-f, max-e and max-ef must be positive");
  if (c.class_samples < 0) fail(Errc::input, "class-samples must be non-negative");
  if (c.jobs < 1) fail(Errc::input, "jobs must be positive");
}

const char* severity_name(Severity s) noexcept {
  return s == Severity::violation ? "violation" : "boundary-note";
}

bool operator<(const Finding& a, const Finding& b) {
  const auto key = [](const Finding& x) {
    return std::tie(x.p, x.f, x.e, x.n, x.n2, x.flags, x.suite, x.check, x.subject, x.expected, x.observed,
                    x.severity);
  };
  return key(a) < key(b);
}

std::string format_flags(const CharacterFlags& fl) {
  std::string out;
  const auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(fl.chi_trivial, "chi-trivial");
  add(fl.chi_cyclotomic, "chi-cyclotomic");
  add(fl.chi_inv_cyclotomic, "chi-inv-cyclotomic");
  add(fl.chi2_unramified, "chi2-unramified");
  return out;
}

std::vector<Finding> check_gen_conj(const CharacterPair& pair) {
  std::vector<Finding> out;
  SuiteTally tally;
  const Context ctx = make_context(pair);
  Recorder rec(pair, "gen-conj", tally, out);
  gen_conj_suite(ctx, pair, rec);
  return out;
}

std::vector<Finding> check_congruence(const CharacterPair& pair) {
  std::vector<Finding> out;
  SuiteTally tally;
  const Context ctx = make_context(pair);
  Recorder rec(pair, "congruence", tally, out);
  congruence_suite(ctx, rec);
  return out;
}

std::vector<Finding> check_structure(const CharacterPair& pair) {
  std::vector<Finding> out;
  SuiteTally t1, t2, t3, t4;
  const Context ctx = make_context(pair);
  Recorder a(pair, "sset-max", t1, out), b(pair, "m-grid", t2, out), c(pair, "props1-4", t3, out),
      d(pair, "cardinality", t4, out);
  StructureRecorders r{a, b, c, d, true, true, true, true};
  structure_suites(ctx, r);
  return out;
}

std::vector<Finding> check_packets_and_decomposition(const CharacterPair& pair, Int class_samples,
                                                     std::uint64_t seed) {
  if (!pair.weakly_generic())
    fail(Errc::precondition, "n=" + format_vector(pair.exponents()) + " is not weakly generic");
  std::vector<Finding> out;
  SuiteTally t1, t2;
  const Context ctx = make_context(pair);
  const PacketTable table = all_packets(pair, entries_of(ctx));
  Recorder a(pair, "packets", t1, out), b(pair, "decomposition", t2, out);
  packets_suite(pair, table, a);
  decomposition_suite(pair, table, class_samples, seed, b);
  return out;
}

Int SweepReport::violations() const {
  Int total = 0;
  for (const auto& [name, t] : totals) total += t.violations;
  return total;
}

Int SweepReport::notes() const {
  Int total = 0;
  for (const auto& [name, t] : totals) total += t.notes;
  return total;
}

bool is_boundary_cell(const FieldShape& shape, const ExpVector& n) {
  const auto has = [&](Int v) { return std::find(n.begin(), n.end(), v) != n.end(); };
  if (shape.e == 1) return has(shape.p - 1) || has(shape.p);
  if (shape.e == 2) return has(shape.p - 1);
  return false;
}

std::vector<ExpVector> rotation_representatives(const FieldShape& shape) {
  std::vector<ExpVector> out;
  const Int count = checked_pow(shape.p, shape.f);
  ExpVector n(static_cast<std::size_t>(shape.f));
  for (Int code = 0; code < count; ++code) {
    Int k = code;
    for (auto it = n.rbegin(); it != n.rend(); ++it) {
      *it = k % shape.p + 1;
      k /= shape.p;
    }
    if (std::none_of(n.begin(), n.end(), [&](Int v) { return v < shape.p; })) continue;
    bool minimal = true;
    for (int r = 1; r < shape.degree() && minimal; ++r) minimal = !(rotate(n, r) < n);
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<CharacterFlags> flag_combinations(const CharacterPair& base) {
  std::vector<CharacterFlags> out;
  for (unsigned bits = 0; bits < 16; ++bits) {
    CharacterFlags fl{(bits & 1u) != 0, (bits & 2u) != 0, (bits & 4u) != 0, (bits & 8u) != 0};
    if (validate_flags(base.with_flags(fl)).empty()) out.push_back(fl);
  }
  return out;
}

CellResult run_cell(const FieldShape& shape, const ExpVector& n, const SweepConfig& config) {
  const auto start = Clock::now();
  CellResult cell;
  cell.p = shape.p;
  cell.f = shape.f;
  cell.e = shape.e;
  cell.n = n;
  cell.weak = is_weakly_generic(shape, n);
  cell.strong = is_strongly_generic(shape, n);
  cell.boundary = is_boundary_cell(shape, n);
  const CharacterPair base(shape, InertiaCharacter(shape, n), 0);
  const auto combos = flag_combinations(base);
  cell.flag_combinations = static_cast<Int>(combos.size());
  for (const auto& s : suite_names())
    if (wants(config, s)) cell.suites[s];

  Context ctx;
  try {
    ctx = make_context(base);
  } catch (const Error& err) {
    for (auto& [name, tally] : cell.suites) {
      Recorder rec(base, name, tally, cell.findings);
      rec.tick();
      rec.fail("error", "cell", "completion", std::string(errc_name(err.code())) + ": " + err.what());
      tally.status = "error";
      tally.detail = err.what();
    }
    cell.seconds = seconds_since(start);
    return cell;
  }

  if (wants(config, "gen-conj")) {
    auto& tally = cell.suites["gen-conj"];
    guarded(base, "gen-conj", tally, cell.findings, [&] {
      for (const auto& fl : combos) {
        const CharacterPair pair = base.with_flags(fl);
        Recorder rec(pair, "gen-conj", tally, cell.findings);
        gen_conj_suite(ctx, pair, rec);
      }
    });
  }
  if (wants(config, "congruence")) {
    auto& tally = cell.suites["congruence"];
    guarded(base, "congruence", tally, cell.findings, [&] {
      Recorder rec(base, "congruence", tally, cell.findings);
      congruence_suite(ctx, rec);
    });
  }
  {
    const bool any = wants(config, "sset-max") || wants(config, "m-grid") || wants(config, "props1-4") ||
                     wants(config, "cardinality");
    if (any) {
      SuiteTally scratch;
      auto& t1 = wants(config, "sset-max") ? cell.suites["sset-max"] : scratch;
      auto& t2 = wants(config, "m-grid") ? cell.suites["m-grid"] : scratch;
      auto& t3 = wants(config, "props1-4") ? cell.suites["props1-4"] : scratch;
      auto& t4 = wants(config, "cardinality") ? cell.suites["cardinality"] : scratch;
      std::vector<Finding> sink;
      auto& out = cell.findings;
      Recorder a(base, "sset-max", t1, wants(config, "sset-max") ? out : sink);
      Recorder b(base, "m-grid", t2, wants(config, "m-grid") ? out : sink);
      Recorder c(base, "props1-4", t3, wants(config, "props1-4") ? out : sink);
      Recorder d(base, "cardinality", t4, wants(config, "cardinality") ? out : sink);
      StructureRecorders r{a, b, c, d, wants(config, "sset-max"), wants(config, "m-grid"), wants(config, "props1-4"),
                           wants(config, "cardinality")};
      const char* owner = r.run_sset ? "sset-max" : r.run_mgrid ? "m-grid" : r.run_props ? "props1-4" : "cardinality";
      const auto t0 = Clock::now();
      guarded(base, owner, cell.suites[owner], out, [&] { structure_suites(ctx, r); });
      const double per = seconds_since(t0);
      for (const char* name : {"sset-max", "m-grid", "props1-4", "cardinality"})
        if (wants(config, name)) cell.suites[name].seconds = per;
    }
  }
  if (wants(config, "census")) {
    auto& tally = cell.suites["census"];
    guarded(base, "census", tally, cell.findings, [&] {
      Recorder rec(base, "census", tally, cell.findings);
      census_suite(ctx, rec);
    });
  }
  const bool pk = wants(config, "packets");
  const bool dc = wants(config, "decomposition");
  if (pk || dc) {
    if (!cell.weak) {
      if (pk) cell.suites["packets"].status = "skipped";
      if (dc) cell.suites["decomposition"].status = "skipped";
    } else {
      SuiteTally none;
      auto& tp = pk ? cell.suites["packets"] : none;
      auto& td = dc ? cell.suites["decomposition"] : none;
      std::vector<WeightEntry> entries;
      guarded(base, pk ? "packets" : "decomposition", pk ? tp : td, cell.findings, [&] { entries = entries_of(ctx); });
      if ((pk ? tp : td).status != "error") {
        for (const auto& fl : combos) {
          const CharacterPair pair = base.with_flags(fl);
          PacketTable table;
          guarded(pair, pk ? "packets" : "decomposition", pk ? tp : td, cell.findings,
                  [&] { table = all_packets(pair, entries); });
          if ((pk ? tp : td).status == "error") break;
          if (pk)
            guarded(pair, "packets", tp, cell.findings, [&] {
              Recorder rec(pair, "packets", tp, cell.findings);
              packets_suite(pair, table, rec);
            });
          if (dc)
            guarded(pair, "decomposition", td, cell.findings, [&] {
              Recorder rec(pair, "decomposition", td, cell.findings);
              decomposition_suite(pair, table, config.class_samples, config.seed, rec);
            });
        }
      }
    }
  }
  for (auto& [name, tally] : cell.suites) finish(tally);
  std::sort(cell.findings.begin(), cell.findings.end());
  cell.seconds = seconds_since(start);
  return cell;
}

namespace {

struct Job {
  FieldShape shape;
  ExpVector n;
};

bool passes(GenericityFilter filter, const FieldShape& shape, const ExpVector& n) {
  switch (filter) {
    case GenericityFilter::weak:
      return is_weakly_generic(shape, n);
    case GenericityFilter::strong:
      return is_strongly_generic(shape, n);
    case GenericityFilter::boundary:
      return is_boundary_cell(shape, n);
    default:
      return true;
  }
}

std::optional<RotationEntry> rotation_check(const Job& job, const CellResult& rep, const SweepConfig& config) {
  const FieldShape& s = job.shape;
  if (s.f < 2 || checked_pow(s.p, s.f) > kRotationLimit) return std::nullopt;
  RotationEntry entry{s.p, s.f, s.e, job.n, 1, true, {}};
  std::set<ExpVector> orbit{job.n};
  for (int k = 1; k < s.degree(); ++k) {
    const ExpVector m = rotate(job.n, k);
    if (!orbit.insert(m).second) continue;
    const CellResult other = run_cell(s, m, config);
    for (const auto& [name, tally] : rep.suites) {
      const SuiteTally& o = other.suites.at(name);
      if (!(o == tally) && entry.consistent) {
        entry.consistent = false;
        entry.detail = "n=" + format_vector(m) + " suite " + name + ": " + std::to_string(o.checks) + "/" +
                       std::to_string(o.violations) + "/" + std::to_string(o.notes) + " vs " +
                       std::to_string(tally.checks) + "/" + std::to_string(tally.violations) + "/" +
                       std::to_string(tally.notes);
      }
    }
  }
  entry.orbit_size = static_cast<Int>(orbit.size());
  return entry;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  validate_config(config);
  const auto start = Clock::now();
  SweepReport report;
  report.config = config;
  std::vector<Int> primes = config.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Job> jobs;
  for (Int p : primes)
    for (Int f = 1; f <= config.max_f; ++f)
      for (Int e = 1; e <= config.max_e && e * f <= config.max_ef; ++e) {
        const FieldShape shape = FieldShape::make(p, f, e);
        for (auto& n : rotation_representatives(shape))
          if (passes(config.filter, shape, n)) jobs.push_back({shape, n});
      }

  std::vector<CellResult> cells(jobs.size());
  std::vector<std::optional<RotationEntry>> rotations(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      cells[i] = run_cell(jobs[i].shape, jobs[i].n, config);
      if (config.rotation_check) rotations[i] = rotation_check(jobs[i], cells[i], config);
    }
  };
  const int workers = std::max(1, std::min<int>(config.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& s : config.suites) report.totals[s];
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CellResult& cell = cells[i];
    for (const auto& [name, tally] : cell.suites) {
      SuiteTally& tot = report.totals[name];
      tot.checks += tally.checks;
      tot.violations += tally.violations;
      tot.notes += tally.notes;
      tot.seconds += tally.seconds;
    }
    report.findings.insert(report.findings.end(), cell.findings.begin(), cell.findings.end());
    if (cell.boundary && cell.suites.count("gen-conj")) {
      const SuiteTally& g = cell.suites.at("gen-conj");
      BoundaryEntry b{cell.p, cell.f, cell.e, cell.n, cell.weak, false, 0};
      for (const auto& f : cell.findings)
        if (f.suite == "gen-conj" && !is_note_check(f.check)) ++b.mismatches;
      b.pass = b.mismatches == 0 && g.status != "error";
      report.boundary.push_back(b);
    }
    if (rotations[i]) {
      report.rotation.push_back(*rotations[i]);
      if (!rotations[i]->consistent) {
        SuiteTally& rot = report.totals["rotation"];
        ++rot.violations;
        Finding f;
        f.suite = "rotation";
        f.check = "orbit-consistency";
        f.p = cell.p;
        f.f = cell.f;
        f.e = cell.e;
        f.n = cell.n;
        f.subject = "orbit";
        f.expected = "identical tallies";
        f.observed = rotations[i]->detail;
        report.findings.push_back(std::move(f));
      }
    }
  }
  if (config.rotation_check) report.totals["rotation"].checks = static_cast<Int>(report.rotation.size());
  for (auto& [name, t] : report.totals) finish(t);
  std::sort(report.findings.begin(), report.findings.end());
  report.cells = std::move(cells);
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace sw
