#include "sw/packets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "sw/congruence.hpp"

namespace sw {

namespace {

void require_weak(const CharacterPair& pair) {
  if (!pair.weakly_generic())
    fail(Errc::precondition, "n=" + format_vector(pair.exponents()) + " is not weakly generic");
}

IndexSet without_tr(IndexSet s) {
  s.erase(BasisIndex::tr());
  return s;
}

bool subset_of(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ExpVector decode(Int code, Int base, Int len, Int offset) {
  ExpVector v(static_cast<std::size_t>(len));
  for (auto& x : v) {
    x = code % base + offset;
    code /= base;
  }
  return v;
}

}  // namespace

IndexSet l_w_span(const CharacterPair& pair, const PacketIndex& w) {
  const FieldShape& s = pair.shape();
  if (static_cast<Int>(w.size()) != s.f) fail(Errc::input, "packet index needs length f=" + std::to_string(s.f));
  for (Int wi : w)
    if (wi < 0 || wi > s.e) fail(Errc::input, "packet index entry " + std::to_string(wi) + " outside [0, e]");
  require_weak(pair);
  const auto grid = m_grid(pair);
  IndexSet out;
  for (int i = 0; i < s.degree(); ++i)
    for (Int j = 0; j < s.e - w[static_cast<std::size_t>(i)]; ++j)
      out.insert(BasisIndex::ca(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], k_of_embedding(pair, i)));
  if (pair.flags().chi_trivial) out.insert(BasisIndex::un());
  return out;
}

IndexSet l_sigma_span(const CharacterPair& pair, const SerreWeight& w) { return jah_direct(pair, w); }

std::vector<PacketIndex> all_packet_indices(const FieldShape& shape) {
  const Int count = checked_pow(shape.e + 1, shape.f);
  std::vector<PacketIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int code = 0; code < count; ++code) out.push_back(decode(code, shape.e + 1, shape.f, 0));
  return out;
}

int delta_w(const FieldShape& shape, const PacketIndex& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](Int v) { return v == 0 || v == shape.e; }));
}

namespace {

std::vector<SerreWeight> wexp_enumerate(const CharacterPair& pair, Int budget) {
  const auto pairs = all_jx_pairs(pair.shape());
  std::vector<SerreWeight> out;
  for_each_weight(pair.shape(), budget, [&](const SerreWeight& w) {
    for (const auto& jx : pairs)
      if (in_sset(pair, w, jx)) {
        out.push_back(w);
        return;
      }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SerreWeight> wexp_indexed(const CharacterPair& pair) {
  const FieldShape& s = pair.shape();
  const auto pairs = all_jx_pairs(s);
  const Int diffs = checked_pow(s.p, s.f);
  std::set<SerreWeight> found;
  for (Int code = 0; code < diffs; ++code) {
    const ExpVector d = decode(code, s.p, s.f, 0);
    for (const auto& jx : pairs) {
      Int u = 0;
      Int v = 0;
      for (int i = 0; i < s.degree(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const Int pw = s.power(i);
        if (jx.J.contains(i)) {
          u += (d[k] + 1 + jx.x[k]) * pw;
          v += (s.e - 1 - jx.x[k]) * pw;
        } else {
          u += jx.x[k] * pw;
          v += (d[k] + s.e - jx.x[k]) * pw;
        }
      }
      const Int b = floor_mod(pair.chi1_class() - u, s.q);
      if (floor_mod(b + v, s.q) == pair.n2_class()) found.insert(weight_from_diff(s, d, b));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<SerreWeight> wexp_constructive(const CharacterPair& pair) {
  require_weak(pair);
  const FieldShape& s = pair.shape();
  std::set<SerreWeight> found;
  const ExpVector top(static_cast<std::size_t>(s.f), s.p - 1);
  for (const auto& jx : all_jx_pairs(s)) {
    const ExpVector r = r_of_jx(pair, jx);
    ExpVector d(r.size());
    Int b = pair.n2_class();
    for (int i = 0; i < s.degree(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      d[k] = r[k] - 1;
      b += (jx.x[k] - s.e + 1 - (jx.J.contains(i) ? 0 : r[k])) * s.power(i);
    }
    found.insert(weight_from_diff(s, d, b));
    switch (exceptional_config(pair, jx)) {
      case ExceptionalConfig::full_set:
        found.insert(weight_from_diff(s, top, pair.n2_class()));
        break;
      case ExceptionalConfig::empty_set:
        found.insert(weight_from_diff(s, top, pair.n2_class() - s.e * s.repunit()));
        break;
      default:
        break;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<SerreWeight> w_exp_ss(const CharacterPair& pair, WexpMethod method, Int budget) {
  const FieldShape& s = pair.shape();
  if (method == WexpMethod::automatic) {
    const Int pf = checked_pow(s.p, s.f);
    method = checked_mul(pf, pf) <= kEnumerateThreshold ? WexpMethod::enumerate : WexpMethod::indexed;
  }
  switch (method) {
    case WexpMethod::enumerate:
      return wexp_enumerate(pair, budget);
    case WexpMethod::constructive:
      return wexp_constructive(pair);
    default:
      return wexp_indexed(pair);
  }
}

std::vector<SerreWeight> PacketTable::packet(const PacketIndex& w) const {
  std::vector<SerreWeight> out;
  auto it = packets.find(w);
  if (it == packets.end()) return out;
  for (std::size_t idx : it->second) out.push_back(weights[idx].weight);
  return out;
}

PacketTable all_packets(const CharacterPair& pair, std::vector<WeightEntry> entries) {
  require_weak(pair);
  PacketTable table;
  table.basis = BasisTable(pair);
  std::map<IndexSet, PacketIndex> by_span;
  for (auto& w : all_packet_indices(pair.shape())) {
    IndexSet span = l_w_span(pair, w);
    by_span.emplace(span, w);
    table.l_w.emplace(w, std::move(span));
    table.packets[w];
  }
  std::sort(entries.begin(), entries.end(),
            [](const WeightEntry& a, const WeightEntry& b) { return a.weight < b.weight; });
  for (auto& entry : entries) {
    entry.data.includes_tr = tr_marker_applies(pair, entry.data.r);
    entry.span = jah_direct(pair, table.basis, entry.data);
    const std::size_t idx = table.weights.size();
    auto it = by_span.find(without_tr(entry.span));
    if (it == by_span.end())
      table.unmatched.push_back(idx);
    else
      table.packets[it->second].push_back(idx);
    table.weights.push_back(std::move(entry));
  }
  return table;
}

PacketTable all_packets(const CharacterPair& pair, WexpMethod method) {
  require_weak(pair);
  std::vector<WeightEntry> entries;
  for (auto& sigma : w_exp_ss(pair, method)) entries.push_back({sigma, jah_data(pair, sigma), {}});
  return all_packets(pair, std::move(entries));
}

std::vector<SerreWeight> packet(const CharacterPair& pair, const PacketIndex& w) {
  const IndexSet target = l_w_span(pair, w);
  const BasisTable basis(pair);
  std::vector<SerreWeight> out;
  for (auto& sigma : w_exp_ss(pair))
    if (without_tr(jah_direct(pair, basis, jah_data(pair, sigma))) == target) out.push_back(sigma);
  return out;
}

ExtensionClass parse_class(std::string_view text) {
  ExtensionClass cls;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string tok(text.substr(pos, comma - pos));
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    pos = comma + 1;
    if (tok.empty()) {
      if (text.find_first_not_of(' ') == std::string_view::npos) break;
      fail(Errc::input, "class: empty token in '" + std::string(text) + "'");
    }
    std::string lower = tok;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "un") {
      cls.support.insert(BasisIndex::un());
      continue;
    }
    if (lower == "tr") {
      cls.support.insert(BasisIndex::tr());
      continue;
    }
    const auto colon = tok.find(':');
    Int m = 0;
    Int k = 0;
    const char* end = tok.data() + tok.size();
    bool ok = colon != std::string::npos;
    if (ok) {
      auto r1 = std::from_chars(tok.data(), tok.data() + colon, m);
      auto r2 = std::from_chars(tok.data() + colon + 1, end, k);
      ok = r1.ec == std::errc() && r1.ptr == tok.data() + colon && colon > 0 && r2.ec == std::errc() &&
           r2.ptr == end && colon + 1 < tok.size();
    }
    if (!ok) fail(Errc::input, "class: malformed token '" + tok + "' (expected m:k, un or tr)");
    cls.support.insert(BasisIndex::ca(m, k));
  }
  return cls;
}

std::string format_class(const ExtensionClass& cls) {
  std::string out;
  for (const auto& a : cls.support) {
    if (!out.empty()) out += ',';
    out += format_index(a);
  }
  return out;
}

void validate_class(const CharacterPair& pair, const BasisTable& basis, const ExtensionClass& cls) {
  for (const auto& a : cls.support) {
    switch (a.kind) {
      case BasisIndex::Kind::un:
        if (!pair.flags().chi_trivial) fail(Errc::input, "class: 'un' requires a trivial chi");
        break;
      case BasisIndex::Kind::tr:
        if (!pair.flags().chi_cyclotomic || !pair.flags().chi2_unramified)
          fail(Errc::input, "class: 'tr' requires a cyclotomic chi and an unramified chi2");
        break;
      default:
        if (!basis.contains(a.m) || a.k < 0 || a.k >= pair.period().repeats)
          fail(Errc::input, "class: " + format_index(a) + " is not a basis coordinate");
    }
  }
}

bool is_tres_ramifiee(const CharacterPair& pair, const ExtensionClass& cls) {
  validate_class(pair, BasisTable(pair), cls);
  return cls.support.count(BasisIndex::tr()) != 0;
}

std::vector<PacketIndex> admissible_indices(const PacketTable& table, const ExtensionClass& cls) {
  std::vector<PacketIndex> out;
  for (const auto& [w, span] : table.l_w)
    if (subset_of(cls.support, span)) out.push_back(w);
  return out;
}

std::vector<PacketIndex> admissible_indices(const CharacterPair& pair, const ExtensionClass& cls) {
  std::vector<PacketIndex> out;
  for (auto& w : all_packet_indices(pair.shape()))
    if (subset_of(cls.support, l_w_span(pair, w))) out.push_back(w);
  return out;
}

namespace {

PacketIndex max_of_admissible(const FieldShape& shape, const ExtensionClass& cls, const std::vector<PacketIndex>& adm) {
  if (adm.empty()) fail(Errc::invariant, "class " + format_class(cls) + " lies in no L_w");
  PacketIndex top(static_cast<std::size_t>(shape.f), 0);
  for (const auto& w : adm)
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], w[i]);
  if (std::find(adm.begin(), adm.end(), top) == adm.end())
    fail(Errc::invariant, "componentwise max " + format_vector(top) + " is not admissible");
  return top;
}

void refuse_tres_ramifiee(const ExtensionClass& cls) {
  if (cls.support.count(BasisIndex::tr()))
    fail(Errc::precondition, "class is tres ramifiee; its weight set is the single a-b=p-1 weight");
}

}  // namespace

PacketIndex w_max(const CharacterPair& pair, const PacketTable& table, const ExtensionClass& cls) {
  validate_class(pair, table.basis, cls);
  refuse_tres_ramifiee(cls);
  return max_of_admissible(pair.shape(), cls, admissible_indices(table, cls));
}

PacketIndex w_max(const CharacterPair& pair, const ExtensionClass& cls) {
  validate_class(pair, BasisTable(pair), cls);
  refuse_tres_ramifiee(cls);
  return max_of_admissible(pair.shape(), cls, admissible_indices(pair, cls));
}

SerreWeight tres_ramifiee_weight(const CharacterPair& pair) {
  const FieldShape& s = pair.shape();
  return weight_from_diff(s, ExpVector(static_cast<std::size_t>(s.f), s.p - 1), pair.n2_class());
}

WeightSetResult weight_set(const CharacterPair& pair, const PacketTable& table, const ExtensionClass& cls) {
  WeightSetResult res;
  validate_class(pair, table.basis, cls);
  res.tres_ramifiee = cls.support.count(BasisIndex::tr()) != 0;
  for (const auto& entry : table.weights)
    if (subset_of(cls.support, entry.span)) res.direct.push_back(entry.weight);
  if (res.tres_ramifiee) {
    res.weights.push_back(tres_ramifiee_weight(pair));
    return res;
  }
  res.w_max = w_max(pair, table, cls);
  for (const auto& [w, members] : table.packets) {
    bool below = true;
    for (std::size_t i = 0; i < w.size(); ++i) below = below && w[i] <= (*res.w_max)[i];
    if (!below) continue;
    for (std::size_t idx : members) res.weights.push_back(table.weights[idx].weight);
  }
  std::sort(res.weights.begin(), res.weights.end());
  return res;
}

WeightSetResult weight_set(const CharacterPair& pair, const ExtensionClass& cls) {
  return weight_set(pair, all_packets(pair), cls);
}

}  // namespace sw
