#include "sw/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "sw/packets.hpp"

namespace sw {

namespace {

using Json = nlohmann::ordered_json;

Json index_json(const BasisIndex& a) {
  switch (a.kind) {
    case BasisIndex::Kind::un:
      return "UN";
    case BasisIndex::Kind::tr:
      return "TR";
    default:
      return Json{{"m", a.m}, {"k", a.k}};
  }
}

Json set_json(const IndexSet& s) {
  Json out = Json::array();
  for (const auto& a : s) out.push_back(index_json(a));
  return out;
}

Json weights_json(const std::vector<SerreWeight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(format_weight(w));
  return out;
}

Json embeddings_json(EmbeddingSet J, int f) {
  Json out = Json::array();
  for (int i : J.indices(f)) out.push_back(i);
  return out;
}

Json jx_json(const JXPair& jx, int f) { return Json{{"J", embeddings_json(jx.J, f)}, {"x", jx.x}}; }

Json flags_json(const CharacterFlags& fl) {
  return Json{{"chi_trivial", fl.chi_trivial},
              {"chi_cyclotomic", fl.chi_cyclotomic},
              {"chi_inv_cyclotomic", fl.chi_inv_cyclotomic},
              {"chi2_unramified", fl.chi2_unramified}};
}

Json input_json(const CharacterPair& pair) {
  const FieldShape& s = pair.shape();
  return Json{{"p", s.p},
              {"f", s.f},
              {"e", s.e},
              {"n", pair.exponents()},
              {"n2_class", pair.n2_class()},
              {"flags", flags_json(pair.flags())},
              {"period", Json::array({pair.period().length, pair.period().repeats})},
              {"weakly_generic", pair.weakly_generic()},
              {"strongly_generic", pair.strongly_generic()}};
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string list_text(const std::vector<SerreWeight>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += "  ";
    out += format_weight(w);
  }
  return out.empty() ? "(none)" : out;
}

std::string set_text(const IndexSet& s) {
  std::string out;
  for (const auto& a : s) {
    if (!out.empty()) out += ' ';
    out += format_index(a);
  }
  return out.empty() ? "(empty)" : out;
}

std::string embeddings_text(EmbeddingSet J, int f) {
  std::string out = "{";
  for (int i : J.indices(f)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

std::string input_text(const CharacterPair& pair) {
  const FieldShape& s = pair.shape();
  std::string out = "p=" + std::to_string(s.p) + " f=" + std::to_string(s.f) + " e=" + std::to_string(s.e) +
                    " n=" + format_vector(pair.exponents()) + " n2-class=" + std::to_string(pair.n2_class());
  const std::string fl = format_flags(pair.flags());
  if (!fl.empty()) out += " [" + fl + "]";
  out += pair.strongly_generic() ? " strongly generic" : pair.weakly_generic() ? " weakly generic" : " not generic";
  return out + "\n";
}

void tsv_row(std::ostringstream& os, std::string_view field, std::string_view key, std::string_view value) {
  os << field << '\t' << key << '\t' << value << '\n';
}

struct WeightsView {
  std::vector<SerreWeight> wexp;
  std::optional<PacketTable> table;
  std::optional<WeightSetResult> result;
  ExtensionClass cls;
};

WeightsView compute_weights(const CharacterPair& pair, const std::optional<std::string>& cls) {
  WeightsView v;
  if (cls) v.cls = parse_class(*cls);
  if (!pair.weakly_generic()) {
    if (!v.cls.support.empty())
      fail(Errc::precondition, "class: weight sets need weak genericity, n=" + format_vector(pair.exponents()));
    v.wexp = w_exp_ss(pair);
    return v;
  }
  v.table = all_packets(pair);
  for (const auto& e : v.table->weights) v.wexp.push_back(e.weight);
  v.result = weight_set(pair, *v.table, v.cls);
  return v;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "tsv") return Format::tsv;
  if (text == "pretty") return Format::pretty;
  fail(Errc::input, "format: expected json|tsv|pretty, got '" + std::string(text) + "'");
}

std::string render_weights(const CharacterPair& pair, const std::optional<std::string>& cls, Format format) {
  const WeightsView v = compute_weights(pair, cls);
  const auto& table = v.table;
  const auto& res = v.result;
  if (format == Format::json) {
    Json j = header("weights");
    j["input"] = input_json(pair);
    j["class"] = format_class(v.cls);
    j["w_exp_ss"] = weights_json(v.wexp);
    Json packets = nullptr;
    Json unmatched = nullptr;
    if (table) {
      packets = Json::array();
      for (const auto& [w, idx] : table->packets)
        packets.push_back(Json{{"w", w}, {"weights", weights_json(table->packet(w))}});
      unmatched = Json::array();
      for (std::size_t i : table->unmatched) unmatched.push_back(format_weight(table->weights[i].weight));
    }
    j["packets"] = packets;
    j["w_max"] = res && res->w_max ? Json(*res->w_max) : Json(nullptr);
    j["weight_set"] = res ? weights_json(res->weights) : Json(nullptr);
    j["direct"] = res ? weights_json(res->direct) : Json(nullptr);
    j["agree"] = res ? Json(res->weights == res->direct) : Json(nullptr);
    j["tres_ramifiee"] = res ? Json(res->tres_ramifiee) : Json(nullptr);
    j["unmatched"] = unmatched;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "field\tkey\tvalue\n";
    for (const auto& w : v.wexp) tsv_row(os, "w_exp_ss", "", format_weight(w));
    if (table) {
      for (const auto& [w, idx] : table->packets)
        for (const auto& s : table->packet(w)) tsv_row(os, "packet", format_vector(w), format_weight(s));
      for (std::size_t i : table->unmatched) tsv_row(os, "unmatched", "", format_weight(table->weights[i].weight));
    }
    if (res) {
      if (res->w_max) tsv_row(os, "w_max", "", format_vector(*res->w_max));
      tsv_row(os, "tres_ramifiee", "", res->tres_ramifiee ? "true" : "false");
      for (const auto& w : res->weights) tsv_row(os, "weight_set", "", format_weight(w));
    }
    return os.str();
  }
  os << input_text(pair);
  os << "class: " << (v.cls.support.empty() ? "0" : format_class(v.cls)) << "\n";
  os << "W^exp(ss) [" << v.wexp.size() << "]: " << list_text(v.wexp) << "\n";
  if (table) {
    for (const auto& [w, idx] : table->packets)
      if (!idx.empty()) os << "P_" << format_vector(w) << " [" << idx.size() << "]: " << list_text(table->packet(w)) << "\n";
    if (!table->unmatched.empty()) os << "unmatched: " << table->unmatched.size() << "\n";
  }
  if (res) {
    if (res->tres_ramifiee) os << "tres ramifiee\n";
    if (res->w_max) os << "w_max: " << format_vector(*res->w_max) << "\n";
    os << "W [" << res->weights.size() << "]: " << list_text(res->weights) << "\n";
    if (res->weights != res->direct) os << "direct path differs: " << list_text(res->direct) << "\n";
  } else {
    os << "packets and weight sets need weak genericity\n";
  }
  return os.str();
}

std::string render_jah(const CharacterPair& pair, const SerreWeight& w, Format format) {
  const BasisTable basis(pair);
  const JahData d = jah_data(pair, w);
  const IndexSet direct = jah_direct(pair, basis, d);
  const ExpVector ell = dimension_vector(d.jx, pair.shape());
  std::optional<IndexSet> fast;
  if (pair.weakly_generic()) fast = ell_rule_set(pair, basis, d);
  const bool exceptional = is_cyclotomic_exceptional(pair, d);
  const int f = pair.shape().degree();
  if (format == Format::json) {
    Json j = header("jah");
    j["input"] = input_json(pair);
    j["weight"] = format_weight(w);
    j["maximal"] = jx_json(d.jx, f);
    j["s"] = d.st.s;
    j["t"] = d.st.t;
    j["r"] = d.r;
    j["xi"] = d.xi;
    j["intervals"] = d.intervals;
    j["jah"] = set_json(direct);
    j["ell"] = ell;
    j["cyclotomic_exceptional"] = exceptional;
    j["fast"] = fast ? set_json(*fast) : Json(nullptr);
    j["agree"] = fast ? Json(*fast == direct) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "field\tkey\tvalue\n";
    tsv_row(os, "weight", "", format_weight(w));
    tsv_row(os, "J", "", embeddings_text(d.jx.J, f));
    tsv_row(os, "x", "", format_vector(d.jx.x));
    tsv_row(os, "s", "", format_vector(d.st.s));
    tsv_row(os, "t", "", format_vector(d.st.t));
    tsv_row(os, "r", "", format_vector(d.r));
    tsv_row(os, "xi", "", format_vector(d.xi));
    tsv_row(os, "ell", "", format_vector(ell));
    for (const auto& a : direct) tsv_row(os, "jah", "", format_index(a));
    if (fast) tsv_row(os, "agree", "", *fast == direct ? "true" : "false");
    return os.str();
  }
  os << input_text(pair);
  os << "weight " << format_weight(w) << "\n";
  os << "maximal witness J=" << embeddings_text(d.jx.J, f) << " x=" << format_vector(d.jx.x) << "\n";
  os << "s=" << format_vector(d.st.s) << " t=" << format_vector(d.st.t) << " r=" << format_vector(d.r) << "\n";
  os << "xi=" << format_vector(d.xi) << "\n";
  os << "J^AH [" << direct.size() << "]: " << set_text(direct) << "\n";
  os << "ell=" << format_vector(ell) << (exceptional ? " (cyclotomic-exceptional)" : "") << "\n";
  if (fast && *fast != direct) os << "ell-rule set differs: " << set_text(*fast) << "\n";
  return os.str();
}

std::string render_sset(const CharacterPair& pair, const SerreWeight& w, Format format) {
  const auto witnesses = enumerate_sset(pair, w);
  std::optional<JXPair> maximal;
  std::vector<JXPair> candidates;
  bool ambiguous = false;
  try {
    maximal = maximal_element(witnesses, w);
  } catch (const AmbiguityError& err) {
    ambiguous = true;
    candidates = err.candidates();
  }
  const int f = pair.shape().degree();
  if (format == Format::json) {
    Json j = header("sset");
    j["input"] = input_json(pair);
    j["weight"] = format_weight(w);
    Json list = Json::array();
    for (const auto& jx : witnesses) {
      Json item = jx_json(jx, f);
      item["s"] = s_of(jx, w);
      item["t"] = t_of(jx, w);
      list.push_back(item);
    }
    j["witnesses"] = list;
    j["maximal"] = maximal ? jx_json(*maximal, f) : Json(nullptr);
    j["ambiguous"] = ambiguous;
    Json cands = Json::array();
    for (const auto& jx : candidates) cands.push_back(jx_json(jx, f));
    j["candidates"] = cands;
    j["j_equals_t_less_r"] = maximal ? Json(j_equals_t_less_r(*maximal, w)) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "J\tx\ts\tt\tmaximal\n";
    for (const auto& jx : witnesses)
      os << embeddings_text(jx.J, f) << '\t' << format_vector(jx.x) << '\t' << format_vector(s_of(jx, w)) << '\t'
         << format_vector(t_of(jx, w)) << '\t' << (maximal && *maximal == jx ? "yes" : "no") << '\n';
    return os.str();
  }
  os << input_text(pair);
  os << "weight " << format_weight(w) << ": " << witnesses.size() << " witness pair(s)\n";
  for (const auto& jx : witnesses)
    os << "  J=" << embeddings_text(jx.J, f) << " x=" << format_vector(jx.x) << " s=" << format_vector(s_of(jx, w))
       << " t=" << format_vector(t_of(jx, w)) << (maximal && *maximal == jx ? "  maximal" : "") << "\n";
  if (ambiguous) os << "no unique maximal element (" << candidates.size() << " candidates)\n";
  return os.str();
}

std::string render_packets(const CharacterPair& pair, Format format) {
  const PacketTable table = all_packets(pair);
  const FieldShape& s = pair.shape();
  if (format == Format::json) {
    Json j = header("packets");
    j["input"] = input_json(pair);
    j["w_prime"] = table.basis.w_prime();
    j["basis"] = set_json(table.basis.full_w());
    Json lw = Json::array();
    for (const auto& [w, span] : table.l_w) lw.push_back(Json{{"w", w}, {"span", set_json(span)}});
    j["l_w"] = lw;
    Json spans = Json::array();
    for (const auto& e : table.weights) spans.push_back(Json{{"weight", format_weight(e.weight)}, {"span", set_json(e.span)}});
    j["weights"] = spans;
    Json packets = Json::array();
    for (const auto& [w, idx] : table.packets)
      packets.push_back(Json{{"w", w}, {"delta", delta_w(s, w)}, {"weights", weights_json(table.packet(w))}});
    j["packets"] = packets;
    Json unmatched = Json::array();
    for (std::size_t i : table.unmatched) unmatched.push_back(format_weight(table.weights[i].weight));
    j["unmatched"] = unmatched;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "w\tdelta\tsize\tweights\n";
    for (const auto& [w, idx] : table.packets) {
      std::string ws;
      for (const auto& x : table.packet(w)) ws += (ws.empty() ? "" : " ") + format_weight(x);
      os << format_vector(w) << '\t' << delta_w(s, w) << '\t' << idx.size() << '\t' << ws << '\n';
    }
    return os.str();
  }
  os << input_text(pair);
  for (const auto& [w, idx] : table.packets)
    os << "P_" << format_vector(w) << " L=" << set_text(table.l_w.at(w)) << " [" << idx.size()
       << "]: " << list_text(table.packet(w)) << "\n";
  if (!table.unmatched.empty()) os << "unmatched: " << table.unmatched.size() << "\n";
  return os.str();
}

std::string render_congruence(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, std::optional<int> start,
                              Format format) {
  const ExpVector r = r_of(shape, J, c, start);
  const auto starts = admissible_starts(shape, J, c);
  const ExpVector y0 = initial_vector(shape, J, c);
  const auto oracle = brute_solutions(shape, J, c);
  const bool solves = solves_congruence(shape, J, c, r);
  const bool listed = std::find(oracle.begin(), oracle.end(), r) != oracle.end();
  const int f = shape.degree();
  if (format == Format::json) {
    Json j = header("solve-congruence");
    j["input"] = Json{{"p", shape.p}, {"f", shape.f}, {"J", embeddings_json(J, f)}, {"c", c}};
    j["y0"] = y0;
    j["admissible_starts"] = starts;
    j["tau0"] = start ? Json(*start) : (starts.empty() ? Json(nullptr) : Json(starts.front()));
    j["r"] = r;
    j["solves"] = solves;
    j["oracle"] = oracle;
    j["in_oracle"] = listed;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "field\tkey\tvalue\n";
    tsv_row(os, "r", "", format_vector(r));
    tsv_row(os, "solves", "", solves ? "true" : "false");
    for (const auto& o : oracle) tsv_row(os, "oracle", "", format_vector(o));
    return os.str();
  }
  os << "p=" << shape.p << " f=" << shape.f << " J=" << embeddings_text(J, f) << " c=" << format_vector(c) << "\n";
  os << "y0=" << format_vector(y0) << "\n";
  os << "r=" << format_vector(r) << (solves ? "" : " (does not solve)") << "\n";
  os << "oracle [" << oracle.size() << "]:";
  for (const auto& o : oracle) os << ' ' << format_vector(o);
  os << "\n";
  return os.str();
}

namespace {

Json tally_json(const SuiteTally& t, bool timing) {
  Json j{{"checks", t.checks}, {"violations", t.violations}, {"boundary_notes", t.notes}, {"status", t.status}};
  if (!t.detail.empty()) j["detail"] = t.detail;
  if (timing) j["seconds"] = t.seconds;
  return j;
}

Json finding_json(const Finding& f) {
  return Json{{"suite", f.suite},
              {"check", f.check},
              {"severity", severity_name(f.severity)},
              {"p", f.p},
              {"f", f.f},
              {"e", f.e},
              {"n", f.n},
              {"n2_class", f.n2},
              {"flags", flags_json(f.flags)},
              {"subject", f.subject},
              {"expected", f.expected},
              {"observed", f.observed}};
}

Json config_json(const SweepConfig& c) {
  return Json{{"primes", c.primes},
              {"max_f", c.max_f},
              {"max_e", c.max_e},
              {"max_ef", c.max_ef},
              {"filter", filter_name(c.filter)},
              {"suites", c.suites},
              {"class_samples", c.class_samples},
              {"seed", c.seed},
              {"rotation_check", c.rotation_check}};
}

}  // namespace

std::string render_verify(const SweepReport& report, Format format) {
  const bool timing = !report.config.deterministic;
  if (format == Format::json) {
    Json j = header("verify");
    j["config"] = config_json(report.config);
    j["violations"] = report.violations();
    j["boundary_notes"] = report.notes();
    Json totals = Json::object();
    for (const auto& [name, t] : report.totals) totals[name] = tally_json(t, timing);
    j["totals"] = totals;
    Json cells = Json::array();
    for (const auto& c : report.cells) {
      Json suites = Json::object();
      for (const auto& [name, t] : c.suites) suites[name] = tally_json(t, timing);
      Json cell{{"p", c.p},         {"f", c.f},           {"e", c.e},
                {"n", c.n},         {"weak", c.weak},     {"strong", c.strong},
                {"boundary", c.boundary}, {"flag_combinations", c.flag_combinations}, {"suites", suites}};
      if (timing) cell["seconds"] = c.seconds;
      cells.push_back(cell);
    }
    j["cells"] = cells;
    Json boundary = Json::array();
    for (const auto& b : report.boundary)
      boundary.push_back(Json{{"p", b.p},
                              {"f", b.f},
                              {"e", b.e},
                              {"n", b.n},
                              {"weak", b.weak},
                              {"gen_conj", b.pass ? "pass" : "fail"},
                              {"mismatches", b.mismatches}});
    j["boundary"] = boundary;
    Json rotation = Json::array();
    for (const auto& r : report.rotation) {
      Json item{{"p", r.p},         {"f", r.f}, {"e", r.e}, {"representative", r.representative},
                {"orbit_size", r.orbit_size}, {"consistent", r.consistent}};
      if (!r.detail.empty()) item["detail"] = r.detail;
      rotation.push_back(item);
    }
    j["rotation"] = rotation;
    Json findings = Json::array();
    for (const auto& f : report.findings) findings.push_back(finding_json(f));
    j["findings"] = findings;
    if (timing) j["seconds"] = report.seconds;
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::tsv) {
    os << "p\tf\te\tn\tsuite\tchecks\tviolations\tboundary_notes\tstatus\n";
    for (const auto& c : report.cells)
      for (const auto& [name, t] : c.suites)
        os << c.p << '\t' << c.f << '\t' << c.e << '\t' << format_vector(c.n) << '\t' << name << '\t' << t.checks
           << '\t' << t.violations << '\t' << t.notes << '\t' << t.status << '\n';
    return os.str();
  }
  os << "cells: " << report.cells.size() << "  filter: " << filter_name(report.config.filter) << "\n";
  for (const auto& [name, t] : report.totals) {
    os << "  " << name << ": " << t.checks << " checks, " << t.violations << " violations, " << t.notes
       << " boundary-notes";
    if (timing) os << ", " << t.seconds << " s";
    os << "\n";
  }
  for (const auto& f : report.findings)
    if (f.severity == Severity::violation)
      os << "violation " << f.suite << "/" << f.check << " p=" << f.p << " f=" << f.f << " e=" << f.e
         << " n=" << format_vector(f.n) << " [" << format_flags(f.flags) << "] " << f.subject << ": expected "
         << f.expected << ", observed " << f.observed << "\n";
  if (!report.boundary.empty()) {
    os << "boundary cells (gen-conj equivalence):\n";
    for (const auto& b : report.boundary)
      os << "  p=" << b.p << " f=" << b.f << " e=" << b.e << " n=" << format_vector(b.n) << " "
         << (b.pass ? "pass" : "fail") << (b.mismatches ? " (" + std::to_string(b.mismatches) + " mismatches)" : "")
         << "\n";
  }
  Int inconsistent = 0;
  for (const auto& r : report.rotation) inconsistent += r.consistent ? 0 : 1;
  if (!report.rotation.empty())
    os << "rotation orbits checked: " << report.rotation.size() << ", inconsistent: " << inconsistent << "\n";
  os << "total: " << report.violations() << " violations, " << report.notes() << " boundary-notes";
  if (timing) os << ", " << report.seconds << " s";
  os << "\n";
  return os.str();
}

}  // namespace sw
