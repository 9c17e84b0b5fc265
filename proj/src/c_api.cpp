#include "sw/sw.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sw/packets.hpp"
#include "sw/report.hpp"

struct sw_pair {
  sw::CharacterPair pair;
};

namespace {

thread_local std::string last_error;

sw_status to_status(sw::Errc code) {
  switch (code) {
    case sw::Errc::input:
      return SW_ERR_INPUT;
    case sw::Errc::precondition:
      return SW_ERR_PRECONDITION;
    case sw::Errc::not_a_weight:
      return SW_ERR_NOT_A_WEIGHT;
    case sw::Errc::budget:
      return SW_ERR_BUDGET;
    case sw::Errc::invariant:
      return SW_ERR_INVARIANT;
    case sw::Errc::ambiguity:
      return SW_ERR_AMBIGUITY;
    case sw::Errc::overflow:
      return SW_ERR_OVERFLOW;
  }
  return SW_ERR_INTERNAL;
}

template <typename Fn>
sw_status guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return SW_OK;
  } catch (const sw::Error& err) {
    last_error = err.what();
    return to_status(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& err) {
    last_error = err.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SW_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) sw::fail(sw::Errc::input, std::string(what) + ": null pointer");
}

sw::ExpVector vec(const int64_t* data, size_t len, const char* what) {
  if (len && !data) sw::fail(sw::Errc::input, std::string(what) + ": null pointer");
  return sw::ExpVector(data, data + len);
}

sw::Format format_of(sw_format f) {
  switch (f) {
    case SW_FORMAT_JSON:
      return sw::Format::json;
    case SW_FORMAT_TSV:
      return sw::Format::tsv;
    case SW_FORMAT_PRETTY:
      return sw::Format::pretty;
  }
  sw::fail(sw::Errc::input, "format: unknown value " + std::to_string(static_cast<int>(f)));
}

template <typename Fn>
void with_prefix(const char* what, Fn&& fn) {
  try {
    fn();
  } catch (const sw::Error& err) {
    throw sw::Error(err.code(), std::string(what) + ": " + err.what());
  }
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) out.push_back(tok);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "1.0.0"; }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK:
      return "ok";
    case SW_ERR_INTERNAL:
      return "internal";
    default:
      return sw::errc_name(static_cast<sw::Errc>(status));
  }
}

const char* sw_last_error(void) { return last_error.c_str(); }

void sw_string_free(char* s) { std::free(s); }

void sw_verify_config_init(sw_verify_config* config) {
  if (!config) return;
  *config = sw_verify_config{};
  config->max_f = 1;
  config->max_e = 1;
  config->max_ef = 1;
  config->class_samples = 200;
  config->jobs = 1;
  config->rotation_check = 1;
}

sw_status sw_pair_create(int64_t p, int64_t f, int64_t e, const int64_t* n, size_t n_len, const int64_t* n2,
                         size_t n2_len, const sw_flags* flags, sw_pair** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    sw::FieldShape shape;
    with_prefix("shape", [&] { shape = sw::FieldShape::make(p, f, e); });
    sw::InertiaCharacter chi;
    with_prefix("n", [&] { chi = sw::InertiaCharacter(shape, vec(n, n_len, "n")); });
    sw::Int n2_class = 0;
    with_prefix("n2", [&] {
      const sw::ExpVector v = vec(n2, n2_len, "n2");
      if (static_cast<sw::Int>(v.size()) != shape.f) sw::fail(sw::Errc::input, "need f=" + std::to_string(f) + " entries");
      n2_class = sw::omega_class(shape, v, 0);
    });
    sw::CharacterFlags fl;
    if (flags) {
      fl.chi_trivial = flags->chi_trivial != 0;
      fl.chi_cyclotomic = flags->chi_cyclotomic != 0;
      fl.chi_inv_cyclotomic = flags->chi_inv_cyclotomic != 0;
      fl.chi2_unramified = flags->chi2_unramified != 0;
    }
    sw::CharacterPair pair(shape, chi, n2_class, fl);
    const auto problems = sw::validate_flags(pair);
    if (!problems.empty()) sw::fail(sw::Errc::input, "flags: " + problems.front());
    *out = new sw_pair{std::move(pair)};
  });
}

void sw_pair_destroy(sw_pair* pair) { delete pair; }

int sw_pair_weakly_generic(const sw_pair* pair) { return pair && pair->pair.weakly_generic() ? 1 : 0; }

int sw_pair_strongly_generic(const sw_pair* pair) { return pair && pair->pair.strongly_generic() ? 1 : 0; }

sw_status sw_pair_wexp_count(const sw_pair* pair, int64_t* out) {
  return guard([&] {
    need(pair, "pair");
    need(out, "out");
    *out = static_cast<int64_t>(sw::w_exp_ss(pair->pair).size());
  });
}

sw_status sw_render_weights(const sw_pair* pair, const char* cls, sw_format format, char** out) {
  return guard([&] {
    need(pair, "pair");
    need(out, "out");
    *out = nullptr;
    std::optional<std::string> c;
    if (cls) c = cls;
    *out = copy_out(sw::render_weights(pair->pair, c, format_of(format)));
  });
}

sw_status sw_render_jah(const sw_pair* pair, const char* weight, sw_format format, char** out) {
  return guard([&] {
    need(pair, "pair");
    need(weight, "weight");
    need(out, "out");
    *out = nullptr;
    const sw::SerreWeight w = sw::parse_weight(pair->pair.shape(), weight);
    *out = copy_out(sw::render_jah(pair->pair, w, format_of(format)));
  });
}

sw_status sw_render_sset(const sw_pair* pair, const char* weight, sw_format format, char** out) {
  return guard([&] {
    need(pair, "pair");
    need(weight, "weight");
    need(out, "out");
    *out = nullptr;
    const sw::SerreWeight w = sw::parse_weight(pair->pair.shape(), weight);
    *out = copy_out(sw::render_sset(pair->pair, w, format_of(format)));
  });
}

sw_status sw_render_packets(const sw_pair* pair, sw_format format, char** out) {
  return guard([&] {
    need(pair, "pair");
    need(out, "out");
    *out = nullptr;
    *out = copy_out(sw::render_packets(pair->pair, format_of(format)));
  });
}

sw_status sw_render_congruence(int64_t p, int64_t f, const int64_t* J, size_t J_len, const int64_t* c, size_t c_len,
                               int tau0, sw_format format, char** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    sw::FieldShape shape;
    with_prefix("shape", [&] { shape = sw::FieldShape::make(p, f, 1); });
    sw::EmbeddingSet set;
    for (int64_t i : vec(J, J_len, "J")) {
      if (i < 0 || i >= f) sw::fail(sw::Errc::input, "J: index " + std::to_string(i) + " outside [0, f)");
      set = set.with(static_cast<int>(i));
    }
    const sw::ExpVector cv = vec(c, c_len, "c");
    if (static_cast<sw::Int>(cv.size()) != f) sw::fail(sw::Errc::input, "c: need f=" + std::to_string(f) + " entries");
    for (sw::Int v : cv)
      if (v < 1 || v > p - 1) sw::fail(sw::Errc::input, "c: entry " + std::to_string(v) + " outside [1, p-1]");
    std::optional<int> start;
    if (tau0 >= 0) start = tau0;
    with_prefix("tau0", [&] { *out = copy_out(sw::render_congruence(shape, set, cv, start, format_of(format))); });
  });
}

sw_status sw_verify(const sw_verify_config* config, sw_format format, char** out, int64_t* violations) {
  return guard([&] {
    need(config, "config");
    need(out, "out");
    *out = nullptr;
    sw::SweepConfig c;
    c.primes = vec(config->primes, config->primes_len, "primes");
    c.max_f = config->max_f;
    c.max_e = config->max_e;
    c.max_ef = config->max_ef;
    if (config->filter) c.filter = sw::parse_filter(config->filter);
    c.suites = config->suites ? split(config->suites) : sw::suite_names();
    c.class_samples = config->class_samples;
    c.jobs = config->jobs;
    c.seed = config->seed;
    c.rotation_check = config->rotation_check != 0;
    c.deterministic = config->deterministic != 0;
    const sw::SweepReport report = sw::sweep(c);
    if (violations) *violations = report.violations();
    *out = copy_out(sw::render_verify(report, format_of(format)));
  });
}

}  // extern "C"
