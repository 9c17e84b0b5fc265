// Command-line front end. Exit status: 0 success, 1 verify found violations,
// 2 bad arguments or a refused computation.

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sw/sw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int64_t> parse_ints(const std::string& text, const std::string& arg) {
  std::vector<int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int64_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw UsageError(arg + ": malformed integer '" + tok + "' in '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

sw_format parse_format(const std::string& text) {
  if (text == "json") return SW_FORMAT_JSON;
  if (text == "tsv") return SW_FORMAT_TSV;
  if (text == "pretty") return SW_FORMAT_PRETTY;
  throw UsageError("--format: expected json|tsv|pretty, got '" + text + "'");
}

struct Output {
  std::string format = "json";
  std::string path;
};

struct PairArgs {
  int64_t p = 0;
  int64_t f = 1;
  int64_t e = 1;
  std::string n;
  std::string n2;
  sw_flags flags{};
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "json | tsv | pretty")->capture_default_str();
  cmd->add_option("--out", out.path, "write output to this file");
}

void add_pair(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--p", a.p, "prime")->required();
  cmd->add_option("--f", a.f, "residue degree")->capture_default_str();
  cmd->add_option("--e", a.e, "ramification index")->capture_default_str();
  cmd->add_option("--n", a.n, "inertia exponents of chi1/chi2, CSV")->required();
  cmd->add_option("--n2", a.n2, "inertia exponents of chi2, CSV (default zeros)");
  cmd->add_flag("--chi-trivial", a.flags.chi_trivial, "chi is trivial");
  cmd->add_flag("--chi-cyclotomic", a.flags.chi_cyclotomic, "chi is the cyclotomic character");
  cmd->add_flag("--chi-inv-cyclotomic", a.flags.chi_inv_cyclotomic, "chi^-1 is the cyclotomic character");
  cmd->add_flag("--chi2-unramified", a.flags.chi2_unramified, "chi2 is unramified");
}

class Pair {
 public:
  explicit Pair(const PairArgs& a) {
    const auto n = parse_ints(a.n, "--n");
    auto n2 = a.n2.empty() ? std::vector<int64_t>(static_cast<std::size_t>(std::max<int64_t>(a.f, 0)), 0)
                           : parse_ints(a.n2, "--n2");
    const sw_status st = sw_pair_create(a.p, a.f, a.e, n.data(), n.size(), n2.data(), n2.size(), &a.flags, &pair_);
    if (st != SW_OK) throw UsageError(std::string(sw_status_name(st)) + ": " + sw_last_error());
  }
  ~Pair() { sw_pair_destroy(pair_); }
  Pair(const Pair&) = delete;
  Pair& operator=(const Pair&) = delete;
  const sw_pair* get() const { return pair_; }

 private:
  sw_pair* pair_ = nullptr;
};

// Takes ownership of text produced by the library.
void emit(const Output& out, sw_status st, char* text) {
  if (st != SW_OK) {
    sw_string_free(text);
    throw UsageError(std::string(sw_status_name(st)) + ": " + sw_last_error());
  }
  std::string s(text);
  sw_string_free(text);
  if (out.path.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw UsageError("--out: cannot open '" + out.path + "'");
  file << s;
  if (!file) throw UsageError("--out: write to '" + out.path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre weights of reducible two-dimensional mod p representations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sw_version());

  // Separate storage per subcommand: options bound to one variable from
  // several subcommands are reset by the ones that were not invoked.
  std::array<Output, 6> outs;
  std::array<PairArgs, 4> pas;
  std::string weight;
  std::optional<std::string> cls;
  int jobs = 1;
  bool deterministic = false;

  auto* weights = app.add_subcommand("weights", "semisimple weights, packets and the weight set of a class");
  add_pair(weights, pas[0]);
  weights->add_option("--class", cls, "class support: comma-separated m:k, un, tr");
  add_output(weights, outs[0]);

  auto* jah = app.add_subcommand("jah", "J^AH index set and dimension vector of a weight");
  add_pair(jah, pas[1]);
  jah->add_option("--weight", weight, "a0,...,a_{f-1}/b0,...,b_{f-1}")->required();
  add_output(jah, outs[1]);

  auto* sset = app.add_subcommand("sset", "witness pairs of a weight and the maximal one");
  add_pair(sset, pas[2]);
  sset->add_option("--weight", weight, "a0,...,a_{f-1}/b0,...,b_{f-1}")->required();
  add_output(sset, outs[2]);

  auto* packets = app.add_subcommand("packets", "all packets P_w with their subspaces");
  add_pair(packets, pas[3]);
  add_output(packets, outs[3]);

  int64_t cp = 0;
  int64_t cf = 1;
  std::string cj;
  std::string cc;
  int tau0 = -1;
  auto* congruence = app.add_subcommand("solve-congruence", "r(J, c) next to every solution by exhaustion");
  congruence->add_option("--p", cp, "prime")->required();
  congruence->add_option("--f", cf, "residue degree")->capture_default_str();
  congruence->add_option("--J", cj, "embedding indices in J, CSV (empty for none)");
  congruence->add_option("--c", cc, "target vector, CSV with entries in [1, p-1]")->required();
  congruence->add_option("--tau0", tau0, "starting embedding (default: smallest admissible)");
  add_output(congruence, outs[4]);

  std::string suites;
  std::string primes;
  int64_t max_f = 1;
  int64_t max_e = 1;
  std::optional<int64_t> max_ef;
  std::string filter = "weak";
  int64_t class_samples = 200;
  uint64_t seed = 0;
  bool no_rotation = false;
  auto* verify = app.add_subcommand("verify", "sweep a parameter grid and check every suite");
  verify->add_option("--suite", suites, "suite names, CSV (default: all)");
  verify->add_option("--primes", primes, "primes, CSV")->required();
  verify->add_option("--max-f", max_f)->capture_default_str();
  verify->add_option("--max-e", max_e)->capture_default_str();
  verify->add_option("--max-ef", max_ef, "bound on e*f (default max-f * max-e)");
  verify->add_option("--filter", filter, "all | weak | strong | boundary")->capture_default_str();
  verify->add_option("--class-samples", class_samples)->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--no-rotation-check", no_rotation, "skip full-orbit spot checks");
  verify->add_flag("--deterministic", deterministic, "omit timing fields");
  add_output(verify, outs[5]);

  std::array<int, 5> unused_jobs{};
  std::array<bool, 5> unused_det{};
  {
    std::size_t i = 0;
    for (auto* cmd : {weights, jah, sset, packets, congruence}) {
      cmd->add_option("--jobs", unused_jobs[i], "accepted for symmetry; single-threaded");
      cmd->add_flag("--deterministic", unused_det[i], "no effect outside verify");
      ++i;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::size_t which = 0;
    for (auto* cmd : {weights, jah, sset, packets, congruence, verify}) {
      if (cmd->parsed()) break;
      ++which;
    }
    const Output& out = outs[which];
    const sw_format fmt = parse_format(out.format);
    char* text = nullptr;
    if (weights->parsed()) {
      Pair pair(pas[which]);
      const sw_status st = sw_render_weights(pair.get(), cls ? cls->c_str() : nullptr, fmt, &text);
      emit(out, st, text);
    } else if (jah->parsed()) {
      Pair pair(pas[which]);
      const sw_status st = sw_render_jah(pair.get(), weight.c_str(), fmt, &text);
      emit(out, st, text);
    } else if (sset->parsed()) {
      Pair pair(pas[which]);
      const sw_status st = sw_render_sset(pair.get(), weight.c_str(), fmt, &text);
      emit(out, st, text);
    } else if (packets->parsed()) {
      Pair pair(pas[which]);
      const sw_status st = sw_render_packets(pair.get(), fmt, &text);
      emit(out, st, text);
    } else if (congruence->parsed()) {
      const auto J = parse_ints(cj, "--J");
      const auto c = parse_ints(cc, "--c");
      const sw_status st = sw_render_congruence(cp, cf, J.data(), J.size(), c.data(), c.size(), tau0, fmt, &text);
      emit(out, st, text);
    } else if (verify->parsed()) {
      const auto ps = parse_ints(primes, "--primes");
      sw_verify_config config;
      sw_verify_config_init(&config);
      config.primes = ps.data();
      config.primes_len = ps.size();
      config.max_f = max_f;
      config.max_e = max_e;
      config.max_ef = max_ef ? *max_ef : max_f * max_e;
      config.filter = filter.c_str();
      config.suites = suites.empty() ? nullptr : suites.c_str();
      config.class_samples = class_samples;
      config.jobs = jobs;
      config.seed = seed;
      config.rotation_check = no_rotation ? 0 : 1;
      config.deterministic = deterministic ? 1 : 0;
      int64_t violations = 0;
      const sw_status st = sw_verify(&config, fmt, &text, &violations);
      emit(out, st, text);
      if (violations > 0) {
        std::cerr << violations << " violation(s)\n";
        return kExitViolations;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
