#pragma once

// Exhaustive sweep that re-checks the structural statements about witness
// pairs, J^AH, packets and weight sets over grids of (p, f, e, n, flags).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sw/packets.hpp"

namespace sw {

enum class GenericityFilter { all, weak, strong, boundary };

GenericityFilter parse_filter(std::string_view text);
const char* filter_name(GenericityFilter f) noexcept;

// Suite names in canonical order.
const std::vector<std::string>& suite_names();

struct SweepConfig {
  std::vector<Int> primes;
  Int max_f = 1;
  Int max_e = 1;
  Int max_ef = 1;
  GenericityFilter filter = GenericityFilter::weak;
  std::vector<std::string> suites;
  Int class_samples = 200;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool rotation_check = true;
  bool deterministic = false;
};

// Errc::input for empty suites, unknown suite names, non-prime p or
// non-positive bounds.
void validate_config(const SweepConfig& config);

enum class Severity { violation, boundary_note };

const char* severity_name(Severity s) noexcept;

struct Finding {
  std::string suite;
  std::string check;
  Int p = 0;
  Int f = 0;
  Int e = 0;
  ExpVector n;
  Int n2 = 0;
  CharacterFlags flags;
  std::string subject;  // weight, witness pair, class or packet index
  std::string expected;
  std::string observed;
  Severity severity = Severity::violation;
};

bool operator<(const Finding& a, const Finding& b);

std::string format_flags(const CharacterFlags& flags);

// Checks not tied to the theorem hypotheses. Failures of these are recorded
// as boundary-notes on every input.
inline constexpr const char* kNoteChecks[] = {"ties",        "size2-outside-named", "exceptional", "tr-direct-extra",
                                              "tr-reading",  "k-saturation",        "all-k-reading"};

std::vector<Finding> check_gen_conj(const CharacterPair& pair);
std::vector<Finding> check_congruence(const CharacterPair& pair);
// sset-max, m-grid, props1-4 and cardinality together.
std::vector<Finding> check_structure(const CharacterPair& pair);
// Errc::precondition unless weakly generic.
std::vector<Finding> check_packets_and_decomposition(const CharacterPair& pair, Int class_samples,
                                                     std::uint64_t seed = 0);

struct SuiteTally {
  Int checks = 0;
  Int violations = 0;
  Int notes = 0;
  std::string status;  // ok | violations | notes | skipped | error
  std::string detail;
  double seconds = 0;

  bool operator==(const SuiteTally& o) const {
    return checks == o.checks && violations == o.violations && notes == o.notes && status == o.status;
  }
};

struct CellResult {
  Int p = 0;
  Int f = 0;
  Int e = 0;
  ExpVector n;
  bool weak = false;
  bool strong = false;
  bool boundary = false;
  Int flag_combinations = 0;
  std::map<std::string, SuiteTally> suites;  // keyed by suite name
  std::vector<Finding> findings;
  double seconds = 0;
};

struct BoundaryEntry {
  Int p = 0;
  Int f = 0;
  Int e = 0;
  ExpVector n;
  bool weak = false;
  bool pass = false;
  Int mismatches = 0;
};

struct RotationEntry {
  Int p = 0;
  Int f = 0;
  Int e = 0;
  ExpVector representative;
  Int orbit_size = 0;
  bool consistent = true;
  std::string detail;
};

struct SweepReport {
  SweepConfig config;
  std::vector<CellResult> cells;  // sorted by (p, f, e, n)
  std::vector<Finding> findings;  // sorted
  std::map<std::string, SuiteTally> totals;
  std::vector<BoundaryEntry> boundary;
  std::vector<RotationEntry> rotation;
  double seconds = 0;

  Int violations() const;
  Int notes() const;
};

// e = 1 with some n_i in {p-1, p}, or e = 2 with some n_i = p-1.
bool is_boundary_cell(const FieldShape& shape, const ExpVector& n);

// Normalized n with n equal to its lexicographically smallest rotation.
std::vector<ExpVector> rotation_representatives(const FieldShape& shape);

// Consistent flag choices for n2 = 0, in increasing bit order
// (trivial, cyclotomic, inverse cyclotomic, chi2 unramified).
std::vector<CharacterFlags> flag_combinations(const CharacterPair& base);

CellResult run_cell(const FieldShape& shape, const ExpVector& n, const SweepConfig& config);

SweepReport sweep(const SweepConfig& config);

}  // namespace sw
