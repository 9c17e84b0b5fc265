#pragma once

// Coordinate subspaces L_w, weight packets P_w and the weight set of a
// non-split extension given by the coordinate support of its class.

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "sw/jah.hpp"

namespace sw {

using PacketIndex = ExpVector;  // w_i in [0, e]

// {(m_{i,j}, k_of_embedding(i)) : j < e - w_i} plus UN for a trivial chi.
// Errc::precondition unless weakly generic; Errc::input for a malformed w.
IndexSet l_w_span(const CharacterPair& pair, const PacketIndex& w);

// jah_direct with its markers.
IndexSet l_sigma_span(const CharacterPair& pair, const SerreWeight& w);

// All (e+1)^f packet indices in increasing little-endian order.
std::vector<PacketIndex> all_packet_indices(const FieldShape& shape);

// |{i : w_i in {0, e}}|
int delta_w(const FieldShape& shape, const PacketIndex& w);

enum class WexpMethod {
  enumerate,     // every weight, every witness pair
  indexed,       // per (a-b, J, x): solve the chi_1 congruence for the b-class, test the chi_2 one
  constructive,  // sigma(J, x) built from r(J, x), plus the two all-p weights; needs weak genericity
  automatic,     // enumerate when p^{2f} is small, indexed otherwise
};

inline constexpr Int kEnumerateThreshold = 20'000;

// Sorted, duplicate-free.
std::vector<SerreWeight> w_exp_ss(const CharacterPair& pair, WexpMethod method = WexpMethod::automatic,
                                  Int budget = kDefaultWeightBudget);

struct WeightEntry {
  SerreWeight weight;
  JahData data;
  IndexSet span;  // L_sigma with markers
};

struct PacketTable {
  BasisTable basis;
  std::map<PacketIndex, IndexSet> l_w;  // every packet index
  std::vector<WeightEntry> weights;  // sorted by weight
  std::map<PacketIndex, std::vector<std::size_t>> packets;  // every index present, possibly empty
  std::vector<std::size_t> unmatched;

  std::vector<SerreWeight> packet(const PacketIndex& w) const;
};

// Spans compared with the TR coordinate removed. Needs weak genericity.
PacketTable all_packets(const CharacterPair& pair, WexpMethod method = WexpMethod::automatic);
// Reuses witness data computed for another flag choice on the same inertia
// data; markers and spans are recomputed for this pair.
PacketTable all_packets(const CharacterPair& pair, std::vector<WeightEntry> entries);

std::vector<SerreWeight> packet(const CharacterPair& pair, const PacketIndex& w);

struct ExtensionClass {
  IndexSet support;
};

// Comma-separated "m:k", "un", "tr"; empty text is the zero class.
ExtensionClass parse_class(std::string_view text);
std::string format_class(const ExtensionClass& cls);

// Errc::input naming the first illegal coordinate.
void validate_class(const CharacterPair& pair, const BasisTable& basis, const ExtensionClass& cls);

bool is_tres_ramifiee(const CharacterPair& pair, const ExtensionClass& cls);

// {w : support in L_w}
std::vector<PacketIndex> admissible_indices(const PacketTable& table, const ExtensionClass& cls);
std::vector<PacketIndex> admissible_indices(const CharacterPair& pair, const ExtensionClass& cls);

// Componentwise max of admissible_indices; Errc::invariant if the max is not
// itself admissible, Errc::precondition for a tres ramifiee class.
PacketIndex w_max(const CharacterPair& pair, const PacketTable& table, const ExtensionClass& cls);
PacketIndex w_max(const CharacterPair& pair, const ExtensionClass& cls);

struct WeightSetResult {
  bool tres_ramifiee = false;
  std::optional<PacketIndex> w_max;
  std::vector<SerreWeight> weights;  // packet-union path or the tres ramifiee weight
  std::vector<SerreWeight> direct;   // {sigma in W^exp : support in L_sigma}
};

WeightSetResult weight_set(const CharacterPair& pair, const PacketTable& table, const ExtensionClass& cls);
WeightSetResult weight_set(const CharacterPair& pair, const ExtensionClass& cls);

// a - b = p - 1 everywhere and b-class n2.
SerreWeight tres_ramifiee_weight(const CharacterPair& pair);

}  // namespace sw
