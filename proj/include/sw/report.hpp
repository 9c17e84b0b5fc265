#pragma once

// JSON, TSV and plain-text renderings of every command. All JSON documents
// carry "schema":"sw/1" and list their contents in a fixed order.

#include <optional>
#include <string>
#include <string_view>

#include "sw/congruence.hpp"
#include "sw/verify.hpp"

namespace sw {

enum class Format { json, tsv, pretty };

Format parse_format(std::string_view text);

inline constexpr const char* kSchema = "sw/1";

// Without a class the zero class is used. Packets and weight sets need weak
// genericity; otherwise only w_exp_ss is filled in.
std::string render_weights(const CharacterPair& pair, const std::optional<std::string>& cls, Format format);

std::string render_jah(const CharacterPair& pair, const SerreWeight& w, Format format);

std::string render_sset(const CharacterPair& pair, const SerreWeight& w, Format format);

std::string render_packets(const CharacterPair& pair, Format format);

std::string render_congruence(const FieldShape& shape, EmbeddingSet J, const ExpVector& c, std::optional<int> start,
                              Format format);

// Timing fields are left out when config.deterministic is set.
std::string render_verify(const SweepReport& report, Format format);

}  // namespace sw
