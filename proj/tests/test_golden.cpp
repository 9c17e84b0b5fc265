// Worked contexts C1 (p=5, f=2, e=1, n=(4,2)), C2 (p=5, f=1, e=1, n=(2)) and
// C3 (p=5, f=1, e=2, n=(2), chi and chi^-1 cyclotomic). Frozen values were
// produced by the oracle; each case checks the oracle and the library.

#include <doctest.h>

#include "support.hpp"

using namespace sw;
using test::c1;
using test::c2;
using test::c3;

namespace {

std::vector<std::string> oracle_names(const std::vector<oracle::Weight>& ws, const CharacterPair& pair) {
  return test::names(test::to_sw(pair, ws));
}

IndexSet ca(std::initializer_list<std::pair<Int, Int>> items) {
  IndexSet out;
  for (auto [m, k] : items) out.insert(BasisIndex::ca(m, k));
  return out;
}

SerreWeight wt(const CharacterPair& pair, const char* text) { return parse_weight(pair.shape(), text); }

}  // namespace

TEST_CASE("golden: W' sets") {
  const std::vector<std::vector<Int>> g1{{14, 22}}, g2{{2}}, g3{{2}, {6}};
  CHECK(oracle::basis(test::ctx_of(c1())).wprime == g1);
  CHECK(oracle::basis(test::ctx_of(c2())).wprime == g2);
  CHECK(oracle::basis(test::ctx_of(c3())).wprime == g3);
  CHECK(w_prime_sets(c1()) == g1);
  CHECK(w_prime_sets(c2()) == g2);
  CHECK(w_prime_sets(c3()) == g3);
  CHECK(BasisTable(c1()).full_w() == ca({{14, 0}, {22, 0}}));
}

TEST_CASE("golden: semisimple weight sets") {
  const std::vector<std::string> g1{"3,1/0,0", "3,6/3,4", "8,2/4,2", "8,3/4,1"};
  const std::vector<std::string> g2{"1/0", "3/2"};
  const std::vector<std::string> g3{"0/0", "2/2", "3/1", "4/0", "5/3", "6/2"};
  for (auto [pair, golden] : {std::pair{c1(), g1}, std::pair{c2(), g2}, std::pair{c3(), g3}}) {
    CHECK(oracle_names(oracle::wexp(test::ctx_of(pair)), pair) == golden);
    CHECK(test::names(w_exp_ss(pair, WexpMethod::enumerate)) == golden);
    CHECK(test::names(w_exp_ss(pair, WexpMethod::indexed)) == golden);
    CHECK(test::names(w_exp_ss(pair, WexpMethod::constructive)) == golden);
  }
}

TEST_CASE("golden: xi vectors and intervals") {
  struct Row {
    CharacterPair pair;
    const char* weight;
    ExpVector xi;
    std::vector<std::vector<Int>> intervals;
  };
  const std::vector<Row> rows{
      {c1(), "3,1/0,0", {110, 70}, {{0}, {0}}},
      {c1(), "3,6/3,4", {14, 70}, {{}, {0}}},
      {c1(), "8,3/4,1", {110, 22}, {{0}, {}}},
      {c2(), "1/0", {10}, {{0}}},
      {c2(), "3/2", {-2}, {{}}},
      {c3(), "4/0", {30}, {{0, 5}}},
      {c3(), "5/3", {14}, {{1}}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.weight);
    const SerreWeight w = wt(row.pair, row.weight);
    const auto d = jah_data(row.pair, w);
    CHECK(d.xi == row.xi);
    CHECK(d.intervals == row.intervals);
    const auto o = oracle::jah(test::ctx_of(row.pair), {w.a, w.b});
    CHECK(o.xi == row.xi);
    std::vector<std::vector<Int>> oi;
    for (const auto& s : o.intervals) oi.emplace_back(s.begin(), s.end());
    CHECK(oi == row.intervals);
  }
}

TEST_CASE("golden: J^AH sets and dimension vectors") {
  struct Row {
    CharacterPair pair;
    const char* weight;
    IndexSet jah;
    ExpVector ell;
  };
  const std::vector<Row> rows{
      {c1(), "3,1/0,0", ca({{14, 0}, {22, 0}}), {1, 1}},
      {c1(), "3,6/3,4", ca({{14, 0}}), {1, 0}},
      {c1(), "8,2/4,2", {}, {0, 0}},
      {c1(), "8,3/4,1", ca({{22, 0}}), {0, 1}},
      {c2(), "1/0", ca({{2, 0}}), {1}},
      {c2(), "3/2", {}, {0}},
      {c3(), "0/0", ca({{2, 0}, {6, 0}}), {2}},
      {c3(), "2/2", {}, {0}},
      {c3(), "3/1", ca({{2, 0}}), {1}},
      {c3(), "4/0", ca({{2, 0}, {6, 0}}), {2}},
      {c3(), "5/3", ca({{2, 0}}), {1}},
      {c3(), "6/2", {}, {0}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.weight);
    const SerreWeight w = wt(row.pair, row.weight);
    CHECK(jah_direct(row.pair, w) == row.jah);
    CHECK(jah_fast(row.pair, w) == row.jah);
    CHECK(dimension_vector(row.pair, w) == row.ell);
    const auto ctx = test::ctx_of(row.pair);
    const auto o = oracle::jah(ctx, {w.a, w.b});
    CHECK(test::to_sw(o.set) == row.jah);
    CHECK(oracle::ell(ctx, o.jx) == row.ell);
  }
}

TEST_CASE("golden: packets") {
  using Packets = std::map<PacketIndex, std::vector<std::string>>;
  const Packets g1{{{0, 0}, {"3,1/0,0"}}, {{0, 1}, {"3,6/3,4"}}, {{1, 0}, {"8,3/4,1"}}, {{1, 1}, {"8,2/4,2"}}};
  const Packets g2{{{0}, {"1/0"}}, {{1}, {"3/2"}}};
  const Packets g3{{{0}, {"0/0", "4/0"}}, {{1}, {"3/1", "5/3"}}, {{2}, {"2/2", "6/2"}}};
  for (auto [pair, golden] : {std::pair{c1(), g1}, std::pair{c2(), g2}, std::pair{c3(), g3}}) {
    const PacketTable table = all_packets(pair);
    Packets got;
    for (const auto& [w, idx] : table.packets) got[w] = test::names(table.packet(w));
    CHECK(got == golden);
    CHECK(table.unmatched.empty());
    Packets oracle_got;
    for (const auto& [w, ws] : oracle::packets(test::ctx_of(pair))) oracle_got[w] = oracle_names(ws, pair);
    CHECK(oracle_got == golden);
  }
}

TEST_CASE("golden: L_w spans") {
  CHECK(l_w_span(c1(), {0, 0}) == ca({{14, 0}, {22, 0}}));
  CHECK(l_w_span(c1(), {1, 0}) == ca({{22, 0}}));
  CHECK(l_w_span(c1(), {0, 1}) == ca({{14, 0}}));
  CHECK(l_w_span(c2(), {1}).empty());
  CHECK(l_w_span(c3(), {1}) == ca({{2, 0}}));
  CHECK(test::to_sw(oracle::l_w(test::ctx_of(c1()), {1, 0})) == ca({{22, 0}}));
  CHECK(test::to_sw(oracle::l_w(test::ctx_of(c3()), {0})) == ca({{2, 0}, {6, 0}}));
}

TEST_CASE("golden: w_max and weight sets") {
  const auto cls = [](const char* t) { return parse_class(t); };
  CHECK(w_max(c1(), cls("14:0")) == PacketIndex{0, 1});
  CHECK(w_max(c2(), cls("")) == PacketIndex{1});
  CHECK(w_max(c2(), cls("2:0")) == PacketIndex{0});
  CHECK(oracle::w_max(test::ctx_of(c1()), {{0, 14, 0}}) == oracle::V{0, 1});
  CHECK(oracle::w_max(test::ctx_of(c2()), {}) == oracle::V{1});
  CHECK(oracle::w_max(test::ctx_of(c2()), {{0, 2, 0}}) == oracle::V{0});

  const auto r1 = weight_set(c1(), cls("14:0"));
  CHECK(test::names(r1.weights) == std::vector<std::string>{"3,1/0,0", "3,6/3,4"});
  CHECK(r1.weights == r1.direct);
  CHECK(oracle_names(oracle::weight_set_direct(test::ctx_of(c1()), {{0, 14, 0}}), c1()) == test::names(r1.weights));

  CHECK(test::names(weight_set(c2(), cls("2:0")).weights) == std::vector<std::string>{"1/0"});
  CHECK(test::names(weight_set(c2(), cls("")).weights) == std::vector<std::string>{"1/0", "3/2"});

  const auto cyc = test::make_pair(5, 1, 1, {1}, test::flags(false, true, false, true));
  const auto tr = weight_set(cyc, cls("tr"));
  CHECK(tr.tres_ramifiee);
  CHECK(test::names(tr.weights) == std::vector<std::string>{"4/0"});
  CHECK(oracle_names(oracle::weight_set_direct(test::ctx_of(cyc), {{2, 0, 0}}), cyc) == std::vector<std::string>{"4/0"});
}

TEST_CASE("golden: congruence solutions") {
  const auto s1 = FieldShape::make(5, 2, 1);
  CHECK(r_of(s1, EmbeddingSet(0b11), {4, 2}) == ExpVector{4, 2});
  CHECK(r_of(s1, EmbeddingSet(0), {4, 2}) == ExpVector{5, 1});
  CHECK(brute_solutions(s1, EmbeddingSet(0), {4, 2}) == std::vector<ExpVector>{{5, 1}});
  CHECK(oracle::congruence_solutions(5, 0, {4, 2}) == std::vector<oracle::V>{{5, 1}});
  const auto s3 = FieldShape::make(5, 1, 2);
  CHECK(r_of(s3, EmbeddingSet(1), {1}) == ExpVector{1});
  CHECK(brute_solutions(s3, EmbeddingSet(1), {1}) == std::vector<ExpVector>{{1}, {5}});
  CHECK(oracle::congruence_solutions(5, 1, {1}) == std::vector<oracle::V>{{1}, {5}});
}
