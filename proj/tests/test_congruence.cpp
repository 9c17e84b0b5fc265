#include <doctest.h>

#include "support.hpp"

using namespace sw;

TEST_CASE("delta_J") {
  const auto s = FieldShape::make(5, 2, 1);
  CHECK(delta_J(s, {3, 2}, 0, EmbeddingSet(0)) == ExpVector{3, 2});
  CHECK(delta_J(s, {3, 2}, 1, EmbeddingSet(3)) == ExpVector{3, 2});
  CHECK(delta_J(s, {0, 2}, 0, EmbeddingSet(0)) == ExpVector{5, 1});
  CHECK(delta_J(s, {6, 2}, 0, EmbeddingSet(0b10)) == ExpVector{1, 3});
  const auto s1 = FieldShape::make(5, 1, 1);
  CHECK(delta_J(s1, {0}, 0, EmbeddingSet(0)) == ExpVector{4});
  CHECK(delta_J(s1, {0}, 0, EmbeddingSet(1)) == ExpVector{6});
}

TEST_CASE("r_of examples") {
  const auto s1 = FieldShape::make(5, 2, 1);
  CHECK(r_of(s1, EmbeddingSet(0b11), {4, 2}) == ExpVector{4, 2});
  CHECK(r_of(s1, EmbeddingSet(0), {4, 2}) == ExpVector{5, 1});
  CHECK(initial_vector(s1, EmbeddingSet(0), {4, 2}) == ExpVector{0, 2});
  CHECK(r_of(FieldShape::make(5, 1, 1), EmbeddingSet(1), {2}) == ExpVector{2});
  CHECK(r_of_jx(test::c1(), {EmbeddingSet(0b11), {0, 0}}) == ExpVector{4, 2});
  CHECK(r_of_jx(test::c1(), {EmbeddingSet(0), {0, 0}}) == ExpVector{5, 1});
  CHECK(r_of_jx(test::c3(), {EmbeddingSet(1), {1}}) == ExpVector{1});
}

TEST_CASE("r_of input errors") {
  const auto s = FieldShape::make(5, 2, 1);
  CHECK_THROWS_AS(r_of(s, EmbeddingSet(0), {0, 2}), Error);
  CHECK_THROWS_AS(r_of(s, EmbeddingSet(0), {4, 5}), Error);
  CHECK_THROWS_AS(r_of(s, EmbeddingSet(0), {4, 2}, 1), Error);
  CHECK(r_of(s, EmbeddingSet(0), {4, 2}, 0) == ExpVector{5, 1});
  try {
    r_of_jx(test::c3(), {EmbeddingSet(1), {2}});
    FAIL("expected a precondition error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::precondition);
  }
}

TEST_CASE("brute solutions") {
  CHECK(brute_solutions(FieldShape::make(5, 2, 1), EmbeddingSet(0), {4, 2}) == std::vector<ExpVector>{{5, 1}});
  CHECK(brute_solutions(FieldShape::make(5, 1, 1), EmbeddingSet(1), {2}) == std::vector<ExpVector>{{2}});
  CHECK(brute_solutions(FieldShape::make(5, 1, 2), EmbeddingSet(1), {1}) == std::vector<ExpVector>{{1}, {5}});
  CHECK_THROWS_AS(brute_solutions(FieldShape::make(5, 2, 1), EmbeddingSet(0), {4, 2}, 10), Error);
}

TEST_CASE("r_of solves the congruence for every start") {
  for (Int p : {2, 3, 5, 7})
    for (Int f = 1; f <= 3; ++f) {
      if (checked_pow(p, f) > 400) continue;
      const auto s = FieldShape::make(p, f, 1);
      for (std::uint32_t J = 0; J < (1u << f); ++J) {
        const EmbeddingSet set(J);
        oracle::each_vector(static_cast<int>(f), 1, p - 1, [&](const ExpVector& c) {
          const auto sols = brute_solutions(s, set, c);
          auto sorted = sols;
          auto expected = oracle::congruence_solutions(p, J, c);
          std::sort(sorted.begin(), sorted.end());
          std::sort(expected.begin(), expected.end());
          CHECK(sorted == expected);
          CHECK((sols.size() == 1 || sols.size() == 2));
          if (sols.size() == 2) {
            ExpVector on_j(c.size()), off_j(c.size());
            for (int i = 0; i < s.degree(); ++i) {
              on_j[static_cast<std::size_t>(i)] = set.contains(i) ? p : 1;
              off_j[static_cast<std::size_t>(i)] = set.contains(i) ? 1 : p;
            }
            std::vector<ExpVector> pattern{on_j, off_j};
            std::sort(pattern.begin(), pattern.end());
            std::vector<ExpVector> got = sols;
            std::sort(got.begin(), got.end());
            CHECK(got == pattern);
          }
          const ExpVector r = r_of(s, set, c);
          CHECK(solves_congruence(s, set, c, r));
          CHECK(std::find(sols.begin(), sols.end(), r) != sols.end());
          for (int start : admissible_starts(s, set, c)) CHECK(r_of(s, set, c, start) == r);
        });
      }
    }
}
