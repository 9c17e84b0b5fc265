#pragma once

// Field shape, embedding indexing and inertia-character bookkeeping.
//
// Embeddings of the residue field are identified with indices i in [0, f):
// index i stands for tau_0 composed with the i-th power of Frobenius, so all
// index arithmetic is taken mod f.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sw/checked.hpp"

namespace sw {

using ExpVector = std::vector<Int>;

struct FieldShape {
  Int p = 0;
  Int f = 0;
  Int e = 0;
  Int q = 0;  // p^f - 1

  // Validates p prime, f >= 1, e >= 1. Throws Errc::input otherwise.
  static FieldShape make(Int p, Int f, Int e);

  int degree() const { return static_cast<int>(f); }
  int next(int i) const { return (i + 1) % degree(); }
  int prev(int i) const { return (i + degree() - 1) % degree(); }
  Int power(int k) const { return checked_pow(p, k); }
  // (p^f - 1)/(p - 1) = 1 + p + ... + p^{f-1}
  Int repunit() const { return q / (p - 1); }
  // Inertia class of the mod-p cyclotomic character: e (p^f - 1)/(p - 1) mod q.
  Int cyclotomic_class() const { return floor_mod(checked_mul(e, repunit()), q); }

  auto operator<=>(const FieldShape&) const = default;
};

bool is_prime(Int n);

// Bitmask subset of embedding indices.
class EmbeddingSet {
 public:
  constexpr EmbeddingSet() = default;
  constexpr explicit EmbeddingSet(std::uint32_t bits) : bits_(bits) {}
  static EmbeddingSet full(int f) { return EmbeddingSet((f >= 32) ? ~0u : ((1u << f) - 1u)); }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  EmbeddingSet with(int i) const { return EmbeddingSet(bits_ | (1u << i)); }
  EmbeddingSet without(int i) const { return EmbeddingSet(bits_ & ~(1u << i)); }
  std::vector<int> indices(int f) const;

  auto operator<=>(const EmbeddingSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Sum_{j<f} p^j a_{(i+j) mod f}, exact.
Int omega_sum(const FieldShape& shape, std::span<const Int> a, int i);

// omega_sum reduced into [0, q).
inline Int omega_class(const FieldShape& shape, std::span<const Int> a, int i) {
  return floor_mod(omega_sum(shape, a, i), shape.q);
}

// Normalized inertia exponents: n_i in [1, p], some n_i < p.
class InertiaCharacter {
 public:
  InertiaCharacter() = default;
  // Throws Errc::input when the normalization constraints fail.
  InertiaCharacter(const FieldShape& shape, ExpVector n);

  const ExpVector& exponents() const { return n_; }
  Int operator[](int i) const { return n_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(n_.size()); }

  auto operator<=>(const InertiaCharacter&) const = default;

 private:
  ExpVector n_;
};

// The unique normalized n with omega_sum(n, 0) = cls (mod q).
InertiaCharacter normalize_inertia_exponents(const FieldShape& shape, Int cls);

struct Period {
  int length = 1;   // f': minimal period under cyclic shift
  int repeats = 1;  // f'' = f / f'
};

Period period(std::span<const Int> n);

bool is_weakly_generic(const FieldShape& shape, std::span<const Int> n);
bool is_strongly_generic(const FieldShape& shape, std::span<const Int> n);

// Largest v with p^v | m. Throws Errc::input for m == 0.
Int p_adic_valuation(const FieldShape& shape, Int m);

ExpVector rotate(std::span<const Int> v, int k);

struct CharacterFlags {
  bool chi_trivial = false;
  bool chi_cyclotomic = false;
  bool chi_inv_cyclotomic = false;
  bool chi2_unramified = false;

  auto operator<=>(const CharacterFlags&) const = default;
};

// chi = chi1 chi2^{-1} via its inertia exponents, the inertia class of chi2,
// and caller-supplied flags about the full characters. Derived data
// (Omega values, period) is computed once at construction.
class CharacterPair {
 public:
  CharacterPair() = default;
  CharacterPair(FieldShape shape, InertiaCharacter n, Int n2_class, CharacterFlags flags = {});

  const FieldShape& shape() const { return shape_; }
  const InertiaCharacter& n() const { return n_; }
  const ExpVector& exponents() const { return n_.exponents(); }
  Int n2_class() const { return n2_class_; }
  const CharacterFlags& flags() const { return flags_; }
  const Period& period() const { return period_; }

  // Omega_{tau_i, n} (exact, not reduced).
  Int omega_n(int i) const { return omega_n_[static_cast<std::size_t>(i)]; }
  Int chi_class() const { return floor_mod(omega_n_[0], shape_.q); }
  Int chi1_class() const { return floor_mod(checked_add(chi_class(), n2_class_), shape_.q); }

  bool weakly_generic() const { return is_weakly_generic(shape_, exponents()); }
  bool strongly_generic() const { return is_strongly_generic(shape_, exponents()); }
  // Inertia-level conditions (independent of the flags).
  bool inertia_trivial() const { return chi_class() == 0; }
  bool inertia_cyclotomic() const { return chi_class() == shape_.cyclotomic_class(); }
  bool inertia_inv_cyclotomic() const {
    return floor_mod(-chi_class(), shape_.q) == shape_.cyclotomic_class();
  }

  CharacterPair with_flags(CharacterFlags flags) const;

 private:
  FieldShape shape_;
  InertiaCharacter n_;
  Int n2_class_ = 0;
  CharacterFlags flags_;
  Period period_;
  ExpVector omega_n_;
};

// Every inertia-level inconsistency of the flags; empty when consistent.
std::vector<std::string> validate_flags(const CharacterPair& pair);

std::string format_vector(std::span<const Int> v);

}  // namespace sw
