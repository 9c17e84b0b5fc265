#include "sw/ground.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::input: return "input";
    case Errc::precondition: return "precondition";
    case Errc::not_a_weight: return "not-a-weight";
    case Errc::budget: return "budget";
    case Errc::invariant: return "invariant";
    case Errc::ambiguity: return "ambiguity";
    case Errc::overflow: return "overflow";
  }
  return "unknown";
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldShape FieldShape::make(Int p, Int f, Int e) {
  if (!is_prime(p)) fail(Errc::input, "p=" + std::to_string(p) + " is not prime");
  if (f < 1 || f > 31) fail(Errc::input, "f=" + std::to_string(f) + " outside [1, 31]");
  if (e < 1) fail(Errc::input, "e=" + std::to_string(e) + " must be >= 1");
  FieldShape s;
  s.p = p;
  s.f = f;
  s.e = e;
  s.q = checked_sub(checked_pow(p, f), 1);
  return s;
}

std::vector<int> EmbeddingSet::indices(int f) const {
  std::vector<int> out;
  for (int i = 0; i < f; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Int omega_sum(const FieldShape& shape, std::span<const Int> a, int i) {
  if (static_cast<Int>(a.size()) != shape.f)
    fail(Errc::input, "vector length " + std::to_string(a.size()) + " != f=" + std::to_string(shape.f));
  const int f = shape.degree();
  Int total = 0;
  Int pj = 1;
  for (int j = 0; j < f; ++j) {
    total = checked_add(total, checked_mul(pj, a[static_cast<std::size_t>(((i % f) + f + j) % f)]));
    if (j + 1 < f) pj = checked_mul(pj, shape.p);
  }
  return total;
}

InertiaCharacter::InertiaCharacter(const FieldShape& shape, ExpVector n) : n_(std::move(n)) {
  if (static_cast<Int>(n_.size()) != shape.f)
    fail(Errc::input, "inertia exponents need length f=" + std::to_string(shape.f));
  bool some_below_p = false;
  for (Int v : n_) {
    if (v < 1 || v > shape.p)
      fail(Errc::input, "inertia exponent " + std::to_string(v) + " outside [1, p]");
    some_below_p |= v < shape.p;
  }
  if (!some_below_p) fail(Errc::input, "inertia exponents may not all equal p");
}

// Vectors in [1,p]^f other than the all-p vector have Omega values filling the
// q consecutive integers [q/(p-1), p q/(p-1) - 1]; the digits are those of
// the bijective base-p expansion of the unique value in the target class.
InertiaCharacter normalize_inertia_exponents(const FieldShape& shape, Int cls) {
  const Int lo = shape.repunit();
  Int value = checked_add(lo, floor_mod(checked_sub(cls, lo), shape.q));
  ExpVector n;
  n.reserve(static_cast<std::size_t>(shape.f));
  for (int i = 0; i < shape.degree(); ++i) {
    Int d = value % shape.p;
    if (d == 0) d = shape.p;
    n.push_back(d);
    value = (value - d) / shape.p;
  }
  if (value != 0) fail(Errc::invariant, "bijective expansion did not terminate in f digits");
  return InertiaCharacter(shape, std::move(n));
}

ExpVector rotate(std::span<const Int> v, int k) {
  const int f = static_cast<int>(v.size());
  ExpVector out(v.size());
  for (int i = 0; i < f; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(((i + k) % f + f) % f)];
  return out;
}

Period period(std::span<const Int> n) {
  const int f = static_cast<int>(n.size());
  for (int len = 1; len <= f; ++len) {
    if (f % len != 0) continue;
    bool fixed = true;
    for (int i = 0; i < f && fixed; ++i) fixed = n[static_cast<std::size_t>(i)] == n[static_cast<std::size_t>((i + len) % f)];
    if (fixed) return {len, f / len};
  }
  return {f, 1};
}

bool is_weakly_generic(const FieldShape& shape, std::span<const Int> n) {
  return std::all_of(n.begin(), n.end(), [&](Int v) { return v >= shape.e && v <= shape.p - shape.e; });
}

bool is_strongly_generic(const FieldShape& shape, std::span<const Int> n) {
  return std::all_of(n.begin(), n.end(), [&](Int v) { return v >= shape.e && v <= shape.p - 1 - shape.e; });
}

Int p_adic_valuation(const FieldShape& shape, Int m) {
  if (m == 0) fail(Errc::input, "valuation of zero is undefined");
  Int v = 0;
  while (m % shape.p == 0) {
    m /= shape.p;
    ++v;
  }
  return v;
}

CharacterPair::CharacterPair(FieldShape shape, InertiaCharacter n, Int n2_class, CharacterFlags flags)
    : shape_(shape), n_(std::move(n)), n2_class_(floor_mod(n2_class, shape.q)), flags_(flags) {
  if (n_.size() != shape_.degree()) fail(Errc::input, "inertia exponents do not match the field shape");
  period_ = sw::period(n_.exponents());
  omega_n_.reserve(static_cast<std::size_t>(shape_.f));
  for (int i = 0; i < shape_.degree(); ++i) omega_n_.push_back(omega_sum(shape_, n_.exponents(), i));
}

CharacterPair CharacterPair::with_flags(CharacterFlags flags) const {
  CharacterPair out = *this;
  out.flags_ = flags;
  return out;
}

std::vector<std::string> validate_flags(const CharacterPair& pair) {
  std::vector<std::string> out;
  const FieldShape& s = pair.shape();
  const Int cls = pair.chi_class();
  const Int cyc = s.cyclotomic_class();
  const auto& fl = pair.flags();
  if (fl.chi_trivial && cls != 0)
    out.push_back("chi-trivial: Omega class " + std::to_string(cls) + " is not 0 mod " + std::to_string(s.q));
  if (fl.chi_cyclotomic && cls != cyc)
    out.push_back("chi-cyclotomic: Omega class " + std::to_string(cls) + " != e(p^f-1)/(p-1) = " +
                  std::to_string(cyc) + " mod " + std::to_string(s.q));
  if (fl.chi_inv_cyclotomic && floor_mod(-cls, s.q) != cyc)
    out.push_back("chi-inv-cyclotomic: -Omega class " + std::to_string(floor_mod(-cls, s.q)) +
                  " != " + std::to_string(cyc) + " mod " + std::to_string(s.q));
  if (fl.chi2_unramified && pair.n2_class() != 0)
    out.push_back("chi2-unramified: chi2 inertia class " + std::to_string(pair.n2_class()) + " is not 0");
  return out;
}

std::string format_vector(std::span<const Int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace sw
