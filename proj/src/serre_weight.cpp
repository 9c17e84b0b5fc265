#include "sw/serre_weight.hpp"

#include <charconv>

namespace sw {

ExpVector SerreWeight::diff() const {
  ExpVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

ExpVector SerreWeight::r() const {
  ExpVector d = diff();
  for (Int& v : d) ++v;
  return d;
}

SerreWeight weight_from_diff(const FieldShape& shape, const ExpVector& diff, Int b_class) {
  if (static_cast<Int>(diff.size()) != shape.f) fail(Errc::input, "weight vectors need length f");
  for (Int d : diff)
    if (d < 0 || d > shape.p - 1)
      fail(Errc::input, "a_i - b_i = " + std::to_string(d) + " outside [0, p-1]");
  // base-p digits of the representative in [0, q) never all equal p-1
  Int v = floor_mod(b_class, shape.q);
  SerreWeight w;
  w.shape = shape;
  w.b.resize(diff.size());
  w.a.resize(diff.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    w.b[i] = v % shape.p;
    v /= shape.p;
    w.a[i] = w.b[i] + diff[i];
  }
  return w;
}

SerreWeight canonicalize(const FieldShape& shape, const ExpVector& a, const ExpVector& b) {
  if (a.size() != b.size() || static_cast<Int>(a.size()) != shape.f)
    fail(Errc::input, "weight vectors need length f=" + std::to_string(shape.f));
  ExpVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = checked_sub(a[i], b[i]);
  return weight_from_diff(shape, diff, omega_class(shape, b, 0));
}

bool weights_isomorphic(const SerreWeight& lhs, const SerreWeight& rhs) {
  if (lhs.shape != rhs.shape) fail(Errc::input, "weights belong to different field shapes");
  return lhs.diff() == rhs.diff() && lhs.b_class() == rhs.b_class();
}

Int weight_count(const FieldShape& shape) { return checked_mul(checked_pow(shape.p, shape.f), shape.q); }

void for_each_weight(const FieldShape& shape, Int budget, const std::function<void(const SerreWeight&)>& visit) {
  const Int pf = checked_pow(shape.p, shape.f);
  const Int needed = checked_mul(pf, pf);
  if (needed > budget)
    fail(Errc::budget, "weight enumeration needs p^{2f}=" + std::to_string(needed) + " > budget " +
                           std::to_string(budget));
  ExpVector diff(static_cast<std::size_t>(shape.f), 0);
  for (Int code = 0; code < pf; ++code) {
    Int c = code;
    for (auto& d : diff) {
      d = c % shape.p;
      c /= shape.p;
    }
    for (Int cls = 0; cls < shape.q; ++cls) visit(weight_from_diff(shape, diff, cls));
  }
}

std::vector<SerreWeight> enumerate_weights(const FieldShape& shape, Int budget) {
  std::vector<SerreWeight> out;
  for_each_weight(shape, budget, [&](const SerreWeight& w) { out.push_back(w); });
  return out;
}

std::string format_weight(const SerreWeight& w) { return format_vector(w.a) + "/" + format_vector(w.b); }

ExpVector parse_csv(std::string_view text, std::string_view what) {
  ExpVector out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      fail(Errc::input, std::string(what) + ": malformed integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

SerreWeight parse_weight(const FieldShape& shape, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) fail(Errc::input, "weight: expected 'a0,...,/b0,...' got '" + std::string(text) + "'");
  ExpVector a = parse_csv(text.substr(0, slash), "weight");
  ExpVector b = parse_csv(text.substr(slash + 1), "weight");
  if (static_cast<Int>(a.size()) != shape.f || static_cast<Int>(b.size()) != shape.f)
    fail(Errc::input, "weight: need " + std::to_string(shape.f) + " entries on each side of '/'");
  return canonicalize(shape, a, b);
}

}  // namespace sw
