#pragma once

#include <stdexcept>
#include <string>

namespace sw {

// Error categories shared by the C++ core and the C API status codes.
enum class Errc {
  input = 1,
  precondition,
  not_a_weight,
  budget,
  invariant,
  ambiguity,
  overflow,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code) noexcept;

}  // namespace sw
