#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorKind {
  domain,                   // argument outside the mathematical domain
  divergence,               // an integral or level set is infinite
  divergent_tail,           // an upper-tail integral is infinite
  degenerate,               // a normalizing integral vanishes
  inadmissible_parameters,  // parameter tuple violates a precondition
  invalid_input,            // malformed data (grids, files, flags)
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace dunkl
