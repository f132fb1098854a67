#pragma once

#include <stdexcept>
#include <string>

namespace placement {

enum class Errc {
  invalid_size,       // bad board/complex dimensions (path:0, cycle:2, ...)
  parse_error,        // malformed text input, reported with line/token context
  domain_error,       // value outside the declared universe or board
  size_limit,         // enumeration cap exceeded; compute refused, not degraded
  unsupported_board,  // ruleset cannot generate pieces for this board
  ruleset_violation,  // ruleset is not a strong placement game
  illegal_move,       // move rejected by an arena
  internal_error,     // cross-checked computations disagree
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace placement
