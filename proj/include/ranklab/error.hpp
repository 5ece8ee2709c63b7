#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

enum class Errc {
  RosterMismatch,
  InvalidPermutation,
  TooFewPlayers,
  EmptyParameters,
  UnknownPlayer,
  DrawNotSupported,
  IsolatedPlayer,
  SingularSystem,
  NonUniqueStationary,
  InvalidAlpha,
  NotStrictOrder,
  ParseError,
};

const char* errc_name(Errc code);

// Exit-code class for the CLI: input/parameter problems map to 2,
// method preconditions and solver failures map to 3.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ranklab
