#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittsig {

enum class Errc {
  NotSquare,
  NotSymmetric,
  Degenerate,
  ZeroEntry,
  NotPrime,
  PrimeMismatch,
  NotCoprime,
  NumberTooLarge,
  LengthMismatch,
  GroupTooLarge,
  NotEven,
  DeterminantTooLarge,
  NotIsotropic,
  InvalidSeifert,
  DegenerateParameter,
  InvalidWindow,
  NotFound,
  Malformed,
  Io,
};

std::string_view to_string(Errc code);

// Domain failure carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wittsig
