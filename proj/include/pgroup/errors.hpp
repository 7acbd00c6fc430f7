#pragma once

#include <stdexcept>
#include <string>

namespace pgroup {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: malformed files, invalid presentations, violated preconditions
// (non-normal subgroup passed to a quotient, mismatched primes, ...).
// The CLI maps this to exit code 3.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// A configured resource cap was hit (group order cap, coset limit, element
// caps on tensor operands). The computation is abandoned without a partial
// result; callers may raise the cap and retry. The CLI maps required checks
// skipped for this reason to exit code 2.
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// An internal consistency check failed. This always indicates a bug in the
// library itself (e.g. a structure map that should be a homomorphism by
// construction fails verification), never bad user input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace pgroup
