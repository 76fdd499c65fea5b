#pragma once

#include <stdexcept>
#include <string>

namespace pilift {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bad permutation arrays, unreadable files, bad flags.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// A size guard refused the computation.  The message names the guard.
struct GuardError : Error {
  explicit GuardError(const std::string& what) : Error(what) {}
};

// An operation was called outside its stated preconditions.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A fact the underlying theory guarantees failed to hold.  This always
// means the build (or the caller's group data) is wrong, never the input.
// Carries a dump of whatever certificate context was available.
struct TheoremViolation : Error {
  std::string dump;
  TheoremViolation(const std::string& what, std::string certificate_dump = "")
      : Error(what), dump(std::move(certificate_dump)) {}
};

}  // namespace pilift
