#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pretor {

// Base of every library fault. Checker verdicts are never exceptions; an
// exception means the input was unusable or a precondition was violated.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownId : Error {
  explicit UnknownId(const std::string& id)
      : Error("unknown id: " + id), id(id) {}
  std::string id;
};

struct NotComposable : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct IllFormedFunctor : Error {
  using Error::Error;
};

struct NotATheory : Error {
  using Error::Error;
};

// Internal consistency fault in the torsion/torsion-free functor
// construction. Must not occur on a verified theory; never resolved silently.
struct AmbiguousFactorization : Error {
  using Error::Error;
};

struct PreconditionNotChecked : Error {
  using Error::Error;
};

struct PreconditionUnmet : Error {
  using Error::Error;
};

struct MissingTerminal : Error {
  using Error::Error;
};

struct MissingInitial : Error {
  using Error::Error;
};

// Parse diagnostics always carry a location (a line/column for syntax errors,
// a JSON path for structural ones) and the offending token or id.
struct ParseError : Error {
  ParseError(std::string location, std::string offending, const std::string& message)
      : Error(location + ": " + message), location(std::move(location)),
        offending(std::move(offending)) {}
  std::string location;
  std::string offending;
};

struct MalformedDocument : ParseError {
  using ParseError::ParseError;
};

struct UnresolvedId : ParseError {
  using ParseError::ParseError;
};

struct AxiomViolation : ParseError {
  using ParseError::ParseError;
};

// Global guard for exhaustive searches and product materialization,
// in morphisms. Default 20000; the CLI honors PRETOR_SIZE_LIMIT.
std::size_t size_limit();
void set_size_limit(std::size_t limit);
void guard_size(std::size_t morphisms, const char* what);

}  // namespace pretor
