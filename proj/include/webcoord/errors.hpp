#pragma once

#include <stdexcept>
#include <string>

namespace webcoord {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input document or command-line value.
class SchemaError : public Error {
public:
  using Error::Error;
};

// A triangulation document that parses but violates a structural invariant
// (duplicate side, self-folded edge, non-negative Euler characteristic,
// disconnected dual graph).
class InvalidTriangulation : public Error {
public:
  using Error::Error;
};

// (aL, aR) pair outside the image of (n_in, n_out) -> (2*n_in + n_out, n_in + 2*n_out).
class NotRepresentable : public Error {
public:
  using Error::Error;
};

// Vector fails the rhombus inequalities or mod-3 congruences somewhere.
class NotInCone : public Error {
public:
  using Error::Error;
};

// Strand counts across some edge do not match up.
class IncompatibleWeb : public Error {
public:
  using Error::Error;
};

// A square face handed to resolve_square that is no longer present.
class StaleSquare : public Error {
public:
  using Error::Error;
};

// Web with a square face passed to an operation requiring a non-elliptic one.
class EllipticInput : public Error {
public:
  using Error::Error;
};

// Two webs whose per-triangle contents differ, where equality is required.
class ContentMismatch : public Error {
public:
  using Error::Error;
};

// A condition that must hold by theorem failed at runtime.  Indicates a bug,
// not bad input.
class InternalCheckFailure : public Error {
public:
  using Error::Error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalCheckFailure(what);
}

} // namespace webcoord
