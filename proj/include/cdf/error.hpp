#pragma once

#include <stdexcept>
#include <string>

namespace cdf {

/// Root of the library's error hierarchy.  Every failure mode raised on
/// purpose derives from this, so callers can distinguish "the math said no"
/// from a genuine bug (which asserts or propagates std::logic_error).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different rings / contexts, or an unsupported base
/// ring was requested for the operation.
struct ContextError : Error {
  using Error::Error;
};

/// Operation not available for the selected simplex-ring engine.
struct EngineError : Error {
  using Error::Error;
};

/// A degree/size cap was exceeded during an ideal computation.
struct ResourceError : Error {
  using Error::Error;
};

/// Element is not invertible where a unit was required.
struct UnitError : Error {
  using Error::Error;
};

/// Invalid simplicial index data (face/degeneracy/pullback maps).
struct IndexError : Error {
  using Error::Error;
};

/// An algebra presentation failed a requirement (missing inverse relation,
/// non-smooth presentation where a Taylor lift is needed, ...).
struct PresentationError : Error {
  using Error::Error;
};

/// A combinatorial form failed its defining vanishing conditions.
struct FormError : Error {
  using Error::Error;
};

/// A claimed group-scheme point does not satisfy the group's relations.
struct PointError : Error {
  using Error::Error;
};

/// A classical representative is incompatible with the group presentation.
struct RepresentationError : Error {
  using Error::Error;
};

/// Malformed definition/config file.
struct FormatError : Error {
  using Error::Error;
};

/// Reference to an undefined name in a config or expression file.
struct LookupError : Error {
  using Error::Error;
};

/// Invalid command-line usage.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace cdf
