#ifndef SBM_ERRORS_HPP
#define SBM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed token text or an index outside [1, n-1].
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Two operands built over different strand counts.
class ContextMismatch : public Error {
public:
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

/// Inversion requested for an element with singular letters (deg_x > 0).
class NonInvertible : public Error {
public:
  explicit NonInvertible(const std::string& what) : Error(what) {}
};

/// A braid-only operation was given a word containing x letters.
class XLettersPresent : public Error {
public:
  explicit XLettersPresent(const std::string& what) : Error(what) {}
};

/// Strand count above the configured bound of a combinatorial procedure.
class BoundExceeded : public Error {
public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

} // namespace sbm

#endif
