#pragma once

#include <stdexcept>
#include <string>

namespace stringycalc {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Series inversion needs a constant term of +1 or -1.
class NonUnitConstantTerm : public Error { public: using Error::Error; };

/// Some discrepancy is <= -1.
class NotLogTerminal : public Error { public: using Error::Error; };

/// A stratum's E-polynomial evaluated at 1 disagrees with its Euler number.
class InconsistentEpoly : public Error { public: using Error::Error; };

/// A subset key is malformed or references an unknown divisor.
class BadSubsetKey : public Error { public: using Error::Error; };

/// The symbolic E-function needs non-negative integer discrepancies.
class SymbolicPathUnavailable : public Error { public: using Error::Error; };

/// A stratum needed by the symbolic path carries no E-polynomial.
class MissingEpoly : public Error { public: using Error::Error; };

/// The denominator still vanishes at w = 1 after cancellation.
class PoleAtOne : public Error { public: using Error::Error; };

/// An argument lies outside the operation's domain.
class OutOfRange : public Error { public: using Error::Error; };

/// The supplied coefficient table does not reach the required index.
class TableTooShort : public Error { public: using Error::Error; };

/// Malformed input text (JSON schema violations, bad number strings).
class SchemaError : public Error { public: using Error::Error; };

} // namespace stringycalc
