#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

/// A requested weight or dimension exceeds the configured truncation.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Operands carry incompatible coefficient rings (Z vs F_p, or two primes).
class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The triangular solve produced a non-integral coordinate: the input is not
/// the image of a Lazard-ring element.
class NotInLazardRing : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed variety expression, JSON payload, or command-line value.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (signals a bug, not bad input).
class ValidationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cobord
