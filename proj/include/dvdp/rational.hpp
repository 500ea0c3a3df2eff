// SPDX-License-Identifier: MIT
//
// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals, overflow-checked machine integers for lattice coordinates, and
// the library's exception hierarchy.

#ifndef DVDP_RATIONAL_HPP
#define DVDP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dvdp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input. `path` names the offending field when
/// the input came from a structured document (for example `roots[2][0]`).
class InputError : public Error {
public:
    explicit InputError(const std::string& message, std::string path = {})
        : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A root configuration that is not a Du Val configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A Galois action that violates the isometry or permutation invariants.
class ActionError : public Error {
public:
    using Error::Error;
};

/// An operation called outside its documented preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Lattice coordinates overflowed 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Renders a rational as `p` or `p/q` in lowest terms.
std::string to_string(const Rational& q);

/// Parses `p` or `p/q` (optional sign, decimal digits). Throws InputError.
Rational parse_rational(const std::string& text);

/// True iff the rational has denominator one.
inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

/// Converts an integral rational to int64, throwing if it is not integral or
/// does not fit.
std::int64_t to_int64(const Rational& q);

/// True iff `q` is the square of a rational number.
bool is_rational_square(const Rational& q);

}  // namespace dvdp

#endif  // DVDP_RATIONAL_HPP
