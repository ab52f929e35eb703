#pragma once

/// Exact number types and the error types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace facecount {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A formula or construction was called outside its parameter domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input geometry violates a polytope invariant (not full-dimensional,
/// redundant vertex, not a face, ...).
class GeometryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency assertion failed. Always a bug, never an input error.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace facecount
