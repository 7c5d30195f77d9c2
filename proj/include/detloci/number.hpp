#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace detloci {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A theorem's hypothesis does not hold for the given input.
class GuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity violated an identity that must hold exactly.
/// Seeing one of these means a convention bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q, const std::string& what) {
  if (!is_integral(q)) {
    throw InternalError(what + " evaluated to the non-integer " + q.str() +
                        "; check the sign conventions");
  }
  return boost::multiprecision::numerator(q);
}

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace detloci
