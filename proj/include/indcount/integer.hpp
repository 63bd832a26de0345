//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indcount {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad input from a caller or a file. Maps to CLI exit status 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Maps to CLI exit status 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer ipow(const Integer& base, long long exponent) {
  if (exponent < 0) throw InputError("ipow: negative exponent");
  Integer result = 1;
  for (long long e = 0; e < exponent; ++e) result *= base;
  return result;
}

inline std::string to_decimal(const Integer& value) { return value.str(); }

}  // namespace indcount
