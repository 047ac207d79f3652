#pragma once

// Unbounded exact integers and the arithmetic primitives everything else is
// built on. Fixed-width types are deliberately absent from the public
// interfaces: tuple codes and polynomial values grow without bound, and a
// silent wraparound would corrupt search verdicts.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dio {

// Signed, arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// Same representation, used where a value is a natural number by
// construction. Negative values are a caller bug; parsers at the text
// boundaries reject them explicitly.
using Nat = boost::multiprecision::cpp_int;

// base^exp with pow(b, 0) = 1 for every b, including pow(0, 0) = 1.
inline Nat nat_pow(Nat base, std::uint64_t exp) {
  Nat acc = 1;
  while (exp > 0) {
    if (exp & 1u) acc *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return acc;
}

// Exact floor square root: the r with r*r <= n < (r+1)*(r+1). No floating
// point at any magnitude.
inline Nat nat_isqrt(const Nat& n) {
  if (n < 0) throw std::invalid_argument("nat_isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

// Strict decimal parse of a natural: nonempty, digits only.
inline Nat parse_nat(const std::string& s) {
  if (s.empty()) throw std::runtime_error("parse_nat: empty string");
  for (char c : s)
    if (c < '0' || c > '9')
      throw std::runtime_error("parse_nat: not a decimal natural: '" + s + "'");
  return Nat(s);
}

// Strict decimal parse of an integer: optional leading '-', then digits.
inline Int parse_int(const std::string& s) {
  if (!s.empty() && s[0] == '-') return -Int(parse_nat(s.substr(1)));
  return Int(parse_nat(s));
}

// Narrow a natural to size_t, for values that index into containers.
inline std::size_t nat_to_size(const Nat& n) {
  if (n < 0 || n > Nat(std::numeric_limits<std::size_t>::max()))
    throw std::runtime_error("value out of range for an index: " + n.str());
  return n.convert_to<std::size_t>();
}

}  // namespace dio
