#pragma once

// Exact arithmetic used throughout the library: arbitrary-precision
// integers for multiplicities and exact rationals for stability
// parameters.  Dimension-vector entries and Cartan matrix entries are
// plain 64-bit integers (ranks stay tiny).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qvs {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Parses "p" or "p/q" with optional sign.  Throws std::invalid_argument
// on malformed input or q = 0.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    const BigInt p(s.substr(0, slash));
    const BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace qvs
