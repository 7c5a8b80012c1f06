#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ulrichk3 {

// All lattice arithmetic is exact: arbitrary-precision integers for pairings
// and enumeration, arbitrary-precision rationals for congruence
// diagonalization, slopes and bound endpoints.  No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(a/b) for b != 0 (C++ division truncates toward zero; we need floor).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

// An integer upper bound for sqrt(q), q >= 0 rational: sqrt(n/d) <= (isqrt(n*d)+1)/d,
// so ceil of that is a safe radius when boxing an ellipse.  Exactness of the
// final answer never depends on tightness here: every point in the box is
// checked individually.
inline Int sqrt_upper_bound(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  return ceil_rat(Rat(isqrt(n * d) + 1, d));
}

}  // namespace ulrichk3
