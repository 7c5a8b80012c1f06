#pragma once

#include <string>
#include <vector>

#include "ulrichk3/lattice.hpp"

namespace ulrichk3 {

// Result of an exhaustive slice enumeration {E : E.w = d, E^2 = s}.  The box
// holds the proven per-coordinate integer intervals (order z, x, y; empty
// intervals have lo > hi); `note` documents the bound inequality or the
// reason a slice is empty.  exhaustive = true means: any solution outside
// the box would violate the recorded negative-definiteness bound.
struct WitnessSet {
  Int d, s;
  std::vector<DivisorClass> witnesses;           // sorted lexicographically by (z,x,y)
  std::array<std::array<Int, 2>, 3> box{};       // [lo,hi] per coordinate
  bool exhaustive = false;
  std::string note;

  friend bool operator==(const WitnessSet&, const WitnessSet&) = default;
};

// All classes E with E.h = d and E^2 = s.  Well-posed only when the lattice
// has signature (1,2,0) and h^2 > 0, so that the form restricted to the
// slice is negative definite and the solution set lies in a provable box;
// otherwise throws ill_posed_query.  Witnesses come back sorted; the result
// is exhaustive, never sampled.
WitnessSet enumerate_classes(const GramLattice& L, const Int& d, const Int& s);

// Same, but the degree is measured against an arbitrary class w with
// w^2 > 0 (used by the nef walk, where degrees are taken against the class
// being moved rather than h).
WitnessSet enumerate_slice(const GramLattice& L, const DivisorClass& w, const Int& d,
                           const Int& s);

// Independent naive check: triple loop over the cube [-box_radius, box_radius]^3
// collecting every class with E.h = d and E^2 = s.  No definiteness
// assumption, no boxing theory; used as the oracle that enumerate_classes is
// tested against.
std::vector<DivisorClass> brute_force_oracle(const GramLattice& L, const Int& d, const Int& s,
                                             const Int& box_radius);

// E^2 on the slice {E.h = d} as a polynomial in the free coordinates (x, y),
// after eliminating z via the degree equation, together with the congruence
// on (x, y) required for z to be integral:
//   E^2 = qxx*x^2 + qxy*x*y + qyy*y^2 + q0,     cx*x + cy*y == cd  (mod m).
struct RestrictedForm {
  Rat qxx, qxy, qyy, q0;
  Int m, cx, cy, cd;
  bool solvable;  // gcd(cx, cy, m) divides cd, i.e. the slice meets the lattice

  friend bool operator==(const RestrictedForm&, const RestrictedForm&) = default;
};

// Requires g00 = h^2 != 0.  Multiplying through by g00:
//   g00*E^2 = d^2 + (g00 g11 - g01^2) x^2 + 2 (g00 g12 - g01 g02) xy
//                 + (g00 g22 - g02^2) y^2
// with z = (d - g01 x - g02 y)/g00, which yields the coefficients below.
RestrictedForm restricted_form(const GramLattice& L, const Int& d);

// Discriminant of the degree-2 slice conic (the a = 2 case), u^2 - 18u + 61.
Int slice_discriminant(const Int& u);

// Discriminant of the general degree-a slice conic,
// 4u^2 - 36au + 80a^2 - 12a - 32.
Int slice_discriminant_a(const Int& a, const Int& u);

// Negativity certificate for one discriminant over an inclusive u-interval:
// records the extremal (maximal) value and where it is attained, plus the
// symmetry check D(center + t) == D(center - t) across the interval (for the
// general discriminant the center 9a/2 may be a half-integer; the check runs
// on the doubled variable w = 2u where the center 9a is integral).
struct DiscriminantSection {
  std::string name;
  Int u_lo, u_hi;
  Rat symmetric_about;
  Int max_value, argmax_u;
  bool all_negative = false;
  bool symmetry_ok = false;

  friend bool operator==(const DiscriminantSection&, const DiscriminantSection&) = default;
};

struct DiscriminantCertificate {
  Int a, u_lo, u_hi;
  std::vector<DiscriminantSection> sections;
  bool pass = false;

  friend bool operator==(const DiscriminantCertificate&, const DiscriminantCertificate&) = default;
};

// Certifies strict negativity of the slice discriminants: the general
// discriminant over the requested [u_lo, u_hi], and (when a == 2) the
// degree-2 discriminant over its own fixed interval [6, 12], outside of
// which that polynomial is positive by design.  Requires a >= 2 and
// u_lo <= u_hi.
DiscriminantCertificate discriminant_certificate(const Int& a, const Int& u_lo, const Int& u_hi);

// Default interval [4a-2, 5a+2].
DiscriminantCertificate discriminant_certificate(const Int& a);

}  // namespace ulrichk3
