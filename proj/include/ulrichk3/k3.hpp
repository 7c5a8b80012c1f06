#pragma once

#include <vector>

#include "ulrichk3/enumerate.hpp"
#include "ulrichk3/lattice.hpp"

namespace ulrichk3 {

// Numerical invariants of a sheaf on a polarized K3 surface: rank, c1.h,
// c1^2 and c2.  c1^2 must be even (the lattice is even); operations that
// divide by 2 enforce this.
struct ChernData {
  Int r, c1h, c1sq, c2;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

// Euler characteristic chi(E) = 2r + c1^2/2 - c2 (Riemann-Roch on a K3).
// Throws parameter_error when c1sq is odd.
Int riemann_roch_chi(const ChernData& c);

// Invariants of E(t*h) for a polarization with h^2 = hsq:
//   c1.h   ->  c1h + r*t*hsq
//   c1^2   ->  c1sq + 2*r*t*c1h + r^2*t^2*hsq
//   c2     ->  c2 + (r-1)*t*c1h + r(r-1)/2 * t^2 * hsq
ChernData twist(const ChernData& c, const Int& hsq, const Int& t);

// chi(E(t*h)): the Hilbert polynomial of E evaluated at integer t.
Int hilbert_polynomial(const ChernData& c, const Int& hsq, const Int& t);

// Slope c1.h / r as an exact rational.  Requires r >= 1.
Rat slope(const ChernData& c);

// The two equations every Ulrich bundle of rank r on a degree-2a K3
// satisfies: c1.h = 3ar and c2 = c1^2/2 - 2(a-1)r (checked as
// 2*c2 == c1sq - 4(a-1)r, so odd c1sq simply fails).
bool ulrich_numerical_conditions(const ChernData& c, const Int& a);

// Chern data of E^v(3h) on a degree-2a K3: the involution pairing an Ulrich
// bundle with its Ulrich dual.  Fixes (c1sq, c2) whenever the Ulrich
// numerical conditions hold.
ChernData ulrich_dual_transform(const ChernData& c, const Int& a);

// Numerical very-ampleness certificate for the polarization h: no class of
// square 0 and degree 1 or 2 (no elliptic pencil of low degree), no class of
// square -2 and degree 0 (no contracted root), and h primitive (h is not
// twice a square-2 class).  All three enumerations are exhaustive, so a pass
// is a proof at lattice level.
struct VeryAmpleCertificate {
  std::optional<K3Params> params;
  WitnessSet deg1_sq0, deg2_sq0, deg0_sqm2;
  bool h_primitive = false;
  bool pass = false;

  friend bool operator==(const VeryAmpleCertificate&, const VeryAmpleCertificate&) = default;
};

// Requires signature (1,2,0) (throws ill_posed_query) and even h^2 >= 4
// (throws parameter_error).
VeryAmpleCertificate certify_very_ample(const GramLattice& L);

struct NefWalkResult {
  DivisorClass result;
  std::vector<DivisorClass> applied_roots;  // each satisfies root^2 == -2

  friend bool operator==(const NefWalkResult&, const NefWalkResult&) = default;
};

// Bounded Picard-Lefschetz walk toward the nef chamber of h.  Repeatedly
// enumerates roots pairing in [-radius, -1] with the current class (degrees
// measured against the current class, a slice enumeration each) and reflects
// across the first one found, until none remains within the bound.  Only
// roots oriented positively against h (degree > 0, or degree 0 and
// lexicographically positive) are applied: reflecting flips the sign of the
// pairing, so without a fixed orientation {root, -root} would alternate
// forever.  The result is "nef within radius": no oriented root within the
// search bound pairs negatively with it.  Requires D^2 > 0 and radius >= 1;
// throws iteration_limit_error if the walk does not stabilize.
NefWalkResult nefify(const GramLattice& L, const DivisorClass& D, const Int& radius);

// Default radius 6*h^2.
NefWalkResult nefify(const GramLattice& L, const DivisorClass& D);

// One h^0-vanishing premise for an Ulrich line bundle candidate D: the twist
// (D - h or 2h - D) must have degree exactly a and square -4, and every
// class degree in the lattice must be divisible by a (gcd of the h-row);
// those three facts together rule out effective representatives.
struct VanishingCheck {
  DivisorClass cls;
  Int deg, self_int;
  bool degree_is_a = false, square_is_m4 = false, divisibility_premise = false;
  bool pass = false;

  friend bool operator==(const VanishingCheck&, const VanishingCheck&) = default;
};

struct UlrichLineBundleCertificate {
  std::optional<K3Params> params;
  DivisorClass cls;
  Int deg, self_int;
  bool numeric_ok = false;  // D.h == 3a and D^2 == 4(a-1)
  VanishingCheck down;      // D - h
  VanishingCheck up;        // 2h - D
  bool pass = false;

  friend bool operator==(const UlrichLineBundleCertificate&,
                         const UlrichLineBundleCertificate&) = default;
};

// Enumerates every class with D.h = 3a and D^2 = 4(a-1) and certifies each
// as an Ulrich line bundle.  Requires a K3 builder lattice whose
// very-ampleness certificate passes (throws parameter_error otherwise).  On
// that footing the witness set always contains A, B, 3h-A and 3h-B.
std::vector<UlrichLineBundleCertificate> find_ulrich_line_bundles(const GramLattice& L);

}  // namespace ulrichk3
