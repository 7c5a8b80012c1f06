#pragma once

#include <array>
#include <optional>
#include <string>

#include "ulrichk3/bigint.hpp"
#include "ulrichk3/errors.hpp"

namespace ulrichk3 {

using Mat3 = std::array<std::array<Int, 3>, 3>;

// A divisor class written against the fixed ordered basis (h, A, B):
// coordinates (z, x, y) denote z*h + x*A + y*B.  h is the polarization.
struct DivisorClass {
  Int z, x, y;

  DivisorClass() : z(0), x(0), y(0) {}
  DivisorClass(Int z_, Int x_, Int y_) : z(std::move(z_)), x(std::move(x_)), y(std::move(y_)) {}

  static DivisorClass h() { return {1, 0, 0}; }
  static DivisorClass A() { return {0, 1, 0}; }
  static DivisorClass B() { return {0, 0, 1}; }

  const Int& operator[](int i) const { return i == 0 ? z : (i == 1 ? x : y); }
  Int& operator[](int i) { return i == 0 ? z : (i == 1 ? x : y); }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return {a.z + b.z, a.x + b.x, a.y + b.y};
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return {a.z - b.z, a.x - b.x, a.y - b.y};
  }
  friend DivisorClass operator-(const DivisorClass& a) { return {-a.z, -a.x, -a.y}; }
  friend DivisorClass operator*(const Int& c, const DivisorClass& a) {
    return {c * a.z, c * a.x, c * a.y};
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.z == b.z && a.x == b.x && a.y == b.y;
  }
  // Lexicographic by (z, x, y); the canonical witness order everywhere.
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    if (a.z != b.z) return a.z < b.z;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Sylvester inertia (n_+, n_-, n_0) of a real symmetric form.
struct InertiaSignature {
  int positive = 0, negative = 0, zero = 0;
  friend bool operator==(const InertiaSignature&, const InertiaSignature&) = default;
};

// Parameters of the K3 builder lattice: polarization degree h^2 = 2a and
// off-diagonal pairing A.B = u.
struct K3Params {
  Int a, u;
  friend bool operator==(const K3Params&, const K3Params&) = default;
};

// An integral symmetric bilinear form of rank 3, immutable after
// construction.  Built either from an explicit Gram matrix or from the
// two-parameter family k3 lattices.
class GramLattice {
 public:
  // Throws parameter_error unless the matrix is symmetric.
  explicit GramLattice(Mat3 gram);

  const Mat3& gram() const { return gram_; }
  const Int& entry(int i, int j) const { return gram_[i][j]; }
  const std::optional<K3Params>& params() const { return params_; }

  static const std::array<const char*, 3>& basis_labels() {
    static const std::array<const char*, 3> labels = {"h", "A", "B"};
    return labels;
  }

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.gram_ == b.gram_ && a.params_ == b.params_;
  }

 private:
  friend GramLattice build_k3_lattice(const Int& a, const Int& u);
  Mat3 gram_;
  std::optional<K3Params> params_;
};

// The rank-3 lattice with Gram matrix
//   [ 2a  3a     3a   ]
//   [ 3a  4(a-1) u    ]
//   [ 3a  u      4(a-1)]
// against the basis (h, A, B).  Requires a >= 2 (parameter_error otherwise);
// u is unrestricted, so degenerate and wrong-signature forms are
// constructible on purpose.
GramLattice build_k3_lattice(const Int& a, const Int& u);

// Bilinear pairing d1.d2 = coords(d1)^T * G * coords(d2).
Int pairing(const GramLattice& L, const DivisorClass& d1, const DivisorClass& d2);

inline Int self_intersection(const GramLattice& L, const DivisorClass& d) {
  return pairing(L, d, d);
}

// Degree against the polarization: d.h.
inline Int degree(const GramLattice& L, const DivisorClass& d) {
  return pairing(L, d, DivisorClass::h());
}

// Exact Sylvester inertia via congruence diagonalization over the rationals.
// Zero pivots are handled by a symmetric pivot search, then a 2x2 hyperbolic
// split when the remaining diagonal is entirely zero; congruence transforms
// preserve inertia, so the final diagonal signs are the answer.
InertiaSignature inertia(const GramLattice& L);

// Even lattice: every diagonal entry (hence every self-intersection) is even.
bool is_even(const GramLattice& L);

// A class is primitive when its coordinate gcd is 1 (not a proper multiple).
// The zero class is not primitive.
bool is_primitive(const DivisorClass& d);

// Picard-Lefschetz reflection across a (-2)-class: d |-> d + (d.root)*root.
// Throws root_error unless root^2 == -2.  An isometry and an involution.
DivisorClass reflect(const GramLattice& L, const DivisorClass& d, const DivisorClass& root);

}  // namespace ulrichk3
