#include "ulrichk3/lattice.hpp"

#include <utility>

namespace ulrichk3 {

GramLattice::GramLattice(Mat3 gram) : gram_(std::move(gram)) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw parameter_error("Gram matrix must be symmetric");
}

GramLattice build_k3_lattice(const Int& a, const Int& u) {
  if (a < 2) throw parameter_error("K3 builder requires a >= 2");
  Int q = 4 * (a - 1);
  GramLattice L(Mat3{{{2 * a, 3 * a, 3 * a}, {3 * a, q, u}, {3 * a, u, q}}});
  L.params_ = K3Params{a, u};
  return L;
}

Int pairing(const GramLattice& L, const DivisorClass& d1, const DivisorClass& d2) {
  Int acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      acc += L.entry(i, j) * d1[i] * d2[j];
  return acc;
}

InertiaSignature inertia(const GramLattice& L) {
  // Work on a rational copy; every step below is a congruence M -> S^T M S.
  std::array<std::array<Rat, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Rat(L.entry(i, j));

  auto swap_rc = [&](int i, int j) {
    for (int c = 0; c < 3; ++c) std::swap(m[i][c], m[j][c]);
    for (int r = 0; r < 3; ++r) std::swap(m[r][i], m[r][j]);
  };
  // row_i += f*row_j and col_i += f*col_j (simultaneously: congruence).
  auto add_rc = [&](int i, int j, const Rat& f) {
    for (int c = 0; c < 3; ++c) m[i][c] += f * m[j][c];
    for (int r = 0; r < 3; ++r) m[r][i] += f * m[r][j];
  };

  for (int k = 0; k < 3; ++k) {
    if (m[k][k] == 0) {
      // Prefer a nonzero diagonal entry further down.
      for (int l = k + 1; l < 3; ++l)
        if (m[l][l] != 0) {
          swap_rc(k, l);
          break;
        }
    }
    if (m[k][k] == 0) {
      // Remaining diagonal all zero: a nonzero off-diagonal m[k][l] spans a
      // hyperbolic 2x2 block [[0,c],[c,0]]; adding row/col l onto k turns the
      // pivot into 2c and elimination then produces the (+,-) pair.
      for (int l = k + 1; l < 3; ++l)
        if (m[k][l] != 0) {
          add_rc(k, l, Rat(1));
          break;
        }
    }
    if (m[k][k] == 0) continue;  // row k is zero on the remaining block
    for (int i = k + 1; i < 3; ++i)
      if (m[i][k] != 0) add_rc(i, k, -m[i][k] / m[k][k]);
  }

  InertiaSignature sig;
  for (int i = 0; i < 3; ++i) {
    if (m[i][i] > 0)
      ++sig.positive;
    else if (m[i][i] < 0)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

bool is_even(const GramLattice& L) {
  for (int i = 0; i < 3; ++i)
    if (L.entry(i, i) % 2 != 0) return false;
  return true;
}

bool is_primitive(const DivisorClass& d) {
  return gcd(gcd(abs(d.z), abs(d.x)), abs(d.y)) == 1;
}

DivisorClass reflect(const GramLattice& L, const DivisorClass& d, const DivisorClass& root) {
  if (self_intersection(L, root) != -2)
    throw root_error("reflection requires a (-2)-class");
  return d + pairing(L, d, root) * root;
}

}  // namespace ulrichk3
