#pragma once

#include <map>
#include <string>
#include <vector>

#include "ulrichk3/k3.hpp"

namespace ulrichk3 {

// Chern-class window for rank-r Ulrich bundles on a degree-2a K3:
//   4(a-1)r^2  <=  c1^2  <=  (9/2)ar^2,
// c1^2 always even, the value (9/2)ar^2 - 2 excluded when r is even, and
// simple bundles further bounded below by (4a-2)r^2 - 2.  The upper bound is
// attained only by c1 = (3r/2)h.
struct BoundReport {
  Int a, r;
  Int lower;            // 4(a-1)r^2
  Rat upper;            // (9/2)ar^2, integral iff a*r^2 is even
  Int simple_lower;     // (4a-2)r^2 - 2
  std::vector<Int> excluded;
  bool even_only = true;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// Requires a >= 2 and r >= 1 (parameter_error otherwise).
BoundReport chern_bounds(const Int& a, const Int& r);

// Bogomolov inequality for Ulrich data: c1^2 >= 4(a-1)r^2.
bool bogomolov_check(const ChernData& c, const Int& a);

// Hodge-index bound: 2a * c1^2 <= (c1.h)^2.
bool hodge_index_check(const ChernData& c, const Int& a);

// Existence/stability verdict for rank-2 Ulrich bundles with c2 = u on the
// degree-2a K3 family, as a function of u:
//   u = 4a-3          IMPOSSIBLE (an effective (-2)-class obstructs)
//   u = 4a-2          DECOMPOSABLE_ONLY (every bundle splits as O(A)+O(B))
//   u = 4a-1          STRICTLY_SEMISTABLE_GENERAL
//   4a <= u <= 5a+2   STABLE_EXISTS
//   u = 5a+3          EXCLUDED (c1^2 = 18a-2, the excluded bound value)
//   u = 5a+4          SPECIAL (c1 = 3h; realized off this lattice family)
//   otherwise         IMPOSSIBLE (a named Chern bound is violated)
// STRICTLY_SEMISTABLE_GENERAL asserts that strictly semistable bundles exist
// and the general member is strictly semistable; it does not assert the
// non-existence of stable points.
enum class Rank2Class {
  IMPOSSIBLE,
  DECOMPOSABLE_ONLY,
  STRICTLY_SEMISTABLE_GENERAL,
  STABLE_EXISTS,
  SPECIAL,
  EXCLUDED,
};

const std::string& to_string(Rank2Class c);

// Dimension formulas at (a, u):  ext_dim = u - 4a + 2,
// moduli_dim = 2u - 8a + 2, stratum_dim = u - 4a + 1 (dimension of the
// strictly-semistable stratum).  The formulas are vacuous below u = 4a-1,
// where no semistable bundle exists.
struct ModuliDims {
  Int ext_dim, moduli_dim, stratum_dim;
  bool vacuous = false;

  friend bool operator==(const ModuliDims&, const ModuliDims&) = default;
};

// Requires a >= 2.
ModuliDims moduli_dimensions(const Int& a, const Int& u);

// One row of the rank-2 classification table: invariants c1^2 = 8a-8+2u,
// c2 = u, the dimension formulas, the verdict with its justification, and
// (when the scan runs with lattice verification) the constructive
// certificates from the lattice pipeline.
struct Rank2Row {
  Int a, u, c1sq, c2, ext_dim, moduli_dim, stratum_dim;
  Rank2Class cls = Rank2Class::IMPOSSIBLE;
  std::string reason;
  std::optional<VeryAmpleCertificate> very_ample;
  std::vector<UlrichLineBundleCertificate> ulrich_lines;

  friend bool operator==(const Rank2Row&, const Rank2Row&) = default;
};

// Requires a >= 2; total in u (rows outside every admissible range come back
// IMPOSSIBLE with the violated bound named in `reason`).
Rank2Row classify_u(const Int& a, const Int& u);

struct ScanReport {
  std::string version;
  Int a_min, a_max;
  bool verified = false;
  std::vector<Rank2Row> rows;  // sorted by (a, u)
  std::map<std::string, std::size_t> summary;
  std::vector<std::string> failures;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Classification table for a in [a_min, a_max], u in [4a-3, 5a+4] (12 rows
// per a).  With `verify` set, every row with 4a-2 <= u <= 5a+2 additionally
// runs the lattice pipeline (build, very-ampleness certificate, Ulrich line
// search) and attaches the certificates; verification problems append to
// `failures` without aborting the scan.  Rows are computed cell-by-cell
// across `jobs` threads and merged in (a, u) order, so the report is
// byte-for-byte independent of the thread count.  Requires 2 <= a_min <=
// a_max and jobs >= 1.
ScanReport scan_rank2(const Int& a_min, const Int& a_max, bool verify, unsigned jobs = 1);

}  // namespace ulrichk3
