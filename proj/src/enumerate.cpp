#include "ulrichk3/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace ulrichk3 {

namespace {

const char* kCoordNames[3] = {"z", "x", "y"};

using RatVec3 = std::array<Rat, 3>;

Rat rat_pair(const GramLattice& L, const RatVec3& a, const RatVec3& b) {
  Rat acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += Rat(L.entry(i, j)) * a[i] * b[j];
  return acc;
}

}  // namespace

WitnessSet enumerate_slice(const GramLattice& L, const DivisorClass& w, const Int& d,
                           const Int& s) {
  if (inertia(L) != InertiaSignature{1, 2, 0})
    throw ill_posed_query("enumeration requires signature (1,2,0)");
  if (self_intersection(L, w) <= 0)
    throw ill_posed_query("enumeration slice class must have positive square");

  // ell = G*w, so ell . coords(E) = E.w.  Nonzero because w^2 > 0.
  std::array<Int, 3> ell;
  for (int i = 0; i < 3; ++i) {
    ell[i] = 0;
    for (int j = 0; j < 3; ++j) ell[i] += L.entry(i, j) * w[j];
  }
  int p = 0;
  while (ell[p] == 0) ++p;
  const int fa = (p == 0) ? 1 : 0;           // first free coordinate
  const int fb = (p == 2) ? 1 : 2;           // second free coordinate

  // Parametrize the affine slice {E.w = d} by the free coordinates:
  //   E(va, vb) = (d/ell_p) e_p + va*(e_fa - (ell_fa/ell_p) e_p)
  //                             + vb*(e_fb - (ell_fb/ell_p) e_p)
  // The two direction vectors span w-perp, so the quadratic part of
  // E^2 = Q(va, vb) is the form restricted to w-perp: negative definite by
  // signature (1,2,0) and w^2 > 0.  Q has a unique maximum; solutions of
  // Q = s live inside an explicit box around it.
  RatVec3 e0{}, dir_a{}, dir_b{};
  e0[p] = Rat(d, ell[p]);
  dir_a[fa] = 1;
  dir_a[p] = -Rat(ell[fa], ell[p]);
  dir_b[fb] = 1;
  dir_b[p] = -Rat(ell[fb], ell[p]);

  const Rat A2 = rat_pair(L, dir_a, dir_a);
  const Rat B2 = rat_pair(L, dir_a, dir_b);
  const Rat C2 = rat_pair(L, dir_b, dir_b);
  const Rat Da = rat_pair(L, e0, dir_a);
  const Rat Db = rat_pair(L, e0, dir_b);
  const Rat F0 = rat_pair(L, e0, e0);
  const Rat det2 = A2 * C2 - B2 * B2;
  if (!(A2 < 0 && det2 > 0))
    throw ill_posed_query("restricted form is not negative definite");

  // Critical point of Q (its maximum) and the maximal value.
  const Rat a0 = (B2 * Db - C2 * Da) / det2;
  const Rat b0 = (B2 * Da - A2 * Db) / det2;
  const Rat qmax = A2 * a0 * a0 + 2 * B2 * a0 * b0 + C2 * b0 * b0 + 2 * Da * a0 + 2 * Db * b0 + F0;

  WitnessSet ws;
  ws.d = d;
  ws.s = s;
  ws.exhaustive = true;

  std::ostringstream note;
  const Int cong_gcd = gcd(gcd(abs(ell[fa]), abs(ell[fb])), abs(ell[p]));
  if (d % cong_gcd != 0)
    note << "slice congruence " << ell[fa] << "*" << kCoordNames[fa] << " + " << ell[fb] << "*"
         << kCoordNames[fb] << " == " << d << " (mod " << ell[p]
         << ") is unsatisfiable (gcd = " << cong_gcd << "); enumeration ran regardless. ";

  if (Rat(s) > qmax) {
    for (auto& iv : ws.box) iv = {Int(0), Int(-1)};
    note << "empty slice: requested square " << s << " exceeds the slice maximum "
         << qmax.str() << " of the negative-definite restricted form";
    ws.note = note.str();
    return ws;
  }

  const Rat R = qmax - Rat(s);
  // (va-a0)^2 <= (-C2)R/det2 and (vb-b0)^2 <= (-A2)R/det2 for any solution:
  // the standard diagonal bound for a negative definite binary form.
  const Rat bound_a = -C2 * R / det2, bound_b = -A2 * R / det2;
  const Int ra = sqrt_upper_bound(bound_a);
  const Int rb = sqrt_upper_bound(bound_b);
  const Int alo = ceil_rat(a0) - ra, ahi = floor_rat(a0) + ra;
  const Int blo = ceil_rat(b0) - rb, bhi = floor_rat(b0) + rb;

  for (Int va = alo; va <= ahi; ++va) {
    for (Int vb = blo; vb <= bhi; ++vb) {
      Int t = d - ell[fa] * va - ell[fb] * vb;
      if (t % ell[p] != 0) continue;
      DivisorClass E;
      E[p] = t / ell[p];
      E[fa] = va;
      E[fb] = vb;
      if (self_intersection(L, E) == s) ws.witnesses.push_back(E);
    }
  }
  std::sort(ws.witnesses.begin(), ws.witnesses.end());

  ws.box[fa] = {alo, ahi};
  ws.box[fb] = {blo, bhi};
  if (alo > ahi || blo > bhi) {
    ws.box[p] = {Int(0), Int(-1)};
  } else {
    // The pivot coordinate is affine-linear in (va, vb); its range over the
    // box is attained at corners.
    bool first = true;
    Rat cmin, cmax;
    for (const Int& va : {alo, ahi})
      for (const Int& vb : {blo, bhi}) {
        Rat c = Rat(d - ell[fa] * va - ell[fb] * vb, ell[p]);
        if (first || c < cmin) cmin = c;
        if (first || c > cmax) cmax = c;
        first = false;
      }
    ws.box[p] = {ceil_rat(cmin), floor_rat(cmax)};
  }

  note << "exhaustive: every solution of the restricted conic satisfies (" << kCoordNames[fa]
       << " - " << a0.str() << ")^2 <= " << bound_a.str() << " and (" << kCoordNames[fb] << " - "
       << b0.str() << ")^2 <= " << bound_b.str() << " (negative-definite box bound, slack = "
       << R.str() << ")";
  ws.note = note.str();
  return ws;
}

WitnessSet enumerate_classes(const GramLattice& L, const Int& d, const Int& s) {
  return enumerate_slice(L, DivisorClass::h(), d, s);
}

std::vector<DivisorClass> brute_force_oracle(const GramLattice& L, const Int& d, const Int& s,
                                             const Int& box_radius) {
  if (box_radius < 0) throw parameter_error("oracle box radius must be >= 0");
  std::vector<DivisorClass> out;

  // Fast path: all |coords| <= r, so |sum g_ij c_i c_j| <= (sum |g_ij|) r^2.
  // When that fits comfortably in int64 the loop runs on machine words; the
  // bound is computed exactly first, so the fast path is still exact.
  Int gsum = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gsum += abs(L.entry(i, j));
  const Int value_bound = gsum * box_radius * box_radius + 1;
  const Int kFits = Int(1) << 62;
  if (value_bound < kFits) {
    if (abs(d) >= value_bound || abs(s) >= value_bound) return out;  // unreachable values
    int64_t g[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = static_cast<int64_t>(L.entry(i, j));
    const int64_t r = static_cast<int64_t>(box_radius);
    const int64_t d64 = static_cast<int64_t>(d), s64 = static_cast<int64_t>(s);
    for (int64_t z = -r; z <= r; ++z)
      for (int64_t x = -r; x <= r; ++x)
        for (int64_t y = -r; y <= r; ++y) {
          if (g[0][0] * z + g[0][1] * x + g[0][2] * y != d64) continue;
          int64_t n = g[0][0] * z * z + g[1][1] * x * x + g[2][2] * y * y +
                      2 * (g[0][1] * z * x + g[0][2] * z * y + g[1][2] * x * y);
          if (n == s64) out.emplace_back(Int(z), Int(x), Int(y));
        }
    return out;  // loop order is already lexicographic in (z,x,y)
  }

  for (Int z = -box_radius; z <= box_radius; ++z)
    for (Int x = -box_radius; x <= box_radius; ++x)
      for (Int y = -box_radius; y <= box_radius; ++y) {
        DivisorClass E{z, x, y};
        if (degree(L, E) == d && self_intersection(L, E) == s) out.push_back(E);
      }
  return out;
}

RestrictedForm restricted_form(const GramLattice& L, const Int& d) {
  const Int& g00 = L.entry(0, 0);
  if (g00 == 0) throw parameter_error("restricted form requires h^2 != 0");
  const Int &g01 = L.entry(0, 1), &g02 = L.entry(0, 2);
  const Int A = g00 * L.entry(1, 1) - g01 * g01;
  const Int B = g00 * L.entry(1, 2) - g01 * g02;
  const Int C = g00 * L.entry(2, 2) - g02 * g02;

  RestrictedForm rf;
  rf.qxx = Rat(A, g00);
  rf.qxy = Rat(2 * B, g00);
  rf.qyy = Rat(C, g00);
  rf.q0 = Rat(d * d, g00);
  rf.m = g00;
  rf.cx = g01;
  rf.cy = g02;
  rf.cd = d;
  rf.solvable = d % gcd(gcd(abs(g01), abs(g02)), abs(g00)) == 0;
  return rf;
}

Int slice_discriminant(const Int& u) { return u * u - 18 * u + 61; }

Int slice_discriminant_a(const Int& a, const Int& u) {
  return 4 * u * u - 36 * a * u + 80 * a * a - 12 * a - 32;
}

namespace {

// D2(w) = w^2 - 18aw + (80a^2 - 12a - 32) is the general slice discriminant
// in the doubled variable w = 2u, where the symmetry center 9a is integral.
Int doubled_discriminant_a(const Int& a, const Int& w) {
  return w * w - 18 * a * w + 80 * a * a - 12 * a - 32;
}

}  // namespace

DiscriminantCertificate discriminant_certificate(const Int& a, const Int& u_lo, const Int& u_hi) {
  if (a < 2) throw parameter_error("discriminant certificate requires a >= 2");
  if (u_lo > u_hi) throw parameter_error("discriminant certificate requires u_lo <= u_hi");

  DiscriminantCertificate cert;
  cert.a = a;
  cert.u_lo = u_lo;
  cert.u_hi = u_hi;

  auto scan = [](DiscriminantSection& sec, auto&& value, auto&& mirror_value) {
    sec.all_negative = true;
    sec.symmetry_ok = true;
    bool first = true;
    for (Int u = sec.u_lo; u <= sec.u_hi; ++u) {
      Int v = value(u);
      if (v >= 0) sec.all_negative = false;
      if (first || v > sec.max_value) {
        sec.max_value = v;
        sec.argmax_u = u;
      }
      first = false;
      if (v != mirror_value(u)) sec.symmetry_ok = false;
    }
  };

  {
    DiscriminantSection gen;
    gen.name = "slice_discriminant_a";
    gen.u_lo = u_lo;
    gen.u_hi = u_hi;
    gen.symmetric_about = Rat(9 * a, 2);
    scan(
        gen, [&](const Int& u) { return slice_discriminant_a(a, u); },
        // Mirror through 9a/2 on the doubled grid: u <-> 9a - u in w = 2u.
        [&](const Int& u) { return doubled_discriminant_a(a, 18 * a - 2 * u); });
    cert.sections.push_back(std::move(gen));
  }

  if (a == 2) {
    // The degree-2 slice conic exists only for a = 2; its discriminant is
    // negative exactly on a neighborhood of u = 9, certified over [6, 12].
    DiscriminantSection d2;
    d2.name = "slice_discriminant";
    d2.u_lo = 6;
    d2.u_hi = 12;
    d2.symmetric_about = Rat(9);
    scan(
        d2, [&](const Int& u) { return slice_discriminant(u); },
        [&](const Int& u) { return slice_discriminant(18 - u); });
    cert.sections.push_back(std::move(d2));
  }

  cert.pass = true;
  for (const auto& sec : cert.sections)
    if (!sec.all_negative || !sec.symmetry_ok) cert.pass = false;
  return cert;
}

DiscriminantCertificate discriminant_certificate(const Int& a) {
  return discriminant_certificate(a, 4 * a - 2, 5 * a + 2);
}

}  // namespace ulrichk3
