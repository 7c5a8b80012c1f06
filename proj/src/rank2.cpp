#include "ulrichk3/rank2.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "ulrichk3/version.hpp"

namespace ulrichk3 {

BoundReport chern_bounds(const Int& a, const Int& r) {
  if (a < 2) throw parameter_error("chern bounds require a >= 2");
  if (r < 1) throw parameter_error("chern bounds require r >= 1");
  BoundReport rep;
  rep.a = a;
  rep.r = r;
  rep.lower = 4 * (a - 1) * r * r;
  rep.upper = Rat(9 * a * r * r, 2);
  rep.simple_lower = (4 * a - 2) * r * r - 2;
  if (r % 2 == 0) rep.excluded.push_back(9 * a * r * r / 2 - 2);
  rep.even_only = true;
  return rep;
}

bool bogomolov_check(const ChernData& c, const Int& a) {
  return c.c1sq >= 4 * (a - 1) * c.r * c.r;
}

bool hodge_index_check(const ChernData& c, const Int& a) {
  return 2 * a * c.c1sq <= c.c1h * c.c1h;
}

const std::string& to_string(Rank2Class c) {
  static const std::string names[] = {
      "IMPOSSIBLE",    "DECOMPOSABLE_ONLY", "STRICTLY_SEMISTABLE_GENERAL",
      "STABLE_EXISTS", "SPECIAL",           "EXCLUDED",
  };
  return names[static_cast<int>(c)];
}

ModuliDims moduli_dimensions(const Int& a, const Int& u) {
  if (a < 2) throw parameter_error("moduli dimensions require a >= 2");
  ModuliDims md;
  md.ext_dim = u - 4 * a + 2;
  md.moduli_dim = 2 * u - 8 * a + 2;
  md.stratum_dim = u - 4 * a + 1;
  md.vacuous = u < 4 * a - 1;
  return md;
}

Rank2Row classify_u(const Int& a, const Int& u) {
  if (a < 2) throw parameter_error("classification requires a >= 2");
  Rank2Row row;
  row.a = a;
  row.u = u;
  row.c1sq = 8 * a - 8 + 2 * u;
  row.c2 = u;
  ModuliDims md = moduli_dimensions(a, u);
  row.ext_dim = md.ext_dim;
  row.moduli_dim = md.moduli_dim;
  row.stratum_dim = md.stratum_dim;

  std::ostringstream why;
  if (u > 5 * a + 4) {
    row.cls = Rank2Class::IMPOSSIBLE;
    why << "hodge-index upper bound violated: c1^2 = " << row.c1sq << " > " << 18 * a;
  } else if (u == 5 * a + 4) {
    row.cls = Rank2Class::SPECIAL;
    why << "c1 = 3h boundary (c1^2 = 18a); realized on other Picard lattices";
  } else if (u == 5 * a + 3) {
    row.cls = Rank2Class::EXCLUDED;
    why << "c1^2 = " << row.c1sq << " is the excluded value (9/2)a r^2 - 2";
  } else if (u >= 4 * a) {
    row.cls = Rank2Class::STABLE_EXISTS;
  } else if (u == 4 * a - 1) {
    row.cls = Rank2Class::STRICTLY_SEMISTABLE_GENERAL;
    why << "general member strictly semistable (c1^2 = 16a-10, the simple lower bound)";
  } else if (u == 4 * a - 2) {
    row.cls = Rank2Class::DECOMPOSABLE_ONLY;
    why << "c1^2 = 16a-12 < simple lower bound: every bundle splits as O(A) + O(B)";
  } else if (u == 4 * a - 3) {
    row.cls = Rank2Class::IMPOSSIBLE;
    why << "effective (-2)-class obstruction: (A-B)^2 = -2 when A.B = 4a-3";
  } else if (u == 4 * a - 4) {
    row.cls = Rank2Class::IMPOSSIBLE;
    why << "simple lower bound violated: c1^2 = 16(a-1) < " << 16 * a - 10
        << "; Bogomolov equality, attained by direct sums O(D) + O(D) only";
  } else {
    row.cls = Rank2Class::IMPOSSIBLE;
    why << "bogomolov lower bound violated: c1^2 = " << row.c1sq << " < " << 16 * (a - 1);
  }
  row.reason = why.str();
  return row;
}

namespace {

void verify_row(Rank2Row& row, std::vector<std::string>& failures) {
  const Int &a = row.a, &u = row.u;
  auto record = [&](const std::string& what) {
    std::ostringstream os;
    os << "a=" << a << " u=" << u << ": " << what;
    failures.push_back(os.str());
  };
  try {
    GramLattice L = build_k3_lattice(a, u);
    row.very_ample = certify_very_ample(L);
    if (!row.very_ample->pass) {
      record("very-ampleness certificate failed");
      return;
    }
    row.ulrich_lines = find_ulrich_line_bundles(L);
    std::size_t passing = 0;
    for (const auto& c : row.ulrich_lines)
      if (c.pass) ++passing;
    if (passing < 4) record("fewer than four certified Ulrich line classes");
    for (const DivisorClass& want :
         {DivisorClass::A(), DivisorClass::B(), 3 * DivisorClass::h() - DivisorClass::A(),
          3 * DivisorClass::h() - DivisorClass::B()}) {
      bool found = false;
      for (const auto& c : row.ulrich_lines)
        if (c.pass && c.cls == want) found = true;
      if (!found) record("expected Ulrich line class missing from the certified set");
    }
    if (u >= 4 * a - 1 && row.ext_dim < 1) record("ext dimension below 1 on an existence row");
  } catch (const std::exception& e) {
    record(std::string("lattice pipeline error: ") + e.what());
  }
}

}  // namespace

ScanReport scan_rank2(const Int& a_min, const Int& a_max, bool verify, unsigned jobs) {
  if (a_min < 2) throw parameter_error("scan requires a_min >= 2");
  if (a_min > a_max) throw parameter_error("scan requires a_min <= a_max");
  if (jobs < 1) throw parameter_error("scan requires jobs >= 1");

  struct Cell {
    Int a, u;
  };
  std::vector<Cell> cells;
  for (Int a = a_min; a <= a_max; ++a)
    for (Int u = 4 * a - 3; u <= 5 * a + 4; ++u) cells.push_back({a, u});

  std::vector<Rank2Row> rows(cells.size());
  std::vector<std::vector<std::string>> cell_failures(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      rows[i] = classify_u(cells[i].a, cells[i].u);
      if (verify && cells[i].u >= 4 * cells[i].a - 2 && cells[i].u <= 5 * cells[i].a + 2)
        verify_row(rows[i], cell_failures[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanReport rep;
  rep.version = kVersion;
  rep.a_min = a_min;
  rep.a_max = a_max;
  rep.verified = verify;
  rep.rows = std::move(rows);
  for (const auto& row : rep.rows) ++rep.summary[to_string(row.cls)];
  for (auto& fl : cell_failures)
    for (auto& f : fl) rep.failures.push_back(std::move(f));
  return rep;
}

}  // namespace ulrichk3
