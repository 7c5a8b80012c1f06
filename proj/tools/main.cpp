#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ulrichk3/json_io.hpp"
#include "ulrichk3/version.hpp"

namespace uk = ulrichk3;

namespace {

// Exit codes: 0 = pass, 1 = mathematical failure (certificate failed, wrong
// signature, ill-posed query), 2 = usage (bad flags, parameter domain).

int print_lattice(long long a, long long u, bool as_json) {
  uk::GramLattice L = uk::build_k3_lattice(a, u);
  uk::InertiaSignature sig = uk::inertia(L);
  bool even = uk::is_even(L);
  if (as_json) {
    uk::json out = uk::to_json(L);
    out["even"] = even;
    out["inertia"] = uk::to_json(sig);
    std::cout << uk::to_json_string(out);
  } else {
    std::cout << "lattice a=" << a << " u=" << u << "\ngram:\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << " ";
      for (int j = 0; j < 3; ++j) std::cout << " " << L.entry(i, j);
      std::cout << "\n";
    }
    std::cout << "even: " << (even ? "yes" : "no") << "\n"
              << "inertia: (" << sig.positive << "," << sig.negative << "," << sig.zero << ")\n";
  }
  return sig == uk::InertiaSignature{1, 2, 0} ? 0 : 1;
}

bool canonical_lines_present(const std::vector<uk::UlrichLineBundleCertificate>& certs) {
  using D = uk::DivisorClass;
  for (const D& want : {D::A(), D::B(), 3 * D::h() - D::A(), 3 * D::h() - D::B()}) {
    bool found = false;
    for (const auto& c : certs)
      if (c.pass && c.cls == want) found = true;
    if (!found) return false;
  }
  return true;
}

int run_check(long long a, long long u, const std::string& name) {
  if (name == "discriminants") {
    uk::DiscriminantCertificate cert = uk::discriminant_certificate(uk::Int(a));
    std::cout << uk::to_json_string(uk::to_json(cert));
    return cert.pass ? 0 : 1;
  }
  uk::GramLattice L = uk::build_k3_lattice(a, u);
  if (name == "very-ample") {
    uk::VeryAmpleCertificate cert = uk::certify_very_ample(L);
    std::cout << uk::to_json_string(uk::to_json(cert));
    return cert.pass ? 0 : 1;
  }
  // ulrich-lines: the very-ampleness certificate is the premise of the
  // search, so a failing one is reported instead of a line-bundle list.
  uk::VeryAmpleCertificate va = uk::certify_very_ample(L);
  if (!va.pass) {
    uk::json out{{"check", "ulrich-lines"},
                 {"params", uk::json{{"a", uk::Int(a).str()}, {"u", uk::Int(u).str()}}},
                 {"verdict", "fail"},
                 {"witnesses", uk::json::array()},
                 {"subchecks", uk::json::array({uk::to_json(va)})}};
    std::cout << uk::to_json_string(out);
    return 1;
  }
  std::vector<uk::UlrichLineBundleCertificate> certs = uk::find_ulrich_line_bundles(L);
  bool pass = canonical_lines_present(certs);
  for (const auto& c : certs) pass = pass && c.pass;
  std::cout << uk::to_json_string(uk::ulrich_lines_to_json(*L.params(), certs, pass));
  return pass ? 0 : 1;
}

int run_scan(long long a_min, long long a_max, bool verify, const std::string& format,
             unsigned jobs, const std::string& out_path) {
  uk::ScanReport rep = uk::scan_rank2(a_min, a_max, verify, jobs);
  std::string payload =
      format == "csv" ? uk::report_to_csv(rep) : uk::to_json_string(uk::to_json(rep));
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << payload)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
  }
  return rep.failures.empty() ? 0 : 1;
}

int run_bounds(long long a, long long r, bool as_json) {
  uk::BoundReport rep = uk::chern_bounds(a, r);
  if (as_json) {
    std::cout << uk::to_json_string(uk::to_json(rep));
    return 0;
  }
  std::cout << "chern bounds a=" << a << " r=" << r << "\n"
            << "  lower (bogomolov):  " << rep.lower << "\n"
            << "  upper (hodge):      " << uk::rat_to_string(rep.upper) << "\n"
            << "  simple lower:       " << rep.simple_lower << "\n";
  std::cout << "  excluded:           ";
  if (rep.excluded.empty()) std::cout << "(none)";
  for (const auto& v : rep.excluded) std::cout << v << " ";
  std::cout << "\n  parity:             even values only\n"
            << "  equality:           upper attained iff c1 = (3r/2)h\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic certificates for K3 Picard lattices and rank-2 Ulrich bundles"};
  app.set_version_flag("--version", ulrichk3::kVersion);
  app.require_subcommand(1);

  long long a = 0, u = 0, r = 0;
  bool as_json = false, verify = false;
  std::string check_name, format = "json", out_path;
  std::vector<long long> a_range;
  unsigned jobs = 1;

  CLI::App* lattice = app.add_subcommand("lattice", "print Gram matrix, evenness and inertia");
  lattice->add_option("--a", a, "polarization parameter (h^2 = 2a)")->required();
  lattice->add_option("--u", u, "pairing A.B")->required();
  lattice->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* check = app.add_subcommand("check", "run a named certificate");
  check->add_option("--a", a, "polarization parameter")->required();
  check->add_option("--u", u, "pairing A.B")->required();
  check->add_option("name", check_name, "certificate to run")
      ->required()
      ->check(CLI::IsMember({"very-ample", "ulrich-lines", "discriminants"}));

  CLI::App* scan = app.add_subcommand("scan", "rank-2 classification table over an a-range");
  scan->add_option("--a", a_range, "a range: MIN MAX")->required()->expected(2);
  scan->add_flag("--verify", verify, "attach lattice-pipeline certificates to each row");
  scan->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 64u));
  scan->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* bounds = app.add_subcommand("bounds", "Chern-class window for rank-r Ulrich bundles");
  bounds->add_option("--a", a, "polarization parameter")->required();
  bounds->add_option("--r", r, "rank")->required();
  bounds->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lattice->parsed()) return print_lattice(a, u, as_json);
    if (check->parsed()) return run_check(a, u, check_name);
    if (scan->parsed()) return run_scan(a_range[0], a_range[1], verify, format, jobs, out_path);
    if (bounds->parsed()) return run_bounds(a, r, as_json);
  } catch (const uk::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
