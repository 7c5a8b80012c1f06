#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "ulrichk3/json_io.hpp"

using namespace ulrichk3;

TEST_CASE("rational string forms") {
  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("9/2") == Rat(9, 2));
  CHECK(rat_from_string("-11") == Rat(-11));

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 60);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat q(num(rng), den(rng));
    CHECK(rat_from_string(rat_to_string(q)) == q);
  }
}

TEST_CASE("divisor classes round-trip through JSON, including huge entries") {
  const DivisorClass small{3, -1, 0};
  CHECK(divisor_from_json(to_json(small)) == small);

  // Coordinates far beyond 64 bits must survive: decimal-string encoding.
  const Int huge = Int("123456789012345678901234567890123456789");
  const DivisorClass big{huge, -huge, Int(7)};
  const json j = to_json(big);
  CHECK(j[0].get<std::string>() == huge.str());
  CHECK(divisor_from_json(j) == big);
}

TEST_CASE("lattices round-trip through JSON") {
  SUBCASE("builder lattice keeps its parameters") {
    const GramLattice L = build_k3_lattice(3, 11);
    const json j = to_json(L);
    CHECK(j.at("a").get<std::string>() == "3");
    CHECK(j.at("u").get<std::string>() == "11");
    const GramLattice back = lattice_from_json(j);
    CHECK(back == L);
    REQUIRE(back.params().has_value());
    CHECK(back.params()->a == 3);
  }
  SUBCASE("hand-built lattice") {
    Mat3 g{};
    g[0][0] = 2;
    g[1][1] = -2;
    g[2][2] = -2;
    const GramLattice L(g);
    const GramLattice back = lattice_from_json(to_json(L));
    CHECK(back == L);
    CHECK_FALSE(back.params().has_value());
  }
  SUBCASE("inconsistent gram versus parameters is rejected") {
    json j = to_json(build_k3_lattice(2, 6));
    j["u"] = "7";  // gram says 6
    CHECK_THROWS_AS(lattice_from_json(j), parameter_error);
  }
}

TEST_CASE("witness sets round-trip through JSON") {
  const GramLattice L = build_k3_lattice(2, 5);
  const WitnessSet nonEmpty = enumerate_classes(L, 0, -2);
  REQUIRE(nonEmpty.witnesses.size() == 2);
  CHECK(witness_set_from_json(to_json(nonEmpty)) == nonEmpty);

  const WitnessSet empty = enumerate_classes(build_k3_lattice(2, 6), 0, -2);
  CHECK(witness_set_from_json(to_json(empty)) == empty);

  const json j = to_json(nonEmpty);
  CHECK(j.at("exhaustive").get<bool>());
  CHECK(j.at("witnesses").size() == 2);
  CHECK(j.at("box").is_array());
}

TEST_CASE("very-ampleness certificates in JSON") {
  SUBCASE("passing certificate") {
    const VeryAmpleCertificate cert = certify_very_ample(build_k3_lattice(2, 6));
    const json j = to_json(cert);
    CHECK(j.at("check") == "very-ample");
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("witnesses").empty());
    REQUIRE(j.contains("subchecks"));
    std::set<std::string> names;
    for (const auto& sc : j.at("subchecks")) {
      names.insert(sc.at("name").get<std::string>());
      CHECK(sc.at("pass").get<bool>());
    }
    CHECK(names == std::set<std::string>{"no-classes-deg1-sq0", "no-classes-deg2-sq0",
                                         "no-roots-deg0", "h-primitive"});
    CHECK(very_ample_from_json(j) == cert);
  }
  SUBCASE("failing certificate carries its offenders") {
    const VeryAmpleCertificate cert = certify_very_ample(build_k3_lattice(2, 5));
    const json j = to_json(cert);
    CHECK(j.at("verdict") == "fail");
    CHECK(j.at("witnesses").size() == 2);
    CHECK(very_ample_from_json(j) == cert);
  }
  SUBCASE("wrong check name is rejected") {
    json j = to_json(certify_very_ample(build_k3_lattice(2, 6)));
    j["check"] = "something-else";
    CHECK_THROWS_AS(very_ample_from_json(j), parameter_error);
  }
}

TEST_CASE("Ulrich line certificates in JSON") {
  const GramLattice L = build_k3_lattice(2, 6);
  const auto certs = find_ulrich_line_bundles(L);
  REQUIRE(certs.size() == 4);
  for (const auto& c : certs) {
    const json j = to_json(c);
    CHECK(j.at("check") == "ulrich-line-bundle");
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("witnesses").size() == 1);
    std::set<std::string> names;
    for (const auto& sc : j.at("subchecks")) names.insert(sc.at("name").get<std::string>());
    CHECK(names == std::set<std::string>{"numeric", "vanishing-down", "vanishing-up"});
    CHECK(ulrich_line_from_json(j) == c);
  }

  const json agg = ulrich_lines_to_json(K3Params{2, 6}, certs, true);
  CHECK(agg.at("check") == "ulrich-lines");
  CHECK(agg.at("verdict") == "pass");
}

TEST_CASE("discriminant certificates in JSON") {
  const json j = to_json(discriminant_certificate(2));
  CHECK(j.at("check") == "discriminants");
  CHECK(j.at("verdict") == "pass");
  const json bad = to_json(discriminant_certificate(2, 0, 20));
  CHECK(bad.at("verdict") == "fail");
}

TEST_CASE("bound reports in JSON") {
  const json j21 = to_json(chern_bounds(2, 1));
  CHECK(j21.at("upper").get<std::string>() == "9");
  CHECK(j21.at("upper_integral").get<bool>());
  CHECK(j21.at("excluded").empty());

  const json j31 = to_json(chern_bounds(3, 1));
  CHECK(j31.at("upper").get<std::string>() == "27/2");
  CHECK_FALSE(j31.at("upper_integral").get<bool>());

  const json j42 = to_json(chern_bounds(4, 2));
  REQUIRE(j42.at("excluded").size() == 1);
  CHECK(j42.at("excluded")[0].get<std::string>() == "70");
}

TEST_CASE("scan rows and reports round-trip through JSON") {
  SUBCASE("verified row with certificates") {
    const ScanReport rep = scan_rank2(2, 2, true);
    const Rank2Row* withCerts = nullptr;
    for (const auto& row : rep.rows)
      if (row.very_ample.has_value()) withCerts = &row;
    REQUIRE(withCerts != nullptr);
    const json j = to_json(*withCerts);
    CHECK(j.contains("certificates"));
    CHECK(j.at("certificate_ref").get<std::string>() ==
          "a" + withCerts->a.str() + "-u" + withCerts->u.str());
    CHECK(row_from_json(j) == *withCerts);
  }
  SUBCASE("plain row omits the certificate block") {
    const Rank2Row row = classify_u(2, 5);
    const json j = to_json(row);
    CHECK_FALSE(j.contains("certificates"));
    CHECK_FALSE(j.contains("certificate_ref"));
    CHECK(row_from_json(j) == row);
  }
  SUBCASE("full report round-trip") {
    const ScanReport rep = scan_rank2(2, 3, true);
    const std::string text = to_json_string(to_json(rep));
    const ScanReport back = report_from_json(json::parse(text));
    CHECK(back == rep);
    // Serialization itself is deterministic.
    CHECK(to_json_string(to_json(back)) == text);
  }
}

TEST_CASE("CSV rendering") {
  const ScanReport rep = scan_rank2(2, 2, true);
  const std::string csv = report_to_csv(rep);

  std::vector<std::string> lines;
  std::istringstream is(csv);
  for (std::string line; std::getline(is, line);) lines.push_back(line);

  REQUIRE(lines.size() == 11);  // header + 10 rows
  CHECK(lines[0] == "a,u,c1sq,c2,ext_dim,moduli_dim,stratum_dim,classification,certificate_ref");
  CHECK(lines[1] == "2,5,18,5,-1,-4,-2,IMPOSSIBLE,");
  CHECK(lines[2] == "2,6,20,6,0,-2,-1,DECOMPOSABLE_ONLY,a2-u6");
  CHECK(lines[10] == "2,14,36,14,8,14,7,SPECIAL,");
}
