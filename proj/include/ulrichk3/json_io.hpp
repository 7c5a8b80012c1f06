#pragma once

#include <string>

#include <json.hpp>

#include "ulrichk3/rank2.hpp"

namespace ulrichk3 {

using json = nlohmann::json;

// Every lattice integer serializes as a decimal string so that consumers
// never round through doubles; rationals as "p" or "p/q".  nlohmann objects
// keep keys sorted, which (with sorted witness lists) makes all serialized
// output byte-deterministic.

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

json to_json(const InertiaSignature& s);

// {"a": ..., "u": ..., "gram": [[...]]}; a/u omitted for non-builder lattices.
json to_json(const GramLattice& L);
GramLattice lattice_from_json(const json& j);

json to_json(const WitnessSet& ws);
WitnessSet witness_set_from_json(const json& j);

json to_json(const VeryAmpleCertificate& c);
VeryAmpleCertificate very_ample_from_json(const json& j);

json to_json(const UlrichLineBundleCertificate& c);
UlrichLineBundleCertificate ulrich_line_from_json(const json& j);

// Aggregate certificate for a whole Ulrich line search, as emitted by
// `check ... ulrich-lines`.
json ulrich_lines_to_json(const K3Params& params,
                          const std::vector<UlrichLineBundleCertificate>& certs, bool pass);

json to_json(const DiscriminantCertificate& c);

json to_json(const BoundReport& r);

json to_json(const Rank2Row& row);
Rank2Row row_from_json(const json& j);

json to_json(const ScanReport& rep);
ScanReport report_from_json(const json& j);

// dump with 2-space indent and a trailing newline: the byte format every
// writer (CLI, tests) uses.
std::string to_json_string(const json& j);

// RFC 4180 quoting; fixed column order
// a,u,c1sq,c2,ext_dim,moduli_dim,stratum_dim,classification,certificate_ref
// with a header row.
std::string report_to_csv(const ScanReport& rep);

}  // namespace ulrichk3
