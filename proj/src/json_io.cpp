#include "ulrichk3/json_io.hpp"

#include <sstream>

namespace ulrichk3 {

namespace {

std::string int_str(const Int& v) { return v.str(); }

Int int_from(const json& j) { return Int(j.get<std::string>()); }

json witnesses_to_json(const std::vector<DivisorClass>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(to_json(w));
  return arr;
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

json params_to_json(const K3Params& p) {
  return json{{"a", int_str(p.a)}, {"u", int_str(p.u)}};
}

K3Params params_from_json(const json& j) {
  return K3Params{int_from(j.at("a")), int_from(j.at("u"))};
}

const json& subcheck(const json& cert, const std::string& name) {
  for (const auto& sc : cert.at("subchecks"))
    if (sc.at("name") == name) return sc;
  throw parameter_error("certificate is missing subcheck '" + name + "'");
}

}  // namespace

std::string rat_to_string(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json to_json(const DivisorClass& d) {
  return json::array({int_str(d.z), int_str(d.x), int_str(d.y)});
}

DivisorClass divisor_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw parameter_error("divisor class must be [z,x,y]");
  return DivisorClass{int_from(j[0]), int_from(j[1]), int_from(j[2])};
}

json to_json(const InertiaSignature& s) {
  return json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

json to_json(const GramLattice& L) {
  json g = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(int_str(L.entry(i, j)));
    g.push_back(row);
  }
  json out{{"gram", g}};
  if (L.params()) {
    out["a"] = int_str(L.params()->a);
    out["u"] = int_str(L.params()->u);
  }
  return out;
}

GramLattice lattice_from_json(const json& j) {
  Mat3 m;
  const json& g = j.at("gram");
  if (!g.is_array() || g.size() != 3) throw parameter_error("gram must be a 3x3 matrix");
  for (int r = 0; r < 3; ++r) {
    if (!g[r].is_array() || g[r].size() != 3) throw parameter_error("gram must be a 3x3 matrix");
    for (int c = 0; c < 3; ++c) m[r][c] = int_from(g[r][c]);
  }
  if (j.contains("a") && j.contains("u")) {
    GramLattice L = build_k3_lattice(int_from(j.at("a")), int_from(j.at("u")));
    if (L.gram() != m) throw parameter_error("gram does not match its declared (a,u)");
    return L;
  }
  return GramLattice(m);
}

json to_json(const WitnessSet& ws) {
  json box = json::array();
  for (const auto& iv : ws.box) box.push_back(json::array({int_str(iv[0]), int_str(iv[1])}));
  return json{{"d", int_str(ws.d)},     {"s", int_str(ws.s)},
              {"witnesses", witnesses_to_json(ws.witnesses)},
              {"box", box},             {"exhaustive", ws.exhaustive},
              {"note", ws.note}};
}

WitnessSet witness_set_from_json(const json& j) {
  WitnessSet ws;
  ws.d = int_from(j.at("d"));
  ws.s = int_from(j.at("s"));
  for (const auto& w : j.at("witnesses")) ws.witnesses.push_back(divisor_from_json(w));
  const json& box = j.at("box");
  if (!box.is_array() || box.size() != 3) throw parameter_error("witness box must have 3 intervals");
  for (int i = 0; i < 3; ++i) {
    ws.box[i][0] = int_from(box[i].at(0));
    ws.box[i][1] = int_from(box[i].at(1));
  }
  ws.exhaustive = j.at("exhaustive").get<bool>();
  ws.note = j.at("note").get<std::string>();
  return ws;
}

json to_json(const VeryAmpleCertificate& c) {
  json offending = json::array();
  for (const auto* ws : {&c.deg1_sq0, &c.deg2_sq0, &c.deg0_sqm2})
    for (const auto& w : ws->witnesses) offending.push_back(to_json(w));
  json subchecks = json::array(
      {json{{"name", "no-classes-deg1-sq0"},
            {"pass", c.deg1_sq0.witnesses.empty()},
            {"witness_set", to_json(c.deg1_sq0)}},
       json{{"name", "no-classes-deg2-sq0"},
            {"pass", c.deg2_sq0.witnesses.empty()},
            {"witness_set", to_json(c.deg2_sq0)}},
       json{{"name", "no-roots-deg0"},
            {"pass", c.deg0_sqm2.witnesses.empty()},
            {"witness_set", to_json(c.deg0_sqm2)}},
       json{{"name", "h-primitive"}, {"pass", c.h_primitive}}});
  json out{{"check", "very-ample"},
           {"verdict", verdict(c.pass)},
           {"witnesses", offending},
           {"subchecks", subchecks}};
  if (c.params) out["params"] = params_to_json(*c.params);
  return out;
}

VeryAmpleCertificate very_ample_from_json(const json& j) {
  if (j.at("check") != "very-ample") throw parameter_error("not a very-ample certificate");
  VeryAmpleCertificate c;
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  c.deg1_sq0 = witness_set_from_json(subcheck(j, "no-classes-deg1-sq0").at("witness_set"));
  c.deg2_sq0 = witness_set_from_json(subcheck(j, "no-classes-deg2-sq0").at("witness_set"));
  c.deg0_sqm2 = witness_set_from_json(subcheck(j, "no-roots-deg0").at("witness_set"));
  c.h_primitive = subcheck(j, "h-primitive").at("pass").get<bool>();
  c.pass = j.at("verdict") == "pass";
  return c;
}

namespace {

json vanishing_to_json(const std::string& name, const VanishingCheck& vc) {
  return json{{"name", name},
              {"class", to_json(vc.cls)},
              {"degree", int_str(vc.deg)},
              {"square", int_str(vc.self_int)},
              {"degree_is_a", vc.degree_is_a},
              {"square_is_m4", vc.square_is_m4},
              {"divisibility_premise", vc.divisibility_premise},
              {"pass", vc.pass}};
}

VanishingCheck vanishing_from_json(const json& j) {
  VanishingCheck vc;
  vc.cls = divisor_from_json(j.at("class"));
  vc.deg = int_from(j.at("degree"));
  vc.self_int = int_from(j.at("square"));
  vc.degree_is_a = j.at("degree_is_a").get<bool>();
  vc.square_is_m4 = j.at("square_is_m4").get<bool>();
  vc.divisibility_premise = j.at("divisibility_premise").get<bool>();
  vc.pass = j.at("pass").get<bool>();
  return vc;
}

}  // namespace

json to_json(const UlrichLineBundleCertificate& c) {
  json subchecks = json::array({json{{"name", "numeric"},
                                     {"degree", int_str(c.deg)},
                                     {"square", int_str(c.self_int)},
                                     {"pass", c.numeric_ok}},
                                vanishing_to_json("vanishing-down", c.down),
                                vanishing_to_json("vanishing-up", c.up)});
  json out{{"check", "ulrich-line-bundle"},
           {"verdict", verdict(c.pass)},
           {"witnesses", json::array({to_json(c.cls)})},
           {"subchecks", subchecks}};
  if (c.params) out["params"] = params_to_json(*c.params);
  return out;
}

UlrichLineBundleCertificate ulrich_line_from_json(const json& j) {
  if (j.at("check") != "ulrich-line-bundle") throw parameter_error("not an ulrich-line certificate");
  UlrichLineBundleCertificate c;
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  c.cls = divisor_from_json(j.at("witnesses").at(0));
  const json& num = subcheck(j, "numeric");
  c.deg = int_from(num.at("degree"));
  c.self_int = int_from(num.at("square"));
  c.numeric_ok = num.at("pass").get<bool>();
  c.down = vanishing_from_json(subcheck(j, "vanishing-down"));
  c.up = vanishing_from_json(subcheck(j, "vanishing-up"));
  c.pass = j.at("verdict") == "pass";
  return c;
}

json ulrich_lines_to_json(const K3Params& params,
                          const std::vector<UlrichLineBundleCertificate>& certs, bool pass) {
  json subchecks = json::array();
  json offending = json::array();
  for (const auto& c : certs) {
    subchecks.push_back(to_json(c));
    if (!c.pass) offending.push_back(to_json(c.cls));
  }
  return json{{"check", "ulrich-lines"},
              {"params", params_to_json(params)},
              {"verdict", verdict(pass)},
              {"witnesses", offending},
              {"subchecks", subchecks}};
}

json to_json(const DiscriminantCertificate& c) {
  json subchecks = json::array();
  for (const auto& sec : c.sections)
    subchecks.push_back(json{{"name", sec.name},
                             {"u_lo", int_str(sec.u_lo)},
                             {"u_hi", int_str(sec.u_hi)},
                             {"symmetric_about", rat_to_string(sec.symmetric_about)},
                             {"max_value", int_str(sec.max_value)},
                             {"argmax_u", int_str(sec.argmax_u)},
                             {"all_negative", sec.all_negative},
                             {"symmetry_ok", sec.symmetry_ok},
                             {"pass", sec.all_negative && sec.symmetry_ok}});
  return json{{"check", "discriminants"},
              {"params", json{{"a", int_str(c.a)}, {"u_lo", int_str(c.u_lo)}, {"u_hi", int_str(c.u_hi)}}},
              {"verdict", verdict(c.pass)},
              {"witnesses", json::array()},
              {"subchecks", subchecks}};
}

json to_json(const BoundReport& r) {
  json excluded = json::array();
  for (const auto& v : r.excluded) excluded.push_back(int_str(v));
  return json{{"a", int_str(r.a)},
              {"r", int_str(r.r)},
              {"lower", int_str(r.lower)},
              {"upper", rat_to_string(r.upper)},
              {"upper_integral", denominator(r.upper) == 1},
              {"simple_lower", int_str(r.simple_lower)},
              {"excluded", excluded},
              {"even_only", r.even_only},
              {"equality", "upper attained iff c1 =(3r/2)h"}};
}

namespace {

std::string certificate_ref(const Rank2Row& row) {
  std::ostringstream os;
  os << "a" << row.a << "-u" << row.u;
  return os.str();
}

bool has_certificates(const Rank2Row& row) {
  return row.very_ample.has_value() || !row.ulrich_lines.empty();
}

}  // namespace

json to_json(const Rank2Row& row) {
  json out{{"a", int_str(row.a)},
           {"u", int_str(row.u)},
           {"c1sq", int_str(row.c1sq)},
           {"c2", int_str(row.c2)},
           {"ext_dim", int_str(row.ext_dim)},
           {"moduli_dim", int_str(row.moduli_dim)},
           {"stratum_dim", int_str(row.stratum_dim)},
           {"classification", to_string(row.cls)},
           {"reason", row.reason}};
  if (has_certificates(row)) {
    json certs = json::object();
    if (row.very_ample) certs["very_ample"] = to_json(*row.very_ample);
    json lines = json::array();
    for (const auto& c : row.ulrich_lines) lines.push_back(to_json(c));
    certs["ulrich_lines"] = lines;
    out["certificates"] = certs;
    out["certificate_ref"] = certificate_ref(row);
  }
  return out;
}

Rank2Row row_from_json(const json& j) {
  Rank2Row row;
  row.a = int_from(j.at("a"));
  row.u = int_from(j.at("u"));
  row.c1sq = int_from(j.at("c1sq"));
  row.c2 = int_from(j.at("c2"));
  row.ext_dim = int_from(j.at("ext_dim"));
  row.moduli_dim = int_from(j.at("moduli_dim"));
  row.stratum_dim = int_from(j.at("stratum_dim"));
  const std::string cls = j.at("classification").get<std::string>();
  bool found = false;
  for (int c = 0; c <= static_cast<int>(Rank2Class::EXCLUDED); ++c)
    if (to_string(static_cast<Rank2Class>(c)) == cls) {
      row.cls = static_cast<Rank2Class>(c);
      found = true;
    }
  if (!found) throw parameter_error("unknown classification '" + cls + "'");
  row.reason = j.at("reason").get<std::string>();
  if (j.contains("certificates")) {
    const json& certs = j.at("certificates");
    if (certs.contains("very_ample"))
      row.very_ample = very_ample_from_json(certs.at("very_ample"));
    for (const auto& c : certs.at("ulrich_lines"))
      row.ulrich_lines.push_back(ulrich_line_from_json(c));
  }
  return row;
}

json to_json(const ScanReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) rows.push_back(to_json(row));
  json summary = json::object();
  for (const auto& [k, v] : rep.summary) summary[k] = v;
  return json{{"version", rep.version},
              {"a_min", int_str(rep.a_min)},
              {"a_max", int_str(rep.a_max)},
              {"verified", rep.verified},
              {"rows", rows},
              {"summary", summary},
              {"failures", rep.failures}};
}

ScanReport report_from_json(const json& j) {
  ScanReport rep;
  rep.version = j.at("version").get<std::string>();
  rep.a_min = int_from(j.at("a_min"));
  rep.a_max = int_from(j.at("a_max"));
  rep.verified = j.at("verified").get<bool>();
  for (const auto& r : j.at("rows")) rep.rows.push_back(row_from_json(r));
  for (const auto& [k, v] : j.at("summary").items()) rep.summary[k] = v.get<std::size_t>();
  for (const auto& f : j.at("failures")) rep.failures.push_back(f.get<std::string>());
  return rep;
}

std::string to_json_string(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_csv(const ScanReport& rep) {
  std::ostringstream os;
  os << "a,u,c1sq,c2,ext_dim,moduli_dim,stratum_dim,classification,certificate_ref\n";
  for (const auto& row : rep.rows) {
    os << row.a << ',' << row.u << ',' << row.c1sq << ',' << row.c2 << ',' << row.ext_dim << ','
       << row.moduli_dim << ',' << row.stratum_dim << ',' << csv_escape(to_string(row.cls)) << ','
       << csv_escape(has_certificates(row) ? certificate_ref(row) : "") << '\n';
  }
  return os.str();
}

}  // namespace ulrichk3
