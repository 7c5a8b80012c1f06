#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ulrichk3/json_io.hpp"
#include "ulrichk3/version.hpp"

namespace py = pybind11;
namespace uk = ulrichk3;

namespace pybind11 {
namespace detail {

// cpp_int <-> python int, exactly, via decimal strings in both directions.
template <>
struct type_caster<uk::Int> {
  PYBIND11_TYPE_CASTER(uk::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = uk::Int(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const uk::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

// cpp_rational -> fractions.Fraction; accepts Fraction or int on the way in.
template <>
struct type_caster<uk::Rat> {
  PYBIND11_TYPE_CASTER(uk::Rat, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr())) {
      value = uk::Rat(uk::Int(py::str(src).cast<std::string>()));
      return true;
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      uk::Int n(py::str(src.attr("numerator")).cast<std::string>());
      uk::Int d(py::str(src.attr("denominator")).cast<std::string>());
      value = uk::Rat(n, d);
      return true;
    }
    return false;
  }

  static handle cast(const uk::Rat& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object n = py::reinterpret_steal<py::object>(
        PyLong_FromString(uk::numerator(v).str().c_str(), nullptr, 10));
    py::object d = py::reinterpret_steal<py::object>(
        PyLong_FromString(uk::denominator(v).str().c_str(), nullptr, 10));
    return fraction(n, d).release();
  }
};

// DivisorClass <-> (z, x, y) tuple.
template <>
struct type_caster<uk::DivisorClass> {
  PYBIND11_TYPE_CASTER(uk::DivisorClass, const_name("tuple[int, int, int]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 3) return false;
    make_caster<uk::Int> c[3];
    for (int i = 0; i < 3; ++i)
      if (!c[i].load(seq[i], convert)) return false;
    value = uk::DivisorClass{cast_op<uk::Int&&>(std::move(c[0])),
                             cast_op<uk::Int&&>(std::move(c[1])),
                             cast_op<uk::Int&&>(std::move(c[2]))};
    return true;
  }

  static handle cast(const uk::DivisorClass& d, return_value_policy policy, handle parent) {
    py::tuple t(3);
    t[0] = py::reinterpret_steal<py::object>(make_caster<uk::Int>::cast(d.z, policy, parent));
    t[1] = py::reinterpret_steal<py::object>(make_caster<uk::Int>::cast(d.x, policy, parent));
    t[2] = py::reinterpret_steal<py::object>(make_caster<uk::Int>::cast(d.y, policy, parent));
    return t.release();
  }
};

// K3Params <-> (a, u) tuple.
template <>
struct type_caster<uk::K3Params> {
  PYBIND11_TYPE_CASTER(uk::K3Params, const_name("tuple[int, int]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 2) return false;
    make_caster<uk::Int> a, u;
    if (!a.load(seq[0], convert) || !u.load(seq[1], convert)) return false;
    value = uk::K3Params{cast_op<uk::Int&&>(std::move(a)), cast_op<uk::Int&&>(std::move(u))};
    return true;
  }

  static handle cast(const uk::K3Params& p, return_value_policy policy, handle parent) {
    py::tuple t(2);
    t[0] = py::reinterpret_steal<py::object>(make_caster<uk::Int>::cast(p.a, policy, parent));
    t[1] = py::reinterpret_steal<py::object>(make_caster<uk::Int>::cast(p.u, policy, parent));
    return t.release();
  }
};

// InertiaSignature <-> (positive, negative, zero) tuple.
template <>
struct type_caster<uk::InertiaSignature> {
  PYBIND11_TYPE_CASTER(uk::InertiaSignature, const_name("tuple[int, int, int]"));

  bool load(handle src, bool) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 3) return false;
    value = uk::InertiaSignature{seq[0].cast<int>(), seq[1].cast<int>(), seq[2].cast<int>()};
    return true;
  }

  static handle cast(const uk::InertiaSignature& s, return_value_policy, handle) {
    return py::make_tuple(s.positive, s.negative, s.zero).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

template <typename T>
std::string dump_json(const T& v) {
  return uk::to_json_string(uk::to_json(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic toolkit for rank-3 K3 Picard lattices and rank-2 Ulrich bundles";
  m.attr("__version__") = uk::kVersion;

  py::register_exception<uk::parameter_error>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<uk::root_error>(m, "RootError", PyExc_ValueError);
  py::register_exception<uk::ill_posed_query>(m, "IllPosedQueryError", PyExc_ValueError);
  py::register_exception<uk::iteration_limit_error>(m, "IterationLimitError", PyExc_RuntimeError);

  py::class_<uk::GramLattice>(m, "GramLattice")
      .def(py::init([](const std::vector<std::vector<uk::Int>>& rows) {
             if (rows.size() != 3 || rows[0].size() != 3 || rows[1].size() != 3 ||
                 rows[2].size() != 3)
               throw uk::parameter_error("Gram matrix must be 3x3");
             uk::Mat3 g;
             for (int i = 0; i < 3; ++i)
               for (int j = 0; j < 3; ++j) g[i][j] = rows[i][j];
             return uk::GramLattice(g);
           }),
           py::arg("gram"))
      .def_property_readonly("gram",
                             [](const uk::GramLattice& L) {
                               std::vector<std::vector<uk::Int>> rows(3);
                               for (int i = 0; i < 3; ++i)
                                 for (int j = 0; j < 3; ++j) rows[i].push_back(L.entry(i, j));
                               return rows;
                             })
      .def_property_readonly(
          "params", [](const uk::GramLattice& L) { return L.params(); })
      .def("entry", &uk::GramLattice::entry, py::arg("i"), py::arg("j"))
      .def("to_json", &dump_json<uk::GramLattice>)
      .def("__eq__", [](const uk::GramLattice& a, const uk::GramLattice& b) { return a == b; })
      .def("__repr__", [](const uk::GramLattice& L) {
        return "GramLattice(" + uk::to_json(L).dump() + ")";
      });

  py::class_<uk::WitnessSet>(m, "WitnessSet")
      .def_readonly("d", &uk::WitnessSet::d)
      .def_readonly("s", &uk::WitnessSet::s)
      .def_readonly("witnesses", &uk::WitnessSet::witnesses)
      .def_property_readonly("box",
                             [](const uk::WitnessSet& ws) {
                               std::vector<std::pair<uk::Int, uk::Int>> b;
                               for (const auto& iv : ws.box) b.emplace_back(iv[0], iv[1]);
                               return b;
                             })
      .def_readonly("exhaustive", &uk::WitnessSet::exhaustive)
      .def_readonly("note", &uk::WitnessSet::note)
      .def("to_json", &dump_json<uk::WitnessSet>);

  py::class_<uk::ChernData>(m, "ChernData")
      .def(py::init([](uk::Int r, uk::Int c1h, uk::Int c1sq, uk::Int c2) {
             return uk::ChernData{std::move(r), std::move(c1h), std::move(c1sq), std::move(c2)};
           }),
           py::arg("r"), py::arg("c1h"), py::arg("c1sq"), py::arg("c2"))
      .def_readwrite("r", &uk::ChernData::r)
      .def_readwrite("c1h", &uk::ChernData::c1h)
      .def_readwrite("c1sq", &uk::ChernData::c1sq)
      .def_readwrite("c2", &uk::ChernData::c2)
      .def("__eq__", [](const uk::ChernData& a, const uk::ChernData& b) { return a == b; })
      .def("__repr__", [](const uk::ChernData& c) {
        return "ChernData(r=" + c.r.str() + ", c1h=" + c.c1h.str() + ", c1sq=" + c.c1sq.str() +
               ", c2=" + c.c2.str() + ")";
      });

  py::class_<uk::VanishingCheck>(m, "VanishingCheck")
      .def_readonly("cls", &uk::VanishingCheck::cls)
      .def_readonly("deg", &uk::VanishingCheck::deg)
      .def_readonly("self_int", &uk::VanishingCheck::self_int)
      .def_readonly("degree_is_a", &uk::VanishingCheck::degree_is_a)
      .def_readonly("square_is_m4", &uk::VanishingCheck::square_is_m4)
      .def_readonly("divisibility_premise", &uk::VanishingCheck::divisibility_premise)
      .def_readonly("pass_", &uk::VanishingCheck::pass);

  py::class_<uk::VeryAmpleCertificate>(m, "VeryAmpleCertificate")
      .def_readonly("params", &uk::VeryAmpleCertificate::params)
      .def_readonly("deg1_sq0", &uk::VeryAmpleCertificate::deg1_sq0)
      .def_readonly("deg2_sq0", &uk::VeryAmpleCertificate::deg2_sq0)
      .def_readonly("deg0_sqm2", &uk::VeryAmpleCertificate::deg0_sqm2)
      .def_readonly("h_primitive", &uk::VeryAmpleCertificate::h_primitive)
      .def_readonly("pass_", &uk::VeryAmpleCertificate::pass)
      .def("to_json", &dump_json<uk::VeryAmpleCertificate>);

  py::class_<uk::UlrichLineBundleCertificate>(m, "UlrichLineBundleCertificate")
      .def_readonly("params", &uk::UlrichLineBundleCertificate::params)
      .def_readonly("cls", &uk::UlrichLineBundleCertificate::cls)
      .def_readonly("deg", &uk::UlrichLineBundleCertificate::deg)
      .def_readonly("self_int", &uk::UlrichLineBundleCertificate::self_int)
      .def_readonly("numeric_ok", &uk::UlrichLineBundleCertificate::numeric_ok)
      .def_readonly("down", &uk::UlrichLineBundleCertificate::down)
      .def_readonly("up", &uk::UlrichLineBundleCertificate::up)
      .def_readonly("pass_", &uk::UlrichLineBundleCertificate::pass)
      .def("to_json", &dump_json<uk::UlrichLineBundleCertificate>);

  py::class_<uk::NefWalkResult>(m, "NefWalkResult")
      .def_readonly("result", &uk::NefWalkResult::result)
      .def_readonly("applied_roots", &uk::NefWalkResult::applied_roots);

  py::class_<uk::DiscriminantCertificate>(m, "DiscriminantCertificate")
      .def_readonly("a", &uk::DiscriminantCertificate::a)
      .def_readonly("u_lo", &uk::DiscriminantCertificate::u_lo)
      .def_readonly("u_hi", &uk::DiscriminantCertificate::u_hi)
      .def_readonly("pass_", &uk::DiscriminantCertificate::pass)
      .def("to_json", &dump_json<uk::DiscriminantCertificate>);

  py::class_<uk::BoundReport>(m, "BoundReport")
      .def_readonly("a", &uk::BoundReport::a)
      .def_readonly("r", &uk::BoundReport::r)
      .def_readonly("lower", &uk::BoundReport::lower)
      .def_readonly("upper", &uk::BoundReport::upper)
      .def_readonly("simple_lower", &uk::BoundReport::simple_lower)
      .def_readonly("excluded", &uk::BoundReport::excluded)
      .def_readonly("even_only", &uk::BoundReport::even_only)
      .def("to_json", &dump_json<uk::BoundReport>);

  py::class_<uk::ModuliDims>(m, "ModuliDims")
      .def_readonly("ext_dim", &uk::ModuliDims::ext_dim)
      .def_readonly("moduli_dim", &uk::ModuliDims::moduli_dim)
      .def_readonly("stratum_dim", &uk::ModuliDims::stratum_dim)
      .def_readonly("vacuous", &uk::ModuliDims::vacuous);

  py::class_<uk::Rank2Row>(m, "Rank2Row")
      .def_readonly("a", &uk::Rank2Row::a)
      .def_readonly("u", &uk::Rank2Row::u)
      .def_readonly("c1sq", &uk::Rank2Row::c1sq)
      .def_readonly("c2", &uk::Rank2Row::c2)
      .def_readonly("ext_dim", &uk::Rank2Row::ext_dim)
      .def_readonly("moduli_dim", &uk::Rank2Row::moduli_dim)
      .def_readonly("stratum_dim", &uk::Rank2Row::stratum_dim)
      .def_property_readonly("classification",
                             [](const uk::Rank2Row& r) { return uk::to_string(r.cls); })
      .def_readonly("reason", &uk::Rank2Row::reason)
      .def_readonly("very_ample", &uk::Rank2Row::very_ample)
      .def_readonly("ulrich_lines", &uk::Rank2Row::ulrich_lines)
      .def("to_json", &dump_json<uk::Rank2Row>);

  py::class_<uk::ScanReport>(m, "ScanReport")
      .def_readonly("version", &uk::ScanReport::version)
      .def_readonly("a_min", &uk::ScanReport::a_min)
      .def_readonly("a_max", &uk::ScanReport::a_max)
      .def_readonly("verified", &uk::ScanReport::verified)
      .def_readonly("rows", &uk::ScanReport::rows)
      .def_readonly("summary", &uk::ScanReport::summary)
      .def_readonly("failures", &uk::ScanReport::failures)
      .def("to_json", &dump_json<uk::ScanReport>)
      .def("to_csv", &uk::report_to_csv);

  m.def("build_k3_lattice", &uk::build_k3_lattice, py::arg("a"), py::arg("u"));
  m.def("pairing", &uk::pairing, py::arg("lattice"), py::arg("d1"), py::arg("d2"));
  m.def("self_intersection", &uk::self_intersection, py::arg("lattice"), py::arg("d"));
  m.def("degree", &uk::degree, py::arg("lattice"), py::arg("d"));
  m.def("inertia", &uk::inertia, py::arg("lattice"));
  m.def("is_even", &uk::is_even, py::arg("lattice"));
  m.def("is_primitive", &uk::is_primitive, py::arg("d"));
  m.def("reflect", &uk::reflect, py::arg("lattice"), py::arg("d"), py::arg("root"));

  m.def("enumerate_classes", &uk::enumerate_classes, py::arg("lattice"), py::arg("d"),
        py::arg("s"));
  m.def("enumerate_slice", &uk::enumerate_slice, py::arg("lattice"), py::arg("w"), py::arg("d"),
        py::arg("s"));
  m.def("brute_force_oracle", &uk::brute_force_oracle, py::arg("lattice"), py::arg("d"),
        py::arg("s"), py::arg("box_radius"));
  m.def("slice_discriminant", &uk::slice_discriminant, py::arg("u"));
  m.def("slice_discriminant_a", &uk::slice_discriminant_a, py::arg("a"), py::arg("u"));
  m.def("discriminant_certificate",
        py::overload_cast<const uk::Int&, const uk::Int&, const uk::Int&>(
            &uk::discriminant_certificate),
        py::arg("a"), py::arg("u_lo"), py::arg("u_hi"));
  m.def("discriminant_certificate",
        py::overload_cast<const uk::Int&>(&uk::discriminant_certificate), py::arg("a"));

  m.def("riemann_roch_chi", &uk::riemann_roch_chi, py::arg("chern"));
  m.def("twist", &uk::twist, py::arg("chern"), py::arg("hsq"), py::arg("t"));
  m.def("hilbert_polynomial", &uk::hilbert_polynomial, py::arg("chern"), py::arg("hsq"),
        py::arg("t"));
  m.def("slope", &uk::slope, py::arg("chern"));
  m.def("ulrich_numerical_conditions", &uk::ulrich_numerical_conditions, py::arg("chern"),
        py::arg("a"));
  m.def("ulrich_dual_transform", &uk::ulrich_dual_transform, py::arg("chern"), py::arg("a"));
  m.def("certify_very_ample", &uk::certify_very_ample, py::arg("lattice"));
  m.def("nefify",
        py::overload_cast<const uk::GramLattice&, const uk::DivisorClass&, const uk::Int&>(
            &uk::nefify),
        py::arg("lattice"), py::arg("d"), py::arg("radius"));
  m.def("nefify",
        py::overload_cast<const uk::GramLattice&, const uk::DivisorClass&>(&uk::nefify),
        py::arg("lattice"), py::arg("d"));
  m.def("find_ulrich_line_bundles", &uk::find_ulrich_line_bundles, py::arg("lattice"));

  m.def("chern_bounds", &uk::chern_bounds, py::arg("a"), py::arg("r"));
  m.def("bogomolov_check", &uk::bogomolov_check, py::arg("chern"), py::arg("a"));
  m.def("hodge_index_check", &uk::hodge_index_check, py::arg("chern"), py::arg("a"));
  m.def("classify_u", &uk::classify_u, py::arg("a"), py::arg("u"));
  m.def("moduli_dimensions", &uk::moduli_dimensions, py::arg("a"), py::arg("u"));
  m.def("scan_rank2", &uk::scan_rank2, py::arg("a_min"), py::arg("a_max"), py::arg("verify"),
        py::arg("jobs") = 1);
}
