#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "ncfapprox/approx.hpp"
#include "ncfapprox/bounds.hpp"
#include "ncfapprox/parse.hpp"

namespace py = pybind11;
using namespace ncfapprox;

namespace {

py::object to_py(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

Integer from_py(const py::int_& x) { return Integer(py::str(x).cast<std::string>(), 10); }

QuadNum as_quad(const py::object& x) {
  if (py::isinstance<QuadNum>(x)) return x.cast<QuadNum>();
  if (py::isinstance<py::int_>(x)) return QuadNum(from_py(x));
  if (py::isinstance<py::str>(x)) return parse_number(x.cast<std::string>());
  throw py::type_error("expected QuadNum, int or str");
}

NcfExpansion as_ncf(const py::object& x) {
  if (py::isinstance<NcfExpansion>(x)) return x.cast<NcfExpansion>();
  if (py::isinstance<py::str>(x)) return parse_expansion(x.cast<std::string>());
  return expand(as_quad(x));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact inhomogeneous approximation constants over negative continued fractions";

  static py::exception<Error> error(m, "NcfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<QuadNum>(m, "QuadNum")
      .def(py::init([](const py::object& x) { return as_quad(x); }))
      .def_static("surd", [](const py::int_& a, const py::int_& b, const py::int_& d, const py::int_& c) {
        return QuadNum::surd(from_py(a), from_py(b), from_py(d), from_py(c));
      }, py::arg("a"), py::arg("b"), py::arg("D"), py::arg("c"))
      .def_static("rational", [](const py::int_& p, const py::int_& q) { return QuadNum::rational(from_py(p), from_py(q)); })
      .def_property_readonly("a", [](const QuadNum& x) { return to_py(x.a()); })
      .def_property_readonly("b", [](const QuadNum& x) { return to_py(x.b()); })
      .def_property_readonly("c", [](const QuadNum& x) { return to_py(x.c()); })
      .def_property_readonly("D", [](const QuadNum& x) { return to_py(x.radicand()); })
      .def("is_rational", &QuadNum::is_rational)
      .def("sign", &QuadNum::sign)
      .def("reciprocal", &QuadNum::reciprocal)
      .def("conjugate", &QuadNum::conjugate)
      .def("floor", [](const QuadNum& x) { return to_py(x.floor()); })
      .def("to_decimal", [](const QuadNum& x, int digits) { return to_decimal(x, digits); }, py::arg("digits") = 12)
      .def("__float__", [](const QuadNum& x) { return to_double(x); })
      .def("__str__", &QuadNum::to_string)
      .def("__repr__", [](const QuadNum& x) { return "QuadNum('" + x.to_string() + "')"; })
      .def("__hash__", [](const QuadNum& x) { return py::hash(py::str(x.to_string())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  py::class_<NcfExpansion>(m, "NcfExpansion")
      .def(py::init<std::vector<long>, std::vector<long>>(), py::arg("preperiod"), py::arg("period"))
      .def_property_readonly("preperiod", &NcfExpansion::preperiod)
      .def_property_readonly("period", &NcfExpansion::period)
      .def("liminf_term", &NcfExpansion::liminf_term)
      .def("value", [](const NcfExpansion& e) { return value_of(e); })
      .def("__str__", &NcfExpansion::to_string)
      .def("__repr__", [](const NcfExpansion& e) { return "NcfExpansion('" + e.to_string() + "')"; })
      .def(py::self == py::self);

  py::class_<DigitSeq>(m, "DigitSeq")
      .def_property_readonly("base", &DigitSeq::base)
      .def_property_readonly("b_pre", &DigitSeq::pre_digits)
      .def_property_readonly("b_period", &DigitSeq::period_digits)
      .def_property_readonly("t_pre", &DigitSeq::t_pre)
      .def_property_readonly("t_period", &DigitSeq::t_period)
      .def_property_readonly("truncated", &DigitSeq::truncated)
      .def("gamma", [](const DigitSeq& d) { return gamma_from_digits(d); })
      .def("is_admissible", [](const DigitSeq& d) { return is_admissible(d); })
      .def("__str__", &DigitSeq::to_string)
      .def(py::self == py::self);

  py::class_<MResult>(m, "MResult")
      .def_property_readonly("kind", [](const MResult& r) { return std::string(to_string(r.kind)); })
      .def_property_readonly("value", [](const MResult& r) -> py::object {
        if (r.kind == MKind::Estimate) return py::none();
        return py::cast(r.value);
      })
      .def_readonly("estimate", &MResult::estimate)
      .def_property_readonly("witness", [](const MResult& r) -> py::object {
        if (!r.witness) return py::none();
        return py::make_tuple(r.witness->residue, r.witness->j);
      })
      .def_readonly("band_profile", &MResult::band_profile)
      .def_readonly("params", &MResult::params)
      .def_readonly("flags", &MResult::flags);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("r", &BoundReport::r)
      .def_readonly("r_star", &BoundReport::r_star)
      .def_readonly("r_star_star", &BoundReport::r_star_star)
      .def_readonly("beta", &BoundReport::beta)
      .def_readonly("delta", &BoundReport::delta)
      .def_readonly("c", &BoundReport::c)
      .def_readonly("c1", &BoundReport::c1)
      .def_readonly("upper", &BoundReport::upper)
      .def_readonly("e", &BoundReport::e)
      .def_readonly("e_index", &BoundReport::e_index)
      .def_readonly("cstar_inverse", &BoundReport::cstar_inverse);

  m.def("parse_number", [](const std::string& s) { return parse_number(s); });
  m.def("parse_ncf", [](const std::string& s) { return parse_ncf(s); });
  m.def("expand", [](const py::object& x, std::size_t max_terms) { return expand(as_quad(x), max_terms); },
        py::arg("x"), py::arg("max_terms") = kDefaultMaxTerms);
  m.def("value_of", [](const py::object& e) { return value_of(as_ncf(e)); });
  m.def("alpha_expand", [](const py::object& gamma, const py::object& base) {
    return alpha_expand(as_quad(gamma), as_ncf(base));
  });
  m.def("digits_from_t", [](const py::object& base, const std::vector<long>& pre, const std::vector<long>& period) {
    return DigitSeq::from_t(as_ncf(base), pre, period);
  });
  m.def("gamma_star", [](const py::object& base) { return gamma_star(as_ncf(base)); });
  m.def("is_lattice_equivalent", [](const py::object& gamma, const py::object& alpha) -> py::object {
    const auto w = is_lattice_equivalent(as_quad(gamma), as_quad(alpha));
    if (!w.equivalent) return py::none();
    return py::make_tuple(to_py(w.m), to_py(w.l));
  });
  m.def("m_exact", [](const py::object& base, const py::object& gamma) {
    const NcfExpansion e = as_ncf(base);
    return m_exact(e, alpha_expand(as_quad(gamma), e));
  });
  m.def("m_exact_general", [](const py::object& base, const py::object& gamma) {
    const NcfExpansion e = as_ncf(base);
    return m_exact_general(e, alpha_expand(as_quad(gamma), e));
  });
  m.def("m_estimate", [](const py::object& alpha, const py::object& gamma, int bands) {
    return m_estimate(as_quad(alpha), as_quad(gamma), bands);
  }, py::arg("alpha"), py::arg("gamma"), py::arg("bands") = 20);
  m.def("rho_lower_via_gamma_star", [](const py::object& base) { return rho_lower_via_gamma_star(as_ncf(base)); });
  m.def("rho_search", [](const py::object& base, int period_multiple, long t_cap, bool include_t_equals_a,
                         std::uint64_t node_budget) {
    RhoSearchOptions o;
    o.period_multiple = period_multiple;
    o.t_cap = t_cap;
    o.include_t_equals_a = include_t_equals_a;
    o.node_budget = node_budget;
    const NcfExpansion e = as_ncf(base);
    RhoSearchResult r;
    {
      py::gil_scoped_release release;
      r = rho_search(e, o);
    }
    return py::make_tuple(r.m, r.digits, r.nodes);
  }, py::arg("base"), py::arg("period_multiple") = 1, py::arg("t_cap") = -1, py::arg("include_t_equals_a") = true,
     py::arg("node_budget") = 20'000'000);
  m.def("bound_report", &bound_report);
  m.def("family", [](const std::string& kind, long r, long l) { return family(parse_family_kind(kind), r, l); },
        py::arg("kind"), py::arg("r"), py::arg("l") = 1);
  m.def("period2_rho", &period2_rho);
}
