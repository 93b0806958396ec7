// Python module unimodal_lab._core. Big integers cross as Python ints and
// rationals as fractions.Fraction; everything else is plain floats, dicts
// and tuples.

#include "unimodal_lab/certmax.hpp"
#include "unimodal_lab/eclass.hpp"
#include "unimodal_lab/exactpoly.hpp"
#include "unimodal_lab/theorem1.hpp"
#include "unimodal_lab/theorem21.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace unimodal_lab;

namespace {

py::object to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py(const BigRational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(v.get_num()), to_py(v.get_den()));
}

template <typename T>
py::object to_py(const std::optional<T>& v) {
  return v ? to_py(*v) : py::none();
}

py::list to_py(const exactpoly::CoeffSeq& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(to_py(c));
  return out;
}

exactpoly::CoeffSeq from_py(const py::sequence& seq) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(seq.size());
  for (const auto& item : seq) {
    if (!py::isinstance<py::int_>(item)) throw py::type_error("coefficients must be integers");
    coeffs.emplace_back(py::str(item).cast<std::string>());
  }
  return exactpoly::CoeffSeq(std::move(coeffs));
}

py::tuple interval(const certmax::Interval& i) { return py::make_tuple(i.lo, i.hi); }

py::dict unimodal_dict(const exactpoly::CoeffSeq& s) {
  const auto r = exactpoly::classify(s);
  py::dict d;
  d["unimodal"] = r.unimodal.unimodal;
  d["unimodal_witness"] = r.unimodal.witness ? py::object(py::make_tuple(r.unimodal.witness->first, r.unimodal.witness->second))
                                             : py::object(py::none());
  d["strongly_unimodal"] = r.strong.strongly_unimodal;
  d["strong_failure"] = exactpoly::to_string(r.strong.failure);
  d["strong_failure_index"] = r.strong.strongly_unimodal ? py::object(py::none()) : py::object(py::int_(r.strong.index));
  return d;
}

py::dict certificate_dict(const eclass::MembershipCertificate& c) {
  py::dict d;
  d["verdict"] = eclass::to_string(c.verdict);
  d["min_defect"] = c.min_defect;
  d["min_theta"] = c.min_theta;
  d["witness_theta"] = c.witness_theta ? py::object(py::float_(*c.witness_theta)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact unimodality checks for (1+x)^m (1+x^k) and the k^4 membership threshold";

  py::register_exception<theorem1::NotFound>(m, "NotFound", PyExc_LookupError);
  py::register_exception<certmax::BracketFailure>(m, "BracketFailure", PyExc_ArithmeticError);
  py::register_exception<certmax::PreconditionViolation>(m, "PreconditionViolation", PyExc_ArithmeticError);
  py::register_exception<eclass::ReductionViolation>(m, "ReductionViolation", PyExc_ArithmeticError);

  // exact side
  m.def("binomial", [](std::int64_t n, std::int64_t j) { return to_py(exactpoly::binomial(n, j)); }, py::arg("n"), py::arg("j"));
  m.def("expand_family", [](std::int64_t mm, std::int64_t k) {
    return to_py(exactpoly::expand_family(exactpoly::FamilyParams::make(mm, k)));
  }, py::arg("m"), py::arg("k"), "Coefficients of (1+x)^m (1+x^k).");
  m.def("classify", [](const py::sequence& c) { return unimodal_dict(from_py(c)); }, py::arg("coeffs"));
  m.def("is_unimodal", [](const py::sequence& c) { return exactpoly::is_unimodal(from_py(c)).unimodal; }, py::arg("coeffs"));
  m.def("is_strongly_unimodal", [](const py::sequence& c) {
    return exactpoly::is_strongly_unimodal(from_py(c)).strongly_unimodal;
  }, py::arg("coeffs"));
  m.def("central_ratio_odd", [](std::int64_t mm, std::int64_t k) { return to_py(theorem1::central_ratio_odd(mm, k)); },
        py::arg("m"), py::arg("k"));
  m.def("central_ratio_even", [](std::int64_t mm, std::int64_t k) { return to_py(theorem1::central_ratio_even(mm, k)); },
        py::arg("m"), py::arg("k"));
  m.def("ratio_vs_coefficients", [](std::int64_t mm, std::int64_t k) {
    const auto r = theorem1::ratio_vs_coefficients(mm, k);
    return py::make_tuple(to_py(r.closed_form), to_py(r.from_coefficients));
  }, py::arg("m"), py::arg("k"));
  m.def("a_of_u", [](std::int64_t k, std::int64_t u) { return to_py(theorem1::a_of_u(k, u)); }, py::arg("k"), py::arg("u"));
  m.def("beta_exact", [](std::int64_t k, std::int64_t u) {
    const auto r = theorem1::beta_exact(k, u);
    return py::make_tuple(to_py(r.beta), to_py(r.product));
  }, py::arg("k"), py::arg("u"), "(beta(u), B(u) A(u)); either may be None.");
  m.def("inequality_one_probe", [](std::int64_t k, std::int64_t u) {
    const auto r = theorem1::inequality_one_probe(k, u);
    return py::make_tuple(to_py(r.lhs), to_py(r.rhs), r.holds);
  }, py::arg("k"), py::arg("u"));
  m.def("case_polynomial_probe", [](std::int64_t k, std::int64_t u) {
    const auto r = theorem1::case_polynomial_probe(k, u);
    return py::make_tuple(to_py(r.scaled_b), to_py(r.scaled_c));
  }, py::arg("k"), py::arg("u"));
  m.def("threshold", [](std::int64_t k, std::int64_t cap, bool exhaustive) {
    const auto r = theorem1::threshold(k, cap, exhaustive);
    py::dict d;
    d["k"] = r.k;
    d["min_m_strong"] = r.minimal_m_strong;
    d["min_m_unimodal"] = r.minimal_m_unimodal;
    d["predicted"] = r.predicted;
    d["match"] = r.matches();
    return d;
  }, py::arg("k"), py::arg("cap") = 0, py::arg("exhaustive") = false);
  m.def("generic_min_N", [](const py::sequence& c, std::int64_t cap) { return theorem1::generic_min_N(from_py(c), cap); },
        py::arg("coeffs"), py::arg("cap") = 1000);

  // numeric side
  m.def("D_value", &certmax::D_value, py::arg("z"));
  m.def("p_value", &certmax::p_value, py::arg("z"));
  m.def("certified_alpha", [](double tol) {
    const auto r = certmax::certified_alpha(tol);
    py::dict d;
    d["crit_bracket"] = interval(r.crit_bracket);
    d["value_enclosure"] = interval(r.value_enclosure);
    d["evaluations"] = r.evaluations;
    return d;
  }, py::arg("tol") = 1e-9);
  m.def("L_value", [](std::int64_t k, double theta) { return eclass::L_value(k, theta); }, py::arg("k"), py::arg("theta"));
  m.def("M_value", &eclass::M_value, py::arg("k"), py::arg("theta"));
  m.def("N_value", [](std::int64_t k, double theta) { return eclass::N_value(k, theta); }, py::arg("k"), py::arg("theta"));
  m.def("H_family", &eclass::H_family, py::arg("m"), py::arg("k"), py::arg("theta"));
  m.def("max_L", [](std::int64_t k, std::int64_t grid, double refine_tol) {
    const auto r = eclass::max_L(eclass::ThetaScan::make(k, grid, refine_tol));
    py::dict d;
    d["k"] = r.k;
    d["max_L"] = r.max_L;
    d["argmax_theta"] = r.argmax_theta;
    d["m_of_k"] = r.m_of_k;
    d["near_integer"] = r.near_integer;
    d["below_supported_k"] = r.below_supported_k;
    return d;
  }, py::arg("k"), py::arg("grid") = 100000, py::arg("refine_tol") = 1e-10);
  m.def("membership_certificate", [](std::int64_t mm, std::int64_t k, std::int64_t grid) {
    return certificate_dict(eclass::membership_certificate(mm, k, grid));
  }, py::arg("m"), py::arg("k"), py::arg("grid") = 100000);
  m.def("theorem21_bounds", [](std::int64_t k, std::int64_t N, double tol) {
    const auto alpha = certmax::certified_alpha(tol).value_enclosure;
    const auto r = certmax::theorem21_bounds(k, N, alpha);
    py::dict d;
    d["bound_class"] = certmax::to_string(r.bound_class);
    d["member_from"] = r.member_from;
    d["nonmember_below"] = r.nonmember_below;
    d["certificate"] = r.certificate ? py::object(certificate_dict(*r.certificate)) : py::object(py::none());
    return d;
  }, py::arg("k"), py::arg("N"), py::arg("tol") = 1e-9);
}
