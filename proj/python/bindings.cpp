#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>

#include "cubecurve/counting.hpp"
#include "cubecurve/curve.hpp"
#include "cubecurve/identities.hpp"
#include "cubecurve/modmath.hpp"
#include "cubecurve/zeta.hpp"

namespace py = pybind11;
using namespace cubecurve;

namespace {

// Points cross the boundary as None (infinity) or an (x, y) tuple.
using PyPoint = std::optional<std::tuple<u64, u64>>;

PyPoint to_py(const Point& pt) {
    if (pt.is_infinity()) return std::nullopt;
    return std::make_tuple(pt.x, pt.y);
}

Point from_py(const PyPoint& pt) {
    if (!pt) return Point::at_infinity();
    return Point::affine(std::get<0>(*pt), std::get<1>(*pt));
}

std::vector<PyPoint> to_py(const PointSet& points) {
    std::vector<PyPoint> out;
    out.reserve(points.size());
    for (const Point& pt : points) out.push_back(to_py(pt));
    return out;
}

FieldElement element(i64 value, u64 p) { return FieldElement::from_signed(value, PrimeModulus(p)); }

template <typename Range>
std::vector<u64> values(const Range& elements) {
    std::vector<u64> out;
    for (const FieldElement& e : elements) out.push_back(e.value());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Point counting and identity checks for y^2 = x^3 + a^3 over F_p";

    static py::exception<CurveError> curve_error(m, "CurveError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const CurveError& e) {
            py::set_error(curve_error, e.what());
        }
    });

    m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;

    // modmath
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("is_prime_1mod6", &is_prime_1mod6, py::arg("n"));
    m.def("legendre_symbol", [](i64 x, u64 p) { return value_of(legendre_symbol(element(x, p))); },
          py::arg("x"), py::arg("p"));
    m.def("sqrt_mod", [](i64 t, u64 p) { return values(sqrt_mod(element(t, p))); },
          py::arg("t"), py::arg("p"));
    m.def("cube_roots", [](i64 t, u64 p) { return values(cube_roots(element(t, p))); },
          py::arg("t"), py::arg("p"));
    m.def("cube_roots_of_unity", [](u64 p) { return values(cube_roots_of_unity(PrimeModulus(p))); },
          py::arg("p"));
    m.def("cube_solution_count", [](i64 t, u64 p) { return cube_solution_count(element(t, p)); },
          py::arg("t"), py::arg("p"));

    // curve
    py::class_<CurveParams>(m, "Curve")
        .def(py::init(&new_curve), py::arg("p"), py::arg("a"))
        .def_property_readonly("p", &CurveParams::p)
        .def_property_readonly("a", [](const CurveParams& c) { return c.a().value(); })
        .def_property_readonly("discriminant", [](const CurveParams& c) { return c.discriminant().value(); })
        .def("is_on_curve", [](const CurveParams& c, const PyPoint& pt) { return is_on_curve(c, from_py(pt)); })
        .def("points", [](const CurveParams& c, u64 cap) { return to_py(enumerate_points(c, cap)); },
             py::arg("cap") = kDefaultEnumerationCap)
        .def("negate", [](const CurveParams& c, const PyPoint& pt) { return to_py(negate(c, from_py(pt))); })
        .def("add", [](const CurveParams& c, const PyPoint& l, const PyPoint& r) {
            return to_py(add(c, from_py(l), from_py(r)));
        })
        .def("scalar_mul", [](const CurveParams& c, u64 k, const PyPoint& pt) {
            return to_py(scalar_mul(c, k, from_py(pt)));
        })
        .def("__repr__", [](const CurveParams& c) {
            return "Curve(p=" + std::to_string(c.p()) + ", a=" + std::to_string(c.a().value()) + ")";
        });

    // counting
    m.def("count_enumeration", &count_enumeration, py::arg("curve"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("count_quadratic_sum", &count_quadratic_sum, py::arg("curve"));
    m.def("count_rho", &count_rho, py::arg("curve"));
    m.def("count_cubic_sum", &count_cubic_sum, py::arg("curve"));
    m.def("trace_and_hasse", [](const CurveParams& c, u64 n) {
        const TraceInfo t = trace_and_hasse(c, n);
        return std::make_tuple(t.delta, t.hasse_ok);
    }, py::arg("curve"), py::arg("n"));
    m.def("y_axis_points", [](const CurveParams& c) { return to_py(y_axis_points(c)); }, py::arg("curve"));

    py::class_<CountReport>(m, "CountReport")
        .def_readonly("p", &CountReport::p)
        .def_readonly("a", &CountReport::a)
        .def_readonly("n_enum", &CountReport::n_enum)
        .def_readonly("n_quad", &CountReport::n_quad)
        .def_readonly("n_rho", &CountReport::n_rho)
        .def_readonly("n_cubic", &CountReport::n_cubic)
        .def_readonly("delta", &CountReport::delta)
        .def_readonly("hasse_ok", &CountReport::hasse_ok)
        .def_property_readonly("n", &CountReport::n)
        .def_property_readonly("methods_agree", &CountReport::methods_agree);
    m.def("count_report", &count_report, py::arg("curve"), py::arg("cap") = kDefaultEnumerationCap);

    // identities
    py::class_<identities::AbscissaSums>(m, "AbscissaSums")
        .def_readonly("p", &identities::AbscissaSums::p)
        .def_readonly("a", &identities::AbscissaSums::a)
        .def_readonly("j", &identities::AbscissaSums::j)
        .def_readonly("s", &identities::AbscissaSums::s)
        .def_readonly("j_div_p", &identities::AbscissaSums::j_div_p)
        .def_readonly("s_div_p", &identities::AbscissaSums::s_div_p);
    m.def("abscissa_sums", [](i64 p, i64 a) { return identities::abscissa_sums(p, a); },
          py::arg("p"), py::arg("a"));
    m.def("counterexample_report", &identities::counterexample_report);
    m.def("cube_root_sum", &identities::cube_root_sum, py::arg("t"), py::arg("p"));
    m.def("same_ordinate_sum", [](const CurveParams& c, i64 y) {
        return identities::same_ordinate_sum(c, FieldElement::from_signed(y, c.modulus()));
    }, py::arg("curve"), py::arg("y"));
    m.def("twist_relation_check", &identities::twist_relation_check, py::arg("p"), py::arg("a"));

    py::class_<identities::FamilySweep>(m, "FamilySweep")
        .def_readonly("p", &identities::FamilySweep::p)
        .def_readonly("counts", &identities::FamilySweep::counts)
        .def_readonly("total", &identities::FamilySweep::total)
        .def_property_readonly("expected_total", &identities::FamilySweep::expected_total)
        .def_property_readonly("total_ok", &identities::FamilySweep::total_ok);
    m.def("family_sweep", [](i64 p, bool parallel, std::size_t workers) {
        identities::SweepOptions options;
        options.parallel = parallel;
        options.workers = workers;
        py::gil_scoped_release release;
        return identities::family_sweep(p, options);
    }, py::arg("p"), py::arg("parallel") = false, py::arg("workers") = 0);

    // zeta
    py::class_<ZetaData>(m, "ZetaData")
        .def_readonly("q", &ZetaData::q)
        .def_readonly("trace", &ZetaData::trace)
        .def_readonly("numerator", &ZetaData::numerator)
        .def_property_readonly("n1", &ZetaData::n1)
        .def("__str__", &zeta_rational_render);
    m.def("zeta_from_count", &zeta_from_count, py::arg("q"), py::arg("n1"));
    m.def("lift_counts", &lift_counts, py::arg("zeta"), py::arg("r_max"));
    m.def("zeta_rational_render", &zeta_rational_render, py::arg("zeta"));
}
