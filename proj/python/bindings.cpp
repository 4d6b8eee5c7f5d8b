#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "riccati3d/biquaternion.hpp"
#include "riccati3d/errors.hpp"
#include "riccati3d/export.hpp"
#include "riccati3d/riccati.hpp"
#include "riccati3d/solutions.hpp"
#include "riccati3d/symmetry.hpp"
#include "riccati3d/verify.hpp"

namespace py = pybind11;
using namespace riccati3d;

namespace {

Point3 to_point(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_point(const Point3& p) { return {p.x, p.y, p.z}; }

CatalogParams catalog_params(const py::dict& kw) {
    CatalogParams p;
    for (const auto& [key, value] : kw) {
        const std::string k = py::str(key);
        const double v = value.cast<double>();
        if (k == "k") {
            p.rotational.k = v;
        } else if (k == "c") {
            p.rotational.c = v;
        } else if (k == "C") {
            p.rotational.C = p.conical.C = v;
        } else if (k == "C1") {
            p.conical.C1 = v;
        } else if (k == "C2") {
            p.conical.C2 = v;
        } else if (k == "shift") {
            p.harmonic_shift = v;
        } else if (k == "margin") {
            p.margin = p.rotational.margin = p.conical.margin = v;
        } else {
            throw ConfigError("unknown solution parameter '" + k + "'");
        }
    }
    return p;
}

RunConfig run_config(const std::map<std::string, std::string>& settings) {
    RunConfig c;
    for (const auto& [k, v] : settings) c.set(k, v);
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Biquaternionic Riccati equation: verification suites, catalog solutions and symmetry groups";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ZeroDivisor>(m, "ZeroDivisor", base.ptr());
    py::register_exception<ZeroCrossing>(m, "ZeroCrossing", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());

    py::class_<Biquaternion>(m, "Biquaternion")
        .def(py::init<Complex, Complex, Complex, Complex>(), py::arg("q0") = 0.0, py::arg("q1") = 0.0,
             py::arg("q2") = 0.0, py::arg("q3") = 0.0)
        .def_static("basis", &Biquaternion::basis)
        .def("__getitem__",
             [](const Biquaternion& q, int i) {
                 if (i < 0 || i > 3) throw py::index_error();
                 return q[i];
             })
        .def("coefficients", [](const Biquaternion& q) { return std::array<Complex, 4>{q[0], q[1], q[2], q[3]}; })
        .def("conj", &Biquaternion::conj)
        .def("modulus_sq", &Biquaternion::modulus_sq)
        .def("inverse", [](const Biquaternion& q) { return q.inverse(); })
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__repr__", [](const Biquaternion& q) {
            std::ostringstream os;
            os << "Biquaternion(" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")";
            return os.str();
        });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite_json",
        [](const std::string& suite, const std::map<std::string, std::string>& settings, bool seconds) {
            const RunConfig c = run_config(settings);
            py::gil_scoped_release release;
            return run_suite(suite, c).to_json(seconds);
        },
        py::arg("suite"), py::arg("settings") = std::map<std::string, std::string>{}, py::arg("seconds") = true);

    m.def(
        "eval_json",
        [](const std::string& id, const std::string& grid, const std::vector<std::string>& fields, const py::dict& kw) {
            const CatalogSolution sol = catalog_solution(id, catalog_params(kw));
            const Grid g = Grid::parse(grid);
            require_grid_inside(g, sol.inst.Q.domain);
            return evaluate_on_grid(sol, g, fields).to_json();
        },
        py::arg("solution"), py::arg("grid"), py::arg("fields") = std::vector<std::string>{"Q", "q"},
        py::arg("params") = py::dict());

    m.def(
        "riccati_residual",
        [](const std::string& id, const std::array<double, 3>& x, const py::dict& kw) {
            const CatalogSolution sol = catalog_solution(id, catalog_params(kw));
            return riccati_residual(sol.inst, to_point(x)).max_abs();
        },
        py::arg("solution"), py::arg("x"), py::arg("params") = py::dict());

    m.def(
        "solution_Q",
        [](const std::string& id, const std::array<double, 3>& x, const py::dict& kw) {
            // Closed-form value; only the singular sets are refused, not points outside the sampling box.
            const VectorField& Q = catalog_solution(id, catalog_params(kw)).inst.Q;
            const Point3 p = to_point(x);
            if (Q.domain.is_excluded(p)) throw DomainError("point is on an excluded set: " + to_string(p));
            return Q(p).c;
        },
        py::arg("solution"), py::arg("x"), py::arg("params") = py::dict());

    m.def(
        "group_act",
        [](int k, double lambda, const std::array<double, 3>& x, const std::array<double, 3>& Q) {
            const GroupImage img = group_act({k, lambda}, to_point(x), to_point(Q));
            return std::make_pair(from_point(img.x), from_point(img.Q));
        },
        py::arg("k"), py::arg("lam"), py::arg("x"), py::arg("Q"));

    m.def(
        "vhat",
        [](const std::array<double, 10>& a, const std::array<double, 3>& x, const std::array<double, 3>& Q) {
            GeneratorParams g;
            g.a = a;
            return vhat_apply(g, to_point(x), to_point(Q));
        },
        py::arg("a"), py::arg("x"), py::arg("Q"));
}
