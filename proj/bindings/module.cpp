#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "haarbvp/newton.hpp"
#include "haarbvp/qlm.hpp"
#include "haarbvp/refdata.hpp"

namespace py = pybind11;
using namespace haarbvp;

namespace {

py::array_t<double> to_array(const DenseMatrix& m) {
    py::array_t<double> out({m.n, m.n});
    auto buf = out.mutable_unchecked<2>();
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) buf(r, c) = m(r, c);
    return out;
}

std::vector<double> points_or_default(const std::optional<std::vector<double>>& pts) {
    return pts ? *pts : report_grid();
}

}  // namespace

PYBIND11_MODULE(haarbvp, m) {
    m.doc() = "Haar wavelet collocation solver for singular Emden-Fowler problems";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    py::enum_<BoundaryKind>(m, "BoundaryKind")
        .value("Dirichlet", BoundaryKind::Dirichlet)
        .value("Robin", BoundaryKind::Robin);

    py::enum_<PowerGuard>(m, "PowerGuard")
        .value("Error", PowerGuard::Error)
        .value("Signed", PowerGuard::Signed);

    py::enum_<MethodTag>(m, "MethodTag")
        .value("QLM", MethodTag::QLM)
        .value("NEWTON", MethodTag::NEWTON);

    py::class_<ResolutionConfig>(m, "ResolutionConfig")
        .def(py::init<int>(), py::arg("J"))
        .def_readonly("J", &ResolutionConfig::J)
        .def_readonly("M", &ResolutionConfig::M)
        .def_readonly("n", &ResolutionConfig::n)
        .def_readonly("dx", &ResolutionConfig::dx);

    py::class_<EmdenFowlerProblem>(m, "EmdenFowlerProblem")
        .def(py::init([](double sigma, double gamma, double beta, BoundaryKind bc) {
                 return EmdenFowlerProblem{sigma, gamma, beta, bc};
             }),
             py::arg("sigma"), py::arg("gamma"), py::arg("beta"),
             py::arg("bc") = BoundaryKind::Dirichlet)
        .def_readwrite("sigma", &EmdenFowlerProblem::sigma)
        .def_readwrite("gamma", &EmdenFowlerProblem::gamma)
        .def_readwrite("beta", &EmdenFowlerProblem::beta)
        .def_readwrite("bc", &EmdenFowlerProblem::bc);

    py::class_<PointValues>(m, "PointValues")
        .def_readonly("y", &PointValues::y)
        .def_readonly("yp", &PointValues::yp)
        .def_readonly("ypp", &PointValues::ypp);

    py::class_<SolutionGrid>(m, "SolutionGrid")
        .def_readonly("eval_points", &SolutionGrid::eval_points)
        .def_readonly("y", &SolutionGrid::y)
        .def_readonly("coefficients", &SolutionGrid::coefficients)
        .def_readonly("dy0", &SolutionGrid::dy0)
        .def_readonly("iterations", &SolutionGrid::iterations)
        .def_readonly("method_tag", &SolutionGrid::method_tag)
        .def_readonly("residual_sup", &SolutionGrid::residual_sup);

    py::class_<HaarSystem>(m, "HaarSystem")
        .def_readonly("colloc", &HaarSystem::colloc)
        .def_readonly("p1_at_1", &HaarSystem::p1_at_1)
        .def_readonly("p2_at_1", &HaarSystem::p2_at_1)
        .def_property_readonly("H", [](const HaarSystem& s) { return to_array(s.H); })
        .def_property_readonly("P1", [](const HaarSystem& s) { return to_array(s.P1); })
        .def_property_readonly("P2", [](const HaarSystem& s) { return to_array(s.P2); });

    m.def("build_system", [](int J) { return build_system(ResolutionConfig(J)); }, py::arg("J"));
    m.def("haar_fn", [](int i, double x) { return haar_fn(i, x); }, py::arg("i"), py::arg("x"));
    m.def("haar_integral", [](int v, int i, double x) { return haar_integral(v, i, x); },
          py::arg("v"), py::arg("i"), py::arg("x"));
    m.def("collocation_points",
          [](int J) { return collocation_points(ResolutionConfig(J)); }, py::arg("J"));
    m.def("report_grid", &report_grid);

    m.def(
        "solve_qlm",
        [](const EmdenFowlerProblem& problem, int J, int max_iter, double tol,
           const std::optional<std::vector<double>>& init_guess,
           const std::optional<std::vector<double>>& eval_points) {
            QlmSettings s;
            s.max_iter = max_iter;
            s.tol = tol;
            if (init_guess) s.init_guess = *init_guess;
            return solve_qlm(problem, ResolutionConfig(J), s, points_or_default(eval_points));
        },
        py::arg("problem"), py::arg("J"), py::arg("max_iter") = 50, py::arg("tol") = 1e-10,
        py::arg("init_guess") = py::none(), py::arg("eval_points") = py::none());

    m.def(
        "solve_newton",
        [](const EmdenFowlerProblem& problem, int J, int max_iter, double tol,
           const std::optional<std::vector<double>>& init_coeffs, int damping,
           const std::optional<std::vector<double>>& eval_points) {
            NewtonSettings s;
            s.max_iter = max_iter;
            s.tol = tol;
            if (init_coeffs) s.init_coeffs = *init_coeffs;
            s.damping = damping;
            return solve_newton(problem, ResolutionConfig(J), s, points_or_default(eval_points));
        },
        py::arg("problem"), py::arg("J"), py::arg("max_iter") = 50, py::arg("tol") = 1e-10,
        py::arg("init_coeffs") = py::none(), py::arg("damping") = 30,
        py::arg("eval_points") = py::none());

    m.def(
        "evaluate_solution",
        [](const std::vector<double>& a, double dy0, BoundaryKind bc, double t) {
            return evaluate_solution(a, dy0, bc, t);
        },
        py::arg("a"), py::arg("dy0"), py::arg("bc"), py::arg("t"));

    m.def(
        "residual_norm",
        [](const SolutionGrid& sol, const EmdenFowlerProblem& problem, int J) {
            return residual_norm(sol, problem, build_system(ResolutionConfig(J)));
        },
        py::arg("sol"), py::arg("problem"), py::arg("J"));

    m.def("residual_sup_at", &residual_sup_at, py::arg("sol"), py::arg("problem"),
          py::arg("points"));

    m.def("coeffs_from_value_guess",
          [](double value, const EmdenFowlerProblem& problem, int J) {
              return coeffs_from_value_guess(value, problem, build_system(ResolutionConfig(J)));
          },
          py::arg("value"), py::arg("problem"), py::arg("J"));

    py::class_<ReferenceTable>(m, "ReferenceTable")
        .def_readonly("example_id", &ReferenceTable::example_id)
        .def_readonly("method", &ReferenceTable::method)
        .def_readonly("J", &ReferenceTable::J)
        .def_readonly("r", &ReferenceTable::r)
        .def_readonly("t", &ReferenceTable::t)
        .def_readonly("values", &ReferenceTable::values)
        .def_readonly("r_inf", &ReferenceTable::r_inf);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("diffs", &ComparisonReport::diffs)
        .def_readonly("max_diff", &ComparisonReport::max_diff)
        .def_readonly("atol", &ComparisonReport::atol)
        .def_readonly("pass_", &ComparisonReport::pass);

    py::class_<ReferenceData>(m, "ReferenceData")
        .def_static("embedded", &ReferenceData::embedded)
        .def_static("from_file", &ReferenceData::from_file, py::arg("path"))
        .def_static("load", &ReferenceData::load)
        .def_static("env_var", []() { return std::string(ReferenceData::env_var()); })
        .def("lookup", &ReferenceData::lookup, py::arg("example"), py::arg("method"),
             py::arg("J"), py::arg("t"))
        .def("table", &ReferenceData::table, py::arg("example"), py::arg("method"),
             py::arg("J"))
        .def("has_table", &ReferenceData::has_table, py::arg("example"), py::arg("method"),
             py::arg("J"));

    m.def("compare", &compare, py::arg("sol"), py::arg("ref"), py::arg("atol"));
}
