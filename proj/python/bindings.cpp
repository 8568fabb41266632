#include <cstring>
#include <stdexcept>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nckit/config.hpp>
#include <nckit/expr.hpp>
#include <nckit/grid.hpp>
#include <nckit/report.hpp>
#include <nckit/suites.hpp>

namespace py = pybind11;
using namespace nckit;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ThetaProfile theta_of(const std::string& t12, const std::string& t13, const std::string& t23) {
    return ThetaConfig{t12, t13, t23}.profile();
}

GridField field_of(const ComplexArray& values, double box_length, double theta) {
    if (values.ndim() != 2 || values.shape(0) != values.shape(1)) throw std::invalid_argument("expected a square 2-d array");
    GridField f = GridField::zeros(static_cast<int>(values.shape(0)), box_length, theta);
    std::memcpy(f.values.data(), values.data(), f.values.size() * sizeof(Complex));
    f.validate();
    return f;
}

ComplexArray array_of(const GridField& f) {
    ComplexArray out({f.n, f.n});
    std::memcpy(out.mutable_data(), f.values.data(), f.values.size() * sizeof(Complex));
    return out;
}

Poly plane_poly(const std::string& src) {
    const DifferentialForm form = evaluate(*parse(src), StarContext());
    if (!form.is_function()) throw GradingError("expected a function, got a form");
    return form.component(Wedge());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact star-product algebra, forms and gauge checks on time-dependent Moyal space";
    m.attr("REPORT_SCHEMA") = kReportSchema;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GradingError>(m, "GradingError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "reduce",
        [](const std::string& expr, const std::string& t12, const std::string& t13, const std::string& t23,
           std::optional<int> order) { return reduce(expr, StarContext(theta_of(t12, t13, t23), order)); },
        py::arg("expr"), py::arg("t12") = "0", py::arg("t13") = "0", py::arg("t23") = "0", py::arg("order") = py::none());

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite_json",
        [](const std::string& name, std::uint64_t seed, int cases, int order) {
            SuiteOptions opts;
            opts.seed = seed;
            opts.cases = cases;
            opts.order = order;
            py::gil_scoped_release release;
            return report_json(run_suite(name, opts));
        },
        py::arg("name"), py::arg("seed") = 42, py::arg("cases") = -1, py::arg("order") = 2);

    m.def(
        "planewave_report_json",
        [](const std::string& config_text) {
            const ConfigFile cfg = ConfigFile::parse_string(config_text);
            const ThetaProfile th = cfg.has_section("theta") ? ThetaConfig::from(cfg).profile() : ThetaProfile::zero();
            return report_json(planewave_report(planewave_spec_from(cfg), th));
        },
        py::arg("config_text"));

    m.def(
        "grid_star",
        [](const ComplexArray& f, const ComplexArray& g, double box_length, double theta) {
            return array_of(grid_star(field_of(f, box_length, theta), field_of(g, box_length, theta)));
        },
        py::arg("f"), py::arg("g"), py::arg("box_length"), py::arg("theta"));

    m.def("phase_law_error", &phase_law_error, py::arg("n"), py::arg("box_length"), py::arg("theta"), py::arg("a"),
          py::arg("b"));

    m.def(
        "cross_validate",
        [](const std::string& f, const std::string& g, double theta, int n, double box_length, int order) {
            return cross_validate_symbolic(WindowedPoly{plane_poly(f)}, WindowedPoly{plane_poly(g)}, theta, n, box_length,
                                           order);
        },
        py::arg("f"), py::arg("g"), py::arg("theta"), py::arg("n") = kDefaultGridSize,
        py::arg("box_length") = kDefaultBoxLength, py::arg("order") = 16);

    m.def(
        "write_grid",
        [](const std::string& path, const ComplexArray& values, double box_length, double theta) {
            write_grid_binary(field_of(values, box_length, theta), path);
        },
        py::arg("path"), py::arg("values"), py::arg("box_length"), py::arg("theta"));

    m.def(
        "read_grid",
        [](const std::string& path) {
            const GridField f = read_grid(path);
            return py::make_tuple(array_of(f), f.box_length, f.theta);
        },
        py::arg("path"));

    m.def(
        "grid_check_json", [](const std::string& path) { return report_json(grid_check(read_grid(path))); },
        py::arg("path"));

    m.attr("DEFAULT_GRID_SIZE") = kDefaultGridSize;
    m.attr("DEFAULT_BOX_LENGTH") = kDefaultBoxLength;
}
