#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pants/coords.hpp"
#include "pants/dynamics.hpp"
#include "pants/holonomy.hpp"
#include "pants/poisson.hpp"
#include "pants/traces.hpp"
#include "pants/verify.hpp"

namespace py = pybind11;
using namespace pants;

namespace {

FGCoords coords_of(const std::array<double, 8>& x) {
    FGCoords c = make_coords(x);
    validate(c);
    return c;
}

LeafPoint point_of(const LengthVector& L, double s, double t) {
    LeafPoint p{L, s, t};
    validate(p);
    return p;
}

Evaluator evaluator_of(const std::string& s) {
    if (s == "auto") return Evaluator::automatic;
    if (s == "closed") return Evaluator::closed_form;
    if (s == "oracle") return Evaluator::oracle;
    throw DomainError("evaluator must be auto, closed or oracle");
}

py::dict sample_dict(const Sample& s) {
    py::dict d;
    d["t"] = s.t;
    d["sigma1"] = s.sigma1;
    d["tau1"] = s.tau1;
    d["f"] = s.f;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fock-Goncharov coordinates on the pair of pants";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("casimirs", [](const std::array<double, 8>& x) { return casimirs(coords_of(x)); }, py::arg("coords"));
    m.def("leaf_embed",
          [](const LengthVector& L, double s, double t) { return leaf_embed(point_of(L, s, t)).x; },
          py::arg("leaf"), py::arg("sigma1"), py::arg("tau1"));
    m.def("fuchsian_leaf", &fuchsian_leaf, py::arg("l_alpha"), py::arg("l_beta"), py::arg("l_gamma"));

    m.def("peripherals", [](const std::array<double, 8>& x) {
        const Peripherals<double> p = peripheral_holonomies(coords_of(x));
        return py::make_tuple(p.A, p.B, p.C);
    }, py::arg("coords"));
    m.def("holonomy",
          [](const std::array<double, 8>& x, const std::string& word) {
              return holonomy_word(coords_of(x), parse_word(word));
          },
          py::arg("coords"), py::arg("word"));
    m.def("eigenvalue_ratios", [](const std::array<double, 8>& x) {
        const EigenRatioReport r = eigenvalue_ratio_report(coords_of(x));
        py::list per;
        for (const RatioCheck& c : r.per) {
            py::dict d;
            d["eigenvalues"] = c.eigenvalues;
            d["predicted"] = c.predicted;
            d["rel_error"] = c.rel_error;
            d["matched"] = c.matched;
            per.append(d);
        }
        py::dict out;
        out["per"] = per;
        out["all_match"] = r.all_match;
        out["worst_rel_error"] = r.worst_rel_error;
        return out;
    }, py::arg("coords"));

    m.def("bracket", [](int i, int j, const std::array<double, 8>& x) {
        return bracket_coordinates(i, j, coords_of(x));
    }, py::arg("i"), py::arg("j"), py::arg("coords"));
    m.def("eruption_flow", [](const std::array<double, 8>& x, double t) { return eruption_flow(coords_of(x), t).x; },
          py::arg("coords"), py::arg("t"));
    m.def("hexagon_flow", [](const std::array<double, 8>& x, double t) { return hexagon_flow(coords_of(x), t).x; },
          py::arg("coords"), py::arg("t"));

    m.def("trace",
          [](const LengthVector& L, double s, double t, const std::string& curve, const std::string& ev) {
              const LeafPoint p = point_of(L, s, t);
              return trace_eval<double>(p.leaf, p.sigma1, p.tau1, parse_curve(curve), evaluator_of(ev));
          },
          py::arg("leaf"), py::arg("sigma1"), py::arg("tau1"), py::arg("curve"), py::arg("evaluator") = "auto");
    m.def("theta_constant", &theta_constant, py::arg("leaf"));

    m.def("find_minimum",
          [](const LengthVector& L, const std::string& curve, double s0, double t0) {
              validate(L);
              MinimizeOptions o;
              o.start_sigma1 = s0;
              o.start_tau1 = t0;
              const MinimumResult r = find_minimum(L, parse_curve(curve), o);
              py::dict d;
              d["sigma1"] = r.sigma1;
              d["tau1"] = r.tau1;
              d["f"] = r.f;
              d["grad_norm"] = r.grad_norm;
              d["hvf_norm"] = r.hvf_norm;
              d["iterations"] = r.iterations;
              return d;
          },
          py::arg("leaf"), py::arg("curve"), py::arg("start_sigma1") = 1.0, py::arg("start_tau1") = 1.0);

    m.def("integrate",
          [](const LengthVector& L, double s, double t, const std::string& curve, double t_max, double rtol) {
              const Trajectory tr = integrate(point_of(L, s, t), parse_curve(curve), t_max, rtol);
              py::list out;
              for (const Sample& x : tr.samples) out.append(sample_dict(x));
              return out;
          },
          py::arg("leaf"), py::arg("sigma1"), py::arg("tau1"), py::arg("curve"), py::arg("t_max"),
          py::arg("rtol") = 1e-10);

    m.def("detect_period",
          [](const LengthVector& L, double s, double t, const std::string& curve, double rtol) {
              const PeriodResult r = detect_period(point_of(L, s, t), parse_curve(curve), rtol);
              py::dict d;
              d["period"] = r.period;
              d["return_distance"] = r.return_distance;
              d["drift"] = r.drift;
              return d;
          },
          py::arg("leaf"), py::arg("sigma1"), py::arg("tau1"), py::arg("curve"), py::arg("rtol") = 1e-10);

    m.def("level_set",
          [](const LengthVector& L, const std::string& curve, double level) {
              validate(L);
              const LevelSet ls = level_set(L, parse_curve(curve), level);
              py::dict d;
              d["points"] = ls.points;
              d["period"] = ls.period;
              d["closure"] = ls.closure;
              d["max_level_error"] = ls.max_level_error;
              return d;
          },
          py::arg("leaf"), py::arg("curve"), py::arg("level"));

    m.def("suite_names", &suite_names);
    m.def("run_suite",
          [](std::uint64_t seed, long samples, unsigned threads, const std::vector<std::string>& suites) {
              SuiteOptions o;
              o.seed = seed;
              o.samples = samples;
              o.threads = threads;
              o.suites = suites;
              std::vector<SuiteReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = run_suite(o);
              }
              py::list out;
              for (const SuiteReport& r : reports) {
                  py::dict d;
                  d["suite"] = r.suite;
                  d["passed"] = r.passed;
                  d["failed"] = r.failed;
                  d["worst_error"] = r.worst_error;
                  d["seed"] = r.seed;
                  out.append(d);
              }
              return out;
          },
          py::arg("seed") = 42, py::arg("samples") = 200, py::arg("threads") = 0,
          py::arg("suites") = std::vector<std::string>{});
}
