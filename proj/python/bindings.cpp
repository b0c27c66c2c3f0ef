#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgl/analysis.hpp"
#include "pgl/epidemic.hpp"
#include "pgl/equilibrium.hpp"
#include "pgl/errors.hpp"
#include "pgl/game.hpp"
#include "pgl/params.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_pgl, m) {
    m.doc() = "Pandemic location game: final sizes, equilibria and price of anarchy";

    auto base = py::register_exception<pgl::Error>(m, "Error");
    py::register_exception<pgl::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<pgl::SolverError>(m, "SolverError", base.ptr());
    py::register_exception<pgl::SingularityError>(m, "SingularityError", base.ptr());

    py::class_<pgl::GameParams>(m, "GameParams")
        .def(py::init(&pgl::GameParams::make), py::arg("r0"), py::arg("eta"), py::arg("c"))
        .def_static("disease_free", &pgl::GameParams::disease_free, py::arg("r0"), py::arg("c"))
        .def_property_readonly("r0", &pgl::GameParams::r0)
        .def_property_readonly("eta", &pgl::GameParams::eta)
        .def_property_readonly("c", &pgl::GameParams::c)
        .def("__repr__", [](const pgl::GameParams& p) { return "GameParams" + p.describe(); });

    py::class_<pgl::FinalSizeSolution>(m, "FinalSizeSolution")
        .def_readonly("x", &pgl::FinalSizeSolution::x)
        .def_readonly("r_inf", &pgl::FinalSizeSolution::r_inf)
        .def_readonly("p", &pgl::FinalSizeSolution::p)
        .def_readonly("residual", &pgl::FinalSizeSolution::residual)
        .def_readonly("r_prime", &pgl::FinalSizeSolution::r_prime)
        .def_readonly("r_double_prime", &pgl::FinalSizeSolution::r_double_prime);

    m.def("final_size", &pgl::final_size, py::arg("x"), py::arg("params"));
    m.def("attack_probability", &pgl::attack_probability, py::arg("x"), py::arg("params"));
    m.def("final_size_derivative", &pgl::final_size_derivative, py::arg("x"), py::arg("r_inf"),
          py::arg("params"));
    m.def("final_size_second_derivative", &pgl::final_size_second_derivative, py::arg("x"),
          py::arg("r_inf"), py::arg("r_prime"), py::arg("params"));
    m.def("attack_probability_derivative", &pgl::attack_probability_derivative, py::arg("x"),
          py::arg("params"));

    py::class_<pgl::SirTrajectory>(m, "SirTrajectory")
        .def_readonly("times", &pgl::SirTrajectory::times)
        .def_readonly("s", &pgl::SirTrajectory::s)
        .def_readonly("i", &pgl::SirTrajectory::i)
        .def_readonly("r", &pgl::SirTrajectory::r)
        .def_readonly("terminal_r", &pgl::SirTrajectory::terminal_r)
        .def_readonly("extinct", &pgl::SirTrajectory::extinct)
        .def_readonly("warning", &pgl::SirTrajectory::warning);
    m.def(
        "simulate_sir",
        [](double x, const pgl::GameParams& params, double horizon, double step, int record_every) {
            pgl::SirOptions opts;
            opts.horizon = horizon;
            opts.step = step;
            opts.record_every = record_every;
            return pgl::simulate_sir(x, params, opts);
        },
        py::arg("x"), py::arg("params"), py::arg("horizon") = 1e5, py::arg("step") = 0.01,
        py::arg("record_every") = 1);

    py::class_<pgl::Allocation>(m, "Allocation")
        .def_static("uniform", &pgl::Allocation::uniform, py::arg("n"))
        .def_static("from_densities", &pgl::Allocation::from_densities, py::arg("densities"))
        .def_property_readonly("densities",
                               [](const pgl::Allocation& a) {
                                   return std::vector<double>(a.densities().begin(), a.densities().end());
                               })
        .def_property_readonly("support_size", &pgl::Allocation::support_size);

    py::class_<pgl::LocationCost>(m, "LocationCost")
        .def_readonly("isolation", &pgl::LocationCost::isolation)
        .def_readonly("infection", &pgl::LocationCost::infection)
        .def_readonly("total", &pgl::LocationCost::total);

    m.def("isolation_cost", &pgl::isolation_cost, py::arg("x"), py::arg("params"));
    m.def("selfish_cost", &pgl::selfish_cost, py::arg("x"), py::arg("params"));
    m.def("selfish_cost_derivative", &pgl::selfish_cost_derivative, py::arg("x"), py::arg("params"));
    m.def("altruistic_cost", &pgl::altruistic_cost, py::arg("x"), py::arg("used"), py::arg("params"));
    m.def("social_cost", &pgl::social_cost, py::arg("alloc"), py::arg("params"));

    py::enum_<pgl::Population>(m, "Population")
        .value("selfish", pgl::Population::selfish)
        .value("altruistic", pgl::Population::altruistic);

    py::class_<pgl::EssReport>(m, "EssReport")
        .def_readonly("is_nash", &pgl::EssReport::is_nash)
        .def_readonly("is_stable", &pgl::EssReport::is_stable)
        .def_property_readonly("verdict", &pgl::EssReport::verdict)
        .def_property_readonly("violations", [](const pgl::EssReport& r) {
            py::list out;
            for (const auto& v : r.violations) {
                out.append(py::make_tuple(std::string(pgl::to_string(v.kind)), v.location, v.value,
                                          v.reference));
            }
            return out;
        });

    py::class_<pgl::EssRecord>(m, "EssRecord")
        .def_readonly("population", &pgl::EssRecord::population)
        .def_readonly("support_size", &pgl::EssRecord::support_size)
        .def_readonly("density", &pgl::EssRecord::density)
        .def_readonly("location_cost", &pgl::EssRecord::location_cost)
        .def_readonly("social", &pgl::EssRecord::social)
        .def_readonly("stability_margin", &pgl::EssRecord::stability_margin);

    m.def(
        "check_ess",
        [](const pgl::Allocation& a, pgl::Population t, const pgl::GameParams& p) {
            return pgl::check_ess(a, t, p);
        },
        py::arg("alloc"), py::arg("population"), py::arg("params"));
    m.def(
        "enumerate_uniform_ess",
        [](const pgl::GameParams& p, pgl::Population t, std::size_t n_max) {
            return pgl::enumerate_uniform_ess(p, t, n_max);
        },
        py::arg("params"), py::arg("population"), py::arg("n_max") = pgl::kDefaultNMax);
    m.def(
        "max_selfish_support",
        [](const pgl::GameParams& p) {
            const auto b = pgl::max_selfish_support(p);
            return py::make_tuple(b.max_support, b.x_bar);
        },
        py::arg("params"), "Returns (M_G, x_bar or None).");
    m.def("altruistic_stability_interval", &pgl::altruistic_stability_interval, py::arg("params"));

    py::class_<pgl::OptimumBounds>(m, "OptimumBounds")
        .def_readonly("opt_lower", &pgl::OptimumBounds::opt_lower)
        .def_readonly("opt_upper", &pgl::OptimumBounds::opt_upper)
        .def_readonly("argmin_n", &pgl::OptimumBounds::argmin_n);
    m.def("optimal_social_cost", &pgl::optimal_social_cost, py::arg("params"),
          py::arg("n_max") = pgl::kDefaultNMax);

    py::class_<pgl::PoaReport>(m, "PoaReport")
        .def_readonly("worst_ess_cost", &pgl::PoaReport::worst_ess_cost)
        .def_readonly("worst_ess_n", &pgl::PoaReport::worst_ess_n)
        .def_readonly("opt_lower", &pgl::PoaReport::opt_lower)
        .def_readonly("opt_upper", &pgl::PoaReport::opt_upper)
        .def_readonly("poa_lower", &pgl::PoaReport::poa_lower)
        .def_readonly("poa_upper_estimate", &pgl::PoaReport::poa_upper_estimate)
        .def_readonly("theorem_bound", &pgl::PoaReport::theorem_bound)
        .def_readonly("bound_satisfied", &pgl::PoaReport::bound_satisfied)
        .def_readonly("ess_cost_bound", &pgl::PoaReport::ess_cost_bound)
        .def_readonly("ess_cost_bound_satisfied", &pgl::PoaReport::ess_cost_bound_satisfied);
    m.def("selfish_poa", &pgl::selfish_poa, py::arg("params"), py::arg("n_max") = pgl::kDefaultNMax);

    py::class_<pgl::AltruisticRatio>(m, "AltruisticRatio")
        .def_readonly("k", &pgl::AltruisticRatio::k)
        .def_readonly("is_ess", &pgl::AltruisticRatio::is_ess)
        .def_readonly("social", &pgl::AltruisticRatio::social)
        .def_readonly("opt_upper", &pgl::AltruisticRatio::opt_upper)
        .def_readonly("ratio", &pgl::AltruisticRatio::ratio)
        .def_readonly("floor", &pgl::AltruisticRatio::floor)
        .def_readonly("error", &pgl::AltruisticRatio::error);
    m.def("altruistic_poa_growth", &pgl::altruistic_poa_growth, py::arg("params"),
          py::arg("support_sizes"), py::arg("n_max") = pgl::kDefaultNMax);
}
