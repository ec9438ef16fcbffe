#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfplasma/diffusion.hpp"
#include "tfplasma/ecflux.hpp"
#include "tfplasma/integrator.hpp"
#include "tfplasma/lab.hpp"
#include "tfplasma/source_imex.hpp"

namespace py = pybind11;
using namespace tfp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entropy-stable two-fluid plasma solver";

    py::enum_<Axis>(m, "Axis").value("X", Axis::X).value("Y", Axis::Y);
    py::enum_<Species>(m, "Species")
        .value("ION", Species::Ion)
        .value("ELECTRON", Species::Electron);

    py::class_<PhysParams>(m, "PhysParams")
        .def(py::init<>())
        .def_readwrite("gamma", &PhysParams::gamma)
        .def_readwrite("lambda_m", &PhysParams::lambda_m)
        .def_readwrite("r_hat_g", &PhysParams::r_hat_g)
        .def_readwrite("lambda_hat_d", &PhysParams::lambda_hat_d)
        .def_readwrite("c_hat", &PhysParams::c_hat)
        .def_readwrite("xi", &PhysParams::xi)
        .def_readwrite("kappa", &PhysParams::kappa)
        .def("r_i", &PhysParams::r_i)
        .def("r_e", &PhysParams::r_e)
        .def("r_eg", &PhysParams::r_eg)
        .def("debye_k", &PhysParams::debye_k)
        .def("validate", &PhysParams::validate);

    py::class_<PrimState>(m, "PrimState")
        .def(py::init<>())
        .def_readwrite("rho_i", &PrimState::rho_i)
        .def_readwrite("v_i", &PrimState::v_i)
        .def_readwrite("p_i", &PrimState::p_i)
        .def_readwrite("rho_e", &PrimState::rho_e)
        .def_readwrite("v_e", &PrimState::v_e)
        .def_readwrite("p_e", &PrimState::p_e)
        .def_readwrite("B", &PrimState::B)
        .def_readwrite("E", &PrimState::E)
        .def_readwrite("phi", &PrimState::phi)
        .def_readwrite("psi", &PrimState::psi);

    py::class_<EntropyTriple>(m, "EntropyTriple")
        .def_readonly("ion", &EntropyTriple::ion)
        .def_readonly("electron", &EntropyTriple::electron)
        .def_readonly("em", &EntropyTriple::em);

    py::class_<WaveSpeeds>(m, "WaveSpeeds")
        .def_readonly("ion", &WaveSpeeds::ion)
        .def_readonly("electron", &WaveSpeeds::electron)
        .def_readonly("maxwell", &WaveSpeeds::maxwell)
        .def("max", &WaveSpeeds::max);

    m.def("prim_to_cons", &prim_to_cons, py::arg("prim"), py::arg("params"));
    m.def("cons_to_prim", &cons_to_prim, py::arg("cons"), py::arg("params"));
    m.def("physical_flux", &physical_flux, py::arg("cons"), py::arg("dir"), py::arg("params"));
    m.def("maxwell_flux", &maxwell_flux, py::arg("cons"), py::arg("dir"), py::arg("params"));
    m.def("source", &source, py::arg("cons"), py::arg("params"));
    m.def("entropy", &entropy, py::arg("cons"), py::arg("params"));
    m.def("entropy_vars", &entropy_vars, py::arg("cons"), py::arg("params"));
    m.def("entropy_potential", &entropy_potential, py::arg("cons"), py::arg("dir"),
          py::arg("params"));
    m.def("wave_speeds", &wave_speeds, py::arg("cons"), py::arg("dir"), py::arg("params"));

    m.def("log_mean", &log_mean, py::arg("a"), py::arg("b"));
    m.def("ec_flux_fluid", &ec_flux_fluid, py::arg("left"), py::arg("right"), py::arg("dir"),
          py::arg("species"), py::arg("params"));
    m.def("ec_flux_maxwell", &ec_flux_maxwell, py::arg("left"), py::arg("right"),
          py::arg("dir"), py::arg("params"));
    m.def(
        "ec_flux",
        [](const ConsState& l, const ConsState& r, Axis dir, const PhysParams& p) {
            return ec_flux(l, r, dir, p);
        },
        py::arg("left"), py::arg("right"), py::arg("dir"), py::arg("params"));

    m.def("minmod_phi", &minmod_phi, py::arg("theta"));
    m.def(
        "reconstruct_jump",
        [](double w_mm, double w_m, double w_p, double w_pp) {
            return reconstruct_jump(w_mm, w_m, w_p, w_pp, LimiterKind::MinMod);
        },
        py::arg("w_mm"), py::arg("w_m"), py::arg("w_p"), py::arg("w_pp"));
    m.def(
        "es_interface_flux",
        [](const std::array<ConsState, 4>& stencil, Axis dir, int order,
           const PhysParams& p) { return es_interface_flux(stencil, dir, order, p); },
        py::arg("stencil"), py::arg("dir"), py::arg("order"), py::arg("params"));

    m.def(
        "assemble_A",
        [](const std::array<double, 6>& w1, const PhysParams& p) {
            const CouplingMatrix a = assemble_A(w1, p);
            std::vector<std::vector<double>> out(9, std::vector<double>(9));
            for (int r = 0; r < 9; ++r) {
                for (int c = 0; c < 9; ++c) {
                    out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                }
            }
            return out;
        },
        py::arg("w1"), py::arg("params"));
    m.def(
        "implicit_momentum_solve",
        [](const std::array<double, 9>& g2, const std::array<double, 6>& w1, double dt,
           const PhysParams& p) { return implicit_momentum_solve(g2, assemble_A(w1, p), dt); },
        py::arg("g2"), py::arg("w1"), py::arg("dt"), py::arg("params"));
    m.def("imex_substep", &imex_substep, py::arg("cons"), py::arg("rhs"), py::arg("dt"),
          py::arg("params"));

    m.def(
        "run_config",
        [](const std::string& path, const std::map<std::string, std::string>& overrides) {
            ConfigPairs pairs = read_config_pairs(path);
            for (const auto& [k, v] : overrides) pairs.emplace_back(k, v);
            const RunReport report = run(make_config(pairs));
            py::dict out;
            out["steps_taken"] = report.steps_taken;
            out["wall_seconds"] = report.wall_seconds;
            if (report.final_l1_error) out["final_l1_error"] = *report.final_l1_error;
            return out;
        },
        py::arg("path"), py::arg("overrides") = std::map<std::string, std::string>{},
        "Run a configured scenario; returns a summary dict.");

#ifdef TFPLASMA_VERSION
#define TFPLASMA_STR_(x) #x
#define TFPLASMA_STR(x) TFPLASMA_STR_(x)
    m.attr("__version__") = TFPLASMA_STR(TFPLASMA_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
