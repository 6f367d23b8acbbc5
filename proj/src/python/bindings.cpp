#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sawtooth/crlb.hpp"
#include "sawtooth/density.hpp"
#include "sawtooth/estimators.hpp"
#include "sawtooth/event_sim.hpp"
#include "sawtooth/experiments.hpp"
#include "sawtooth/identifiability.hpp"
#include "sawtooth/mod1.hpp"
#include "sawtooth/model.hpp"
#include "sawtooth/trace.hpp"
#include "sawtooth/wrapped_normal.hpp"

namespace py = pybind11;
using namespace sawtooth;

PYBIND11_MODULE(_core, m) {
  m.doc() = "sawtooth RTT clock synchronization and ranging toolkit";

  m.def("mod1", &mod1, py::arg("x"));
  m.def("wrap_half", &wrap_half, py::arg("x"));

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<>())
      .def_readwrite("T_M", &PhysicalParams::T_M)
      .def_readwrite("f_d", &PhysicalParams::f_d)
      .def_readwrite("phi_M", &PhysicalParams::phi_M)
      .def_readwrite("phi_S", &PhysicalParams::phi_S)
      .def_readwrite("delta_fwd", &PhysicalParams::delta_fwd)
      .def_readwrite("delta_bwd", &PhysicalParams::delta_bwd)
      .def_readwrite("K", &PhysicalParams::K)
      .def_readwrite("K0", &PhysicalParams::K0)
      .def_readwrite("c", &PhysicalParams::c)
      .def("T_S", &PhysicalParams::T_S)
      .def("T_samp", &PhysicalParams::T_samp)
      .def("delta0", &PhysicalParams::delta0)
      .def("delta_rt", &PhysicalParams::delta_rt)
      .def("rho", &PhysicalParams::rho)
      .def("validate", &PhysicalParams::validate);

  py::class_<GenericParams>(m, "GenericParams")
      .def(py::init<>())
      .def(py::init([](double alpha, double psi, double beta, double gamma) {
             GenericParams g{alpha, psi, beta, gamma};
             g.validate();
             return g;
           }),
           py::arg("alpha"), py::arg("psi"), py::arg("beta"), py::arg("gamma"))
      .def_readwrite("alpha", &GenericParams::alpha)
      .def_readwrite("psi", &GenericParams::psi)
      .def_readwrite("beta", &GenericParams::beta)
      .def_readwrite("gamma", &GenericParams::gamma)
      .def("validate", &GenericParams::validate);

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<>())
      .def(py::init([](double sigma_w, double sigma_v) {
             NoiseParams nz{sigma_w, sigma_v};
             nz.validate();
             return nz;
           }),
           py::arg("sigma_w"), py::arg("sigma_v"))
      .def_readwrite("sigma_w", &NoiseParams::sigma_w)
      .def_readwrite("sigma_v", &NoiseParams::sigma_v)
      .def_static("from_snr", &NoiseParams::from_snr, py::arg("snr_in_db"),
                  py::arg("snr_out_db"), py::arg("psi"))
      .def("snr_in_db", &NoiseParams::snr_in_db)
      .def("snr_out_db", &NoiseParams::snr_out_db, py::arg("psi"));

  py::class_<KnownPhysical>(m, "KnownPhysical")
      .def(py::init<>())
      .def_readwrite("T_M", &KnownPhysical::T_M)
      .def_readwrite("T_samp", &KnownPhysical::T_samp)
      .def_readwrite("delta0", &KnownPhysical::delta0)
      .def_readwrite("c", &KnownPhysical::c)
      .def_readwrite("delta1", &KnownPhysical::delta1)
      .def_readwrite("phi_M", &KnownPhysical::phi_M);

  py::class_<PhysicalEstimate>(m, "PhysicalEstimate")
      .def_readonly("f_d", &PhysicalEstimate::f_d)
      .def_readonly("T_S", &PhysicalEstimate::T_S)
      .def_readonly("delta_rt", &PhysicalEstimate::delta_rt)
      .def_readonly("delta_fwd", &PhysicalEstimate::delta_fwd)
      .def_readonly("delta_bwd", &PhysicalEstimate::delta_bwd)
      .def_readonly("phi_S", &PhysicalEstimate::phi_S)
      .def_readonly("rho", &PhysicalEstimate::rho)
      .def_readonly("feasible", &PhysicalEstimate::feasible);

  m.def("physical_to_generic", &physical_to_generic, py::arg("p"));
  m.def("generic_to_physical", &generic_to_physical, py::arg("g"),
        py::arg("known"));

  m.def("rtt_deterministic", &rtt_deterministic, py::arg("p"), py::arg("n"));
  m.def("tdc_slave_deterministic", &tdc_slave_deterministic, py::arg("p"),
        py::arg("n"));

  py::class_<Trace>(m, "Trace")
      .def_readonly("y", &Trace::y)
      .def_readonly("n0", &Trace::n0)
      .def("__len__", [](const Trace& t) { return t.y.size(); });

  m.def("sample_trace", &sample_trace, py::arg("g"), py::arg("nz"),
        py::arg("n_samples"), py::arg("seed"));
  m.def("prediction_mse", &prediction_mse, py::arg("trace"), py::arg("g"));
  m.def(
      "ls_offset",
      [](const std::vector<double>& y, double psi, double beta, double gamma) {
        return ls_offset(y, psi, beta, gamma);
      },
      py::arg("y"), py::arg("psi"), py::arg("beta"), py::arg("gamma"));

  py::class_<PsiModel>(m, "PsiModel")
      .def_static("clock_sync", &PsiModel::clock_sync, py::arg("known"))
      .def_static("known_amplitude", &PsiModel::known_amplitude, py::arg("psi"))
      .def("psi", &PsiModel::psi, py::arg("beta"));

  py::class_<EstimationResult>(m, "EstimationResult")
      .def_readonly("theta_hat", &EstimationResult::theta_hat)
      .def_readonly("physical_hat", &EstimationResult::physical_hat)
      .def_readonly("objective", &EstimationResult::objective);

  py::class_<GridConfig>(m, "GridConfig")
      .def(py::init<>())
      .def_readwrite("beta_halfwidth", &GridConfig::beta_halfwidth)
      .def_readwrite("beta_points", &GridConfig::beta_points)
      .def_readwrite("gamma_halfwidth", &GridConfig::gamma_halfwidth)
      .def_readwrite("gamma_points", &GridConfig::gamma_points)
      .def_readwrite("gamma_points_global", &GridConfig::gamma_points_global);

  py::class_<GgsResult>(m, "GgsResult")
      .def_readonly("alpha_hat", &GgsResult::alpha_hat)
      .def_readonly("gamma_hat", &GgsResult::gamma_hat)
      .def_readonly("objective", &GgsResult::objective);

  m.def("pcp_estimate", &pcp_estimate, py::arg("trace"), py::arg("model"));
  m.def("lgs_estimate", &lgs_estimate, py::arg("trace"), py::arg("init"),
        py::arg("grid"), py::arg("model"));
  m.def("ggs_estimate", &ggs_estimate, py::arg("trace"), py::arg("psi_known"),
        py::arg("beta_known"), py::arg("gamma_points_global"));
  m.def("phase_error", &phase_error, py::arg("phi_hat"), py::arg("phi_true"));

  m.def("epsilon_plus", &epsilon_plus, py::arg("beta"), py::arg("gamma"),
        py::arg("n_samples"));
  m.def("epsilon_plus_limit", &epsilon_plus_limit, py::arg("M"), py::arg("Q"),
        py::arg("gamma"));
  m.def("ambiguous_pair", &ambiguous_pair, py::arg("g"), py::arg("eps"),
        py::arg("n_samples"));
  m.def("mean_at", &mean_at, py::arg("g"), py::arg("n"));

  py::class_<WrappedNormal>(m, "WrappedNormal")
      .def(py::init<double, double>(), py::arg("mu"), py::arg("sigma"))
      .def(py::init<double, double, int>(), py::arg("mu"), py::arg("sigma"),
           py::arg("k_max"))
      .def_readonly("k_max", &WrappedNormal::k_max)
      .def("pdf", &WrappedNormal::pdf, py::arg("x"))
      .def("integral", &WrappedNormal::integral, py::arg("points") = 1 << 14);

  py::class_<DensityGrid>(m, "DensityGrid")
      .def_readonly("lo", &DensityGrid::lo)
      .def_readonly("hi", &DensityGrid::hi)
      .def_readonly("values", &DensityGrid::values)
      .def("step", &DensityGrid::step)
      .def("integral", &DensityGrid::integral)
      .def("mean", &DensityGrid::mean)
      .def("mode", &DensityGrid::mode);

  m.def("p_pdf", &p_pdf, py::arg("g"), py::arg("sigma_v"), py::arg("n"),
        py::arg("grid_points") = kDensityGridPoints);
  m.def("y_pdf", &y_pdf, py::arg("g"), py::arg("nz"), py::arg("n"),
        py::arg("grid_points") = kDensityGridPoints);

  py::class_<DistanceResult>(m, "DistanceResult")
      .def_readonly("l1", &DistanceResult::l1)
      .def_readonly("tv", &DistanceResult::tv)
      .def_readonly("mean_mode", &DistanceResult::mean_mode);

  m.def(
      "distribution_distance",
      [](const GenericParams& g1, const GenericParams& g2,
         const NoiseParams& nz, const std::vector<int64_t>& n_set,
         int grid_points) {
        return distribution_distance(g1, g2, nz, n_set, grid_points);
      },
      py::arg("g1"), py::arg("g2"), py::arg("nz"), py::arg("n_set"),
      py::arg("grid_points") = kDensityGridPoints);

  py::class_<UnwrappedParams>(m, "UnwrappedParams")
      .def(py::init<>())
      .def_readwrite("alpha_t", &UnwrappedParams::alpha_t)
      .def_readwrite("beta_t", &UnwrappedParams::beta_t)
      .def_readwrite("sigma0", &UnwrappedParams::sigma0)
      .def_readwrite("sigma1", &UnwrappedParams::sigma1)
      .def_readwrite("sigma2", &UnwrappedParams::sigma2)
      .def_readwrite("N", &UnwrappedParams::N)
      .def("sigma_sq", &UnwrappedParams::sigma_sq);

  py::class_<Mat2>(m, "Mat2")
      .def_readonly("a11", &Mat2::a11)
      .def_readonly("a12", &Mat2::a12)
      .def_readonly("a22", &Mat2::a22);

  py::enum_<PhysicalTarget>(m, "PhysicalTarget")
      .value("freq_diff", PhysicalTarget::freq_diff)
      .value("round_trip_delay", PhysicalTarget::round_trip_delay)
      .value("slave_phase", PhysicalTarget::slave_phase);
  py::enum_<OffsetTarget>(m, "OffsetTarget")
      .value("alpha", OffsetTarget::alpha)
      .value("gamma", OffsetTarget::gamma);

  m.def("map_physical_to_unwrapped", &map_physical_to_unwrapped, py::arg("p"),
        py::arg("nz"));
  m.def("fisher", &fisher, py::arg("u"));
  m.def("inverse_fisher", &inverse_fisher, py::arg("u"));
  m.def("crlb_physical",
        py::overload_cast<const UnwrappedParams&, const PhysicalParams&,
                          PhysicalTarget>(&crlb_physical),
        py::arg("u"), py::arg("p"), py::arg("which"));
  m.def("crlb_offset_known_line", &crlb_offset_known_line, py::arg("psi"),
        py::arg("sigma_w"), py::arg("sigma_v"), py::arg("N"),
        py::arg("target"));

  py::class_<EventSimConfig>(m, "EventSimConfig")
      .def(py::init<>())
      .def_readwrite("params", &EventSimConfig::params)
      .def_readwrite("n_pings", &EventSimConfig::n_pings)
      .def_readwrite("tdc_resolution", &EventSimConfig::tdc_resolution)
      .def_readwrite("seed", &EventSimConfig::seed);

  py::class_<EventTrace>(m, "EventTrace")
      .def_readonly("master_rtts", &EventTrace::master_rtts)
      .def_readonly("slave_tdc", &EventTrace::slave_tdc)
      .def_readonly("ping_departures", &EventTrace::ping_departures)
      .def_readonly("ping_arrivals", &EventTrace::ping_arrivals)
      .def_readonly("pong_departures", &EventTrace::pong_departures)
      .def_readonly("pong_arrivals", &EventTrace::pong_arrivals)
      .def_readonly("dropped", &EventTrace::dropped);

  m.def("slave_next_upflank", &slave_next_upflank, py::arg("t"), py::arg("p"));
  m.def("run_protocol", &run_protocol, py::arg("cfg"));

  m.def(
      "run_experiment_json",
      [](const std::string& config_json) {
        const auto cfg = ExperimentConfig::from_json_text(config_json);
        const auto out = run_experiment(cfg);
        return rows_to_csv(out.rows);
      },
      py::arg("config_json"),
      "Run an experiment from a JSON config and return the result CSV text.");
}
