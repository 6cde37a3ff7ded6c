#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dbt/chartimes.hpp"
#include "dbt/superposition.hpp"
#include "dbt/wavepacket.hpp"

namespace py = pybind11;
using namespace dbt;

namespace {

py::array_t<std::complex<double>> to_array(const Eigen::VectorXcd& v) {
    py::array_t<std::complex<double>> a(static_cast<py::ssize_t>(v.size()));
    std::copy(v.data(), v.data() + v.size(), a.mutable_data());
    return a;
}

} // namespace

PYBIND11_MODULE(_dbarrier, m) {
    m.doc() = "1D scattering on a symmetric double rectangular barrier: "
              "transfer matrices, subprocess wave functions, characteristic "
              "times, and Gaussian wave packets";

    py::class_<BarrierSystem>(m, "BarrierSystem")
        .def(py::init<double, double, double, double, double, double>(),
             py::arg("v0"), py::arg("d"), py::arg("gap"), py::arg("a1"),
             py::arg("mass") = 0.5, py::arg("hbar") = 1.0)
        .def_readonly("v0", &BarrierSystem::v0)
        .def_readonly("d", &BarrierSystem::d)
        .def_readonly("gap", &BarrierSystem::gap)
        .def_readonly("a1", &BarrierSystem::a1)
        .def_readonly("mass", &BarrierSystem::mass)
        .def_readonly("hbar", &BarrierSystem::hbar)
        .def("b1", &BarrierSystem::b1)
        .def("a2", &BarrierSystem::a2)
        .def("b2", &BarrierSystem::b2)
        .def("xc", &BarrierSystem::xc)
        .def("width", &BarrierSystem::width)
        .def("kappa0", &BarrierSystem::kappa0)
        .def("__repr__", [](const BarrierSystem& s) {
            return "BarrierSystem(v0=" + std::to_string(s.v0) + ", d=" +
                   std::to_string(s.d) + ", gap=" + std::to_string(s.gap) +
                   ", a1=" + std::to_string(s.a1) + ")";
        });

    py::class_<TwoBarrierParams>(m, "TwoBarrierParams")
        .def_readonly("T_two", &TwoBarrierParams::T_two)
        .def_readonly("R_two", &TwoBarrierParams::R_two)
        .def_readonly("J_two", &TwoBarrierParams::J_two)
        .def_readonly("chi", &TwoBarrierParams::chi)
        .def_readonly("eta_two", &TwoBarrierParams::eta_two);

    py::class_<GroupTimes>(m, "GroupTimes")
        .def_readonly("tau_ph", &GroupTimes::tau_ph)
        .def_readonly("tau_as", &GroupTimes::tau_as)
        .def_readonly("t_dep", &GroupTimes::t_dep)
        .def_readonly("x_start", &GroupTimes::x_start)
        .def_readonly("near_resonance", &GroupTimes::near_resonance);

    py::class_<TrDwell>(m, "TrDwell")
        .def_readonly("tau1", &TrDwell::tau1)
        .def_readonly("tau_gap", &TrDwell::tau_gap)
        .def_readonly("tau2", &TrDwell::tau2)
        .def_readonly("total", &TrDwell::total)
        .def_readonly("left", &TrDwell::left)
        .def_readonly("right", &TrDwell::right);

    py::class_<RefDwell>(m, "RefDwell")
        .def_readonly("empty", &RefDwell::empty)
        .def_readonly("tau1", &RefDwell::tau1)
        .def_readonly("tau_gap", &RefDwell::tau_gap)
        .def_readonly("total", &RefDwell::total);

    py::class_<TotalDwell>(m, "TotalDwell")
        .def_readonly("tau1", &TotalDwell::tau1)
        .def_readonly("tau_gap", &TotalDwell::tau_gap)
        .def_readonly("tau2", &TotalDwell::tau2)
        .def_readonly("total", &TotalDwell::total);

    py::class_<CurrentAudit>(m, "CurrentAudit")
        .def_readonly("T", &CurrentAudit::T)
        .def_readonly("one_channel", &CurrentAudit::one_channel)
        .def_readonly("inc1", &CurrentAudit::inc1)
        .def_readonly("transmitted", &CurrentAudit::transmitted)
        .def_readonly("inc2", &CurrentAudit::inc2)
        .def_readonly("reflected", &CurrentAudit::reflected)
        .def_readonly("mismatch_tr", &CurrentAudit::mismatch_tr)
        .def_readonly("mismatch_ref", &CurrentAudit::mismatch_ref);

    m.def("scattering_params",
          [](const BarrierSystem& sys, double k) {
              return compose_two_barrier(sys, WaveNumberPoint(sys, k));
          },
          py::arg("system"), py::arg("k"),
          "two-barrier transmission/reflection coefficients and phases");

    m.def("group_times",
          [](const BarrierSystem& sys, double k) {
              return phase_and_group_times(sys, WaveNumberPoint(sys, k));
          },
          py::arg("system"), py::arg("k"),
          "Wigner phase time, asymptotic group time, departure time");

    m.def("dwell_times",
          [](const BarrierSystem& sys, double k) {
              return dwell_times(sys, WaveNumberPoint(sys, k));
          },
          py::arg("system"), py::arg("k"),
          "per-region dwell times of the transmission and reflection subprocesses");

    m.def("buttiker_dwell",
          [](const BarrierSystem& sys, double k) {
              return buttiker_dwell(sys, WaveNumberPoint(sys, k));
          },
          py::arg("system"), py::arg("k"), "dwell time of the total state");

    m.def("tau_free", &tau_free, py::arg("system"), py::arg("k"));
    m.def("tau0", &tau0, py::arg("system"));

    m.def("find_resonances", &find_resonances, py::arg("system"), py::arg("k_lo"),
          py::arg("k_hi"), "wave numbers with T_two = 1 inside (k_lo, k_hi)");

    m.def("total_wave",
          [](const BarrierSystem& sys, double k, py::array_t<double> xs) {
              const WaveNumberPoint kpt(sys, k);
              const StationaryField f = total_field(sys, kpt);
              auto r = xs.unchecked<1>();
              py::array_t<std::complex<double>> out(xs.size());
              auto w = out.mutable_unchecked<1>();
              for (py::ssize_t i = 0; i < r.shape(0); ++i)
                  w(i) = eval_total(f, sys, kpt, r(i));
              return out;
          },
          py::arg("system"), py::arg("k"), py::arg("x"),
          "stationary total wave function sampled on x (unit incident amplitude)");

    m.def("subprocess_waves",
          [](const BarrierSystem& sys, double k, py::array_t<double> xs) {
              const WaveNumberPoint kpt(sys, k);
              const StationaryField f = total_field(sys, kpt);
              const SwfField w = ref_field(sys, kpt, f);
              auto r = xs.unchecked<1>();
              py::array_t<std::complex<double>> tr(xs.size()), ref(xs.size());
              auto wt = tr.mutable_unchecked<1>();
              auto wr = ref.mutable_unchecked<1>();
              for (py::ssize_t i = 0; i < r.shape(0); ++i) {
                  wt(i) = eval_swf(Part::tr, sys, kpt, w, f, r(i));
                  wr(i) = eval_swf(Part::ref, sys, kpt, w, f, r(i));
              }
              return py::make_tuple(tr, ref);
          },
          py::arg("system"), py::arg("k"), py::arg("x"),
          "(psi_tr, psi_ref) sampled on x; psi_tr + psi_ref = Psi_tot");

    m.def("superposition_audit",
          [](const BarrierSystem& sys, double k) {
              const WaveNumberPoint kpt(sys, k);
              const OneBarrierParams par = one_barrier_params(sys, kpt);
              const TransferMatrix y1 = transfer_matrix(par, sys.a1, sys.b1(), k);
              const TransferMatrix y2 = transfer_matrix(par, sys.a2(), sys.b2(), k);
              return current_audit(naive_split(y1.q * y2.q + y1.p * std::conj(y2.p),
                                               y1.q * y2.p + y1.p * std::conj(y2.q), k));
          },
          py::arg("system"), py::arg("k"),
          "channel-current audit of the naive two-solution superposition");

    m.def("packet_summary",
          [](const BarrierSystem& sys, double l0, double kbar, double t_hi,
             std::size_t nt, std::size_t nx, std::size_t nk) {
              const GaussianSpectrum spec = build_spectrum(l0, kbar, nk);
              const double v = sys.hbar * kbar / sys.mass;
              const PacketSimulator sim(sys, spec, -8.0 * l0,
                                        sys.b2() + v * t_hi + 8.0 * l0, nx);
              const CmTrajectory traj = sim.cm_track(0.0, t_hi, nt);
              const LocalTimes lt = local_group_times(sim, traj);
              const AsymptoticTimes at = asymptotic_group_times(sim);
              py::dict d;
              d["T_as"] = sim.T_as();
              d["R_as"] = sim.R_as();
              d["tau_loc_tr"] = lt.tau_loc_tr;
              d["tau_as_tr"] = at.tau_as_tr;
              d["t_dep"] = at.t_dep;
              d["tau_free"] = at.tau_free;
              d["entered"] = lt.entered;
              d["exited"] = lt.exited;
              d["t"] = traj.t;
              d["xbar_tot"] = traj.xbar_tot;
              d["xbar_tr"] = traj.xbar_tr;
              d["xbar_ref"] = traj.xbar_ref;
              return d;
          },
          py::arg("system"), py::arg("l0"), py::arg("kbar"), py::arg("t_hi"),
          py::arg("nt") = 101, py::arg("nx") = 4097, py::arg("nk") = 1024,
          "Gaussian packet run: asymptotic weights, group times, CM trajectories");

    m.def("packet_state",
          [](const BarrierSystem& sys, double l0, double kbar, double t, double x_lo,
             double x_hi, std::size_t nx, std::size_t nk) {
              const GaussianSpectrum spec = build_spectrum(l0, kbar, nk);
              const PacketSimulator sim(sys, spec, x_lo, x_hi, nx);
              const PacketState s = sim.state(t);
              py::dict d;
              d["x"] = sim.xgrid();
              d["tot"] = to_array(s.tot);
              d["tr"] = to_array(s.tr);
              d["ref"] = to_array(s.ref);
              d["norm_tot"] = s.norm_tot;
              d["norm_tr"] = s.norm_tr;
              d["norm_ref"] = s.norm_ref;
              return d;
          },
          py::arg("system"), py::arg("l0"), py::arg("kbar"), py::arg("t"),
          py::arg("x_lo"), py::arg("x_hi"), py::arg("nx") = 4097,
          py::arg("nk") = 1024, "packet snapshot psi(x, t) for all three parts");
}
