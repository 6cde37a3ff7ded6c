#include <cmath>

#include <doctest.h>

#include "dbt/chartimes.hpp"
#include "dbt/wavepacket.hpp"

using namespace dbt;

TEST_SUITE("wavepacket") {

TEST_CASE("spectrum construction") {
    const GaussianSpectrum s = build_spectrum(6.0, 0.9);
    double nrm = 0.0, kmean = 0.0;
    for (std::size_t j = 0; j < s.k.size(); ++j) {
        const double w = (j == 0 || j == s.k.size() - 1) ? 0.5 : 1.0;
        nrm += w * s.amp[j] * s.amp[j] * s.dk;
        kmean += w * s.k[j] * s.amp[j] * s.amp[j] * s.dk;
    }
    CHECK(std::abs(nrm - 1.0) < 1e-12);
    CHECK(std::abs(kmean - 0.9) < 1e-10);
    CHECK_THROWS_AS(build_spectrum(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("initial packet is centered at the origin with width l0") {
    const BarrierSystem sys(1.0, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(6.0, 0.9, 1024);
    const PacketSimulator sim(sys, spec, -80.0, 120.0, 4097);
    const PacketState s0 = sim.state(0.0);
    CHECK(std::abs(s0.norm_tot - 1.0) < 1e-6);
    const double x0 = sim.xbar(s0.tot);
    CHECK(std::abs(x0) < 1e-6 * 6.0 * 100.0); // well within a fraction of l0
    // spatial variance ~ l0^2 at t = 0
    double num = 0.0, den = 0.0;
    const auto& xs = sim.xgrid();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double w = std::norm(s0.tot[static_cast<Eigen::Index>(i)]);
        num += w * (xs[i] - x0) * (xs[i] - x0);
        den += w;
    }
    CHECK(std::abs(num / den / (6.0 * 6.0) - 1.0) < 0.05);
}

TEST_CASE("decomposition and norms on a coarse run") {
    const BarrierSystem sys(1.0, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(6.0, 0.9, 1024);
    const PacketSimulator sim(sys, spec, -120.0, 160.0, 4097);
    CHECK(std::abs(sim.T_as() + sim.R_as() - 1.0) < 1e-12);
    for (double t : {0.0, 20.0, 45.0}) {
        const PacketState s = sim.state(t);
        CHECK(std::abs(s.norm_tot - 1.0) < 1e-5);
        for (Eigen::Index i = 0; i < s.tot.size(); i += 97) {
            const double scale = std::max(1e-3, std::abs(s.tot[i]));
            CHECK(std::abs(s.tot[i] - s.tr[i] - s.ref[i]) < 1e-10 * scale);
        }
    }
}

TEST_CASE("free-like CM motion for a vanishing barrier") {
    const BarrierSystem sys(1e-8, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(6.0, 0.9, 1024);
    const PacketSimulator sim(sys, spec, -80.0, 200.0, 4097);
    const double v = sys.hbar * 0.9 / sys.mass; // hbar kbar / m
    for (double t : {10.0, 30.0, 60.0}) {
        const PacketState s = sim.state(t);
        CHECK(std::abs(sim.xbar(s.tot) - v * t) / (v * t) < 1e-3);
    }
}

TEST_CASE("start position matches the spectral average of -lambda'") {
    const BarrierSystem sys(1.0, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(12.0, 0.9, 1024);
    const PacketSimulator sim(sys, spec, -80.0, 120.0, 4097);
    // narrow packet: the weighted average collapses onto -lambda'(kbar)
    const GroupTimes g = phase_and_group_times(sys, WaveNumberPoint(sys, 0.9));
    CHECK(std::abs(sim.x_start_spectral(Part::tr) - g.x_start) < 0.05 * std::abs(g.x_start));
    const AsymptoticTimes at = asymptotic_group_times(sim);
    CHECK(std::abs(at.tau_as_tr - g.tau_as) < 0.01 * std::abs(g.tau_as));
    CHECK(std::abs(at.tau_as_ref - g.tau_as) < 0.05 * std::abs(g.tau_as));
}

TEST_CASE("local group times on a tracked trajectory") {
    const BarrierSystem sys(1.0, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(6.0, 0.9, 1024);
    const PacketSimulator sim(sys, spec, -160.0, 240.0, 6145);
    const CmTrajectory traj = sim.cm_track(0.0, 70.0, 141);
    const LocalTimes lt = local_group_times(sim, traj);
    CHECK(lt.entered);
    CHECK(lt.exited);
    CHECK(lt.tau_loc_tr > 0.0);
    // transmitted packet crosses a 4-unit interaction region slower than free flight there
    CHECK(lt.t_exit > lt.t_entry);
    const double tau_as_fit = tau_as_from_track(sim, traj);
    CHECK(std::isfinite(tau_as_fit));
    const AsymptoticTimes at = asymptotic_group_times(sim);
    CHECK(std::abs(tau_as_fit - at.tau_as_tr) < 0.35 * std::abs(at.tau_as_tr) + 0.5);
}

TEST_CASE("reflection norm stays constant while transmission norm breathes") {
    const BarrierSystem sys(1.0, 1.5, 1.0, 40.0);
    const GaussianSpectrum spec = build_spectrum(6.0, 0.9, 2048);
    const PacketSimulator sim(sys, spec, -160.0, 240.0, 6145);
    const NormTrace tr = sim.norm_trace(0.0, 70.0, 71);
    double rlo = 1e300, rhi = -1e300, tdev = 0.0;
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        rlo = std::min(rlo, tr.R[i]);
        rhi = std::max(rhi, tr.R[i]);
        tdev = std::max(tdev, std::abs(tr.T[i] - tr.T.front()));
    }
    CHECK(rhi - rlo < 1e-5);
    CHECK(std::abs(tr.T.back() - tr.T.front()) < 1e-6);
    CHECK(tdev > 1e-3); // T genuinely breathes during the interaction
    CHECK(std::abs(tr.T.front() - sim.T_as()) < 1e-6);
    CHECK(std::abs(tr.R.front() - sim.R_as()) < 1e-5);
}

} // TEST_SUITE
