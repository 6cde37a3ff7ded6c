#include <cmath>
#include <random>

#include <doctest.h>

#include "dbt/scatter.hpp"

using namespace dbt;

namespace {

// k values spanning E/V0 in [0.05, 3] for V0 = 1 in reduced units (E = k^2)
std::vector<double> k_grid(std::size_t n) {
    std::vector<double> ks;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 0.05 + (3.0 - 0.05) * static_cast<double>(i) / static_cast<double>(n - 1);
        ks.push_back(std::sqrt(r));
    }
    return ks;
}

double field_scale(const StationaryField& f) {
    double s = 1.0;
    for (cplx c : {f.A_out, f.B_out, f.A1, f.B1, f.A2, f.B2, f.Agap, f.Bgap})
        s = std::max(s, std::abs(c));
    return s;
}

} // namespace

TEST_SUITE("scatter") {

TEST_CASE("transfer matrix is flux-unimodular") {
    const BarrierSystem sys(1.0, 2.0, 1.3, 1.0);
    for (double k : k_grid(40)) {
        const WaveNumberPoint kpt(sys, k);
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        const TransferMatrix y = transfer_matrix(par, sys.a1, sys.b1(), k);
        CHECK(std::abs(std::norm(y.q) - std::norm(y.p) - 1.0) < 1e-12);
    }
}

TEST_CASE("two-barrier parameters agree with the explicit matrix product") {
    const BarrierSystem sys(1.0, 2.0, 1.3, 1.0);
    for (double k : k_grid(40)) {
        const WaveNumberPoint kpt(sys, k);
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        const TransferMatrix y1 = transfer_matrix(par, sys.a1, sys.b1(), k);
        const TransferMatrix y2 = transfer_matrix(par, sys.a2(), sys.b2(), k);
        const cplx q_two = y1.q * y2.q + y1.p * std::conj(y2.p);
        const cplx p_two = y1.q * y2.p + y1.p * std::conj(y2.q);

        const TwoBarrierParams two = compose_two_barrier(sys, kpt);
        CHECK(std::abs(1.0 / std::norm(q_two) - two.T_two) < 1e-10);

        const StationaryField f = total_field(sys, kpt);
        const cplx i(0.0, 1.0);
        const cplx a_out = std::exp(i * (k * sys.width())) / q_two;
        const cplx b_out = std::conj(p_two) / q_two * std::exp(-i * (2.0 * k * sys.a1));
        CHECK(std::abs(a_out - f.A_out) < 1e-10);
        CHECK(std::abs(b_out - f.B_out) < 1e-10);
    }
}

TEST_CASE("amplitudes match the continuity-system oracle across geometries") {
    for (double gap : {0.0, 2.0, 10.0}) {
        const BarrierSystem sys(1.0, 2.0, gap, 1.0);
        for (double k : k_grid(100)) {
            const WaveNumberPoint kpt(sys, k);
            const StationaryField f = total_field(sys, kpt);
            const StationaryField o = oracle_amplitudes(sys, kpt);
            const double scale = field_scale(o);
            CHECK(std::abs(f.A_out - o.A_out) / scale < 1e-10);
            CHECK(std::abs(f.B_out - o.B_out) / scale < 1e-10);
            CHECK(std::abs(f.A1 - o.A1) / scale < 1e-10);
            CHECK(std::abs(f.B1 - o.B1) / scale < 1e-10);
            CHECK(std::abs(f.A2 - o.A2) / scale < 1e-10);
            CHECK(std::abs(f.B2 - o.B2) / scale < 1e-10);
            CHECK(std::abs(f.Agap - o.Agap) / scale < 1e-10);
            CHECK(std::abs(f.Bgap - o.Bgap) / scale < 1e-10);
        }
    }
}

TEST_CASE("unitarity of the outgoing amplitudes") {
    const BarrierSystem sys(1.0, 2.0, 1.3, 1.0);
    for (double k : k_grid(60)) {
        const WaveNumberPoint kpt(sys, k);
        const StationaryField f = total_field(sys, kpt);
        const TwoBarrierParams two = compose_two_barrier(sys, kpt);
        CHECK(std::abs(std::norm(f.A_out) + std::norm(f.B_out) - 1.0) < 1e-12);
        CHECK(std::abs(std::norm(f.A_out) - two.T_two) < 1e-12);
        CHECK(std::abs(std::norm(f.B_out) - two.R_two) < 1e-12);
    }
}

TEST_CASE("total field is C1 at the region boundaries") {
    const BarrierSystem sys(1.0, 2.0, 1.3, 1.0);
    const double eps = 1e-9;
    for (double k : {0.3, 0.7, 0.95, 1.05, 1.4, 2.0}) {
        const WaveNumberPoint kpt(sys, k);
        const StationaryField f = total_field(sys, kpt);
        for (double xb : {sys.a1, sys.b1(), sys.a2(), sys.b2()}) {
            const cplx vl = eval_total(f, sys, kpt, xb - eps);
            const cplx vr = eval_total(f, sys, kpt, xb + eps);
            const cplx dl = eval_total_deriv(f, sys, kpt, xb - eps);
            const cplx dr = eval_total_deriv(f, sys, kpt, xb + eps);
            CHECK(std::abs(vl - vr) < 1e-7 * std::max(1.0, std::abs(vl)));
            CHECK(std::abs(dl - dr) < 1e-7 * std::max(1.0, std::abs(dl)));
        }
    }
}

TEST_CASE("zero-width barrier is transparent") {
    const BarrierSystem sys(1.0, 1e-13, 0.0, 1.0);
    const WaveNumberPoint kpt(sys, 0.7);
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    CHECK(par.T == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(par.J) < 1e-12);
}

TEST_CASE("high-energy transparency") {
    const BarrierSystem sys(1.0, 2.0, 0.0, 1.0);
    double prevT = 0.0;
    for (double k : {3.0, 5.0, 10.0, 30.0}) {
        const WaveNumberPoint kpt(sys, k);
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        CHECK(par.T >= prevT - 1e-12);
        prevT = par.T;
    }
    const WaveNumberPoint kpt(sys, 30.0);
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    CHECK(par.T > 0.999);
    // phase approaches that of free flight at the over-barrier wavenumber,
    // i.e. the transmitted wave picks up a vanishing delay
    const double gd = std::sqrt(-kpt.kappa_sq) * sys.d;
    const cplx i(0.0, 1.0);
    CHECK(std::abs(std::exp(i * par.J) - std::exp(i * gd)) < 0.01);
}

TEST_CASE("direct evaluation at theta_plus = 1") {
    // k = kappa0/sqrt(2): theta_- = 0, J = 0, T = 1/(1+sinh^2(kappa d))
    const double kd = 3.0 * M_PI / (2.0 * std::sqrt(2.0));
    const BarrierSystem sys(1.0, kd / (1.0 / std::sqrt(2.0)), 0.0, 1.0);
    const WaveNumberPoint kpt(sys, 1.0 / std::sqrt(2.0));
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    CHECK(std::abs(par.J) < 1e-12);
    const double sh = std::sinh(kd);
    CHECK(par.T == doctest::Approx(1.0 / (1.0 + sh * sh)).epsilon(1e-12));
}

TEST_CASE("gap-free system reduces to a single barrier of doubled width") {
    const BarrierSystem sys(1.0, 2.0, 0.0, 1.0);
    const BarrierSystem wide(1.0, 4.0, 0.0, 1.0);
    for (double k : k_grid(30)) {
        const WaveNumberPoint kpt(sys, k);
        const WaveNumberPoint kptw(wide, k);
        const TwoBarrierParams two = compose_two_barrier(sys, kpt);
        const OneBarrierParams par = one_barrier_params(wide, kptw);
        CHECK(std::abs(two.T_two - par.T) < 1e-10);
        const cplx i(0.0, 1.0);
        CHECK(std::abs(std::exp(i * two.J_two) - std::exp(i * par.J)) < 1e-10);
    }
}

TEST_CASE("parameters are continuous across E = V0") {
    const BarrierSystem sys(1.0, 2.0, 0.0, 1.0);
    // compare the series branch against both hyperbolic and trigonometric ones
    const double kv = 1.0; // E = V0
    for (double offs : {1e-4, 1e-5}) {
        const WaveNumberPoint below(sys, kv - offs);
        const WaveNumberPoint above(sys, kv + offs);
        const OneBarrierParams pb = one_barrier_params(sys, below);
        const OneBarrierParams pa = one_barrier_params(sys, above);
        CHECK(std::abs(pb.T - pa.T) < 1e-3 * offs / 1e-5);
        CHECK(std::abs(pb.J - pa.J) < 1e-3 * offs / 1e-5);
    }
    // series vs analytic branch right at the switch threshold
    double shc_s, ch_s, shc_h, ch_h;
    const double d = 2.0;
    const double u = 0.9e-8 / (d * d);
    detail::sinhc_cosh(u, d, shc_s, ch_s);
    const double r = std::sqrt(u);
    shc_h = std::sinh(r * d) / r;
    ch_h = std::cosh(r * d);
    CHECK(std::abs(shc_s - shc_h) < 1e-8);
    CHECK(std::abs(ch_s - ch_h) < 1e-8);
    detail::sinhc_cosh(-u, d, shc_s, ch_s);
    const double rt = std::sqrt(u);
    CHECK(std::abs(shc_s - std::sin(rt * d) / rt) < 1e-8);
    CHECK(std::abs(ch_s - std::cos(rt * d)) < 1e-8);
}

TEST_CASE("resonance search") {
    const BarrierSystem sys(1.0, 2.0, 6.0, 1.0);
    const auto roots = find_resonances(sys, 0.1, 2.5);
    CHECK(!roots.empty());
    for (double kr : roots) {
        const WaveNumberPoint kpt(sys, kr);
        const TwoBarrierParams two = compose_two_barrier(sys, kpt);
        CHECK(two.T_two >= 1.0 - 1e-10);
    }
    // no sub-barrier resonances for a gap-free system at these parameters
    const BarrierSystem nosym(1.0, 3.0 * M_PI / 2.0, 0.0, 1.0);
    const auto none = find_resonances(nosym, 0.05, 0.95);
    CHECK(none.empty());
}

TEST_CASE("randomized flux and unitarity fuzz") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> uv(0.2, 3.0), ud(0.3, 3.0), uL(0.0, 5.0),
        uk(0.05, 2.5);
    for (int it = 0; it < 300; ++it) {
        const BarrierSystem sys(uv(rng), ud(rng), uL(rng), 1.0 + ud(rng));
        const double k = uk(rng) * sys.kappa0();
        const WaveNumberPoint kpt(sys, k);
        if (std::abs(kpt.kappa_sq) < 1e-9) continue;
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        const TransferMatrix y = transfer_matrix(par, sys.a1, sys.b1(), k);
        CHECK(std::abs(std::norm(y.q) - std::norm(y.p) - 1.0) < 1e-10);
        const StationaryField f = total_field(sys, kpt);
        CHECK(std::abs(std::norm(f.A_out) + std::norm(f.B_out) - 1.0) < 1e-10);
    }
}

} // TEST_SUITE
