#include "dbt/chartimes.hpp"

#include <cmath>

namespace dbt {

namespace {
constexpr double kResonanceCos = 1e-6;
} // namespace

DerivBundle derivatives(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const double k = kpt.k;
    const double d = sys.d;
    const double L = sys.gap;
    const cplx kap = kpt.kappa;
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    const TwoBarrierParams two = compose_two_barrier(sys, kpt);
    const cplx tp = par.theta_plus;
    const cplx tm = par.theta_minus;

    DerivBundle b;
    // entire in kappa^2: evaluated with complex kappa, results are real
    const cplx Jp = (par.T / kap) * (tp * tp * std::sinh(2.0 * kap * d) - tm * k * d);
    const cplx sh = std::sinh(kap * d);
    const cplx Tp = (par.T * par.T * tp * tp / kap) *
                    (k * d * std::sinh(2.0 * kap * d) - 4.0 * tm * sh * sh);
    b.Jp = Jp.real();
    b.Tp = Tp.real();

    const double chi = two.chi;
    b.J_two_p = b.Jp + two.T_two / (par.T * par.T) *
                           (par.T * (1.0 + par.R) * (b.Jp + L) +
                            b.Tp * std::sin(2.0 * chi));
    if (par.R < 1e-280) {
        // fully transparent single barrier: no reflected channel at all
        b.lambda_p = 0.0;
        b.near_resonance = true;
    } else {
        b.lambda_p = par.eta * two.T_two / (std::sqrt(par.R) * par.T * par.T) *
                     (b.Tp * (1.0 + par.R) * std::cos(chi) +
                      2.0 * par.R * par.T * (b.Jp + L) * std::sin(chi));
        b.near_resonance = std::abs(std::cos(chi)) < kResonanceCos;
    }
    return b;
}

GroupTimes phase_and_group_times(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const DerivBundle d = derivatives(sys, kpt);
    const double pref = sys.mass / (sys.hbar * kpt.k);
    GroupTimes g;
    g.tau_ph = pref * d.J_two_p;
    g.t_dep = pref * d.lambda_p;
    g.tau_as = g.tau_ph - g.t_dep;
    g.x_start = -d.lambda_p;
    g.near_resonance = d.near_resonance;
    return g;
}

double tau_free(const BarrierSystem& sys, double k) {
    return sys.mass * sys.width() / (sys.hbar * k);
}

double tau0(const BarrierSystem& sys) {
    return sys.mass * sys.width() / (sys.hbar * sys.kappa0());
}

double x_start_closed(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    if (sys.gap != 0.0) throw std::invalid_argument("closed form requires zero gap");
    const double k = kpt.k;
    const cplx kap = kpt.kappa;
    const double s0 = sys.kappa0sq();
    const double D = sys.width();
    const cplx shD = std::sinh(kap * D);
    const cplx num = (kap * kap - k * k) * shD + k * k * kap * D * std::cosh(kap * D);
    const cplx den = 4.0 * k * k * kap * kap + s0 * s0 * shD * shD;
    return (-2.0 * s0 / kap * num / den).real();
}

double tau_as_closed(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    if (sys.gap != 0.0) throw std::invalid_argument("closed form requires zero gap");
    const double k = kpt.k;
    const cplx kap = kpt.kappa;
    const double s0 = sys.kappa0sq();
    const double D = sys.width();
    const cplx shD = std::sinh(kap * D);
    const cplx sh2 = std::sinh(kap * D / 2.0);
    const cplx num = (k * k + s0 * sh2 * sh2) * (s0 * shD - k * k * kap * D);
    const cplx den = 4.0 * k * k * kap * kap + s0 * s0 * shD * shD;
    return (4.0 * sys.mass / (sys.hbar * k * kap) * num / den).real();
}

std::pair<TrDwell, RefDwell> dwell_times(const BarrierSystem& sys,
                                         const WaveNumberPoint& kpt) {
    const double k = kpt.k;
    const double d = sys.d;
    const double L = sys.gap;
    const cplx kap = kpt.kappa;
    const double s0 = sys.kappa0sq();
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    const TwoBarrierParams two = compose_two_barrier(sys, kpt);
    const double m = sys.mass;
    const double hbar = sys.hbar;
    const double chi = two.chi;
    const double sr = std::sqrt(par.R);

    TrDwell tr;
    const cplx t1 = m / (4.0 * hbar * k * kap * kap * kap) *
                    (2.0 * kap * d * (kap * kap - k * k) + s0 * std::sinh(2.0 * kap * d));
    tr.tau1 = tr.tau2 = t1.real();
    tr.tau_gap = m / (hbar * k * k * par.T) *
                 (k * L * (1.0 + par.R) +
                  4.0 * par.eta * sr * std::sin(k * L / 2.0) * std::sin(par.J + k * L / 2.0));
    tr.total = 2.0 * tr.tau1 + tr.tau_gap;
    tr.left = tr.right = tr.total / 2.0;

    RefDwell ref;
    if (two.R_two < 1e-14) {
        ref.empty = true;
        return {tr, ref};
    }
    const double P2 = (1.0 + par.R - 2.0 * par.eta * sr * std::sin(chi)) / par.T;
    const cplx sh = std::sinh(kap * d);
    const cplx r1 = m * two.T_two * P2 / (2.0 * hbar * k * kap * kap * kap) *
                    (2.0 * kap * d * (kap * kap - k * k - s0 * std::cos(k * L)) +
                     4.0 * k * kap * std::sin(k * L) * sh * sh +
                     (s0 - (kap * kap - k * k) * std::cos(k * L)) * std::sinh(2.0 * kap * d));
    ref.tau1 = r1.real();
    ref.tau_gap = m * two.T_two * P2 / (hbar * k * k) * (k * L - std::sin(k * L));
    ref.total = ref.tau1 + ref.tau_gap;
    return {tr, ref};
}

namespace detail {

double region_mod2_integral(cplx A, cplx B, double u, double w) {
    if (u >= 0.0) {
        const double kp = std::sqrt(u);
        const double s2 = (u == 0.0) ? w : std::sinh(2.0 * kp * w) / (2.0 * kp);
        const double shw = (u == 0.0) ? 0.0 : std::sinh(kp * w);
        const double i11 = (s2 - w) / 2.0;
        const double i22 = (s2 + w) / 2.0;
        const double i12 = (u == 0.0) ? 0.0 : shw * shw / (2.0 * kp);
        return std::norm(A) * i11 + std::norm(B) * i22 +
               2.0 * std::real(A * std::conj(B)) * i12;
    }
    // kappa = i g: sinh -> i sin, cosh -> cos; fold the i into the coefficient
    const double g = std::sqrt(-u);
    const cplx At = cplx(0.0, 1.0) * A;
    const double s2 = std::sin(2.0 * g * w) / (2.0 * g);
    const double sw = std::sin(g * w);
    const double i11 = (w - s2) / 2.0;
    const double i22 = (w + s2) / 2.0;
    const double i12 = sw * sw / (2.0 * g);
    return std::norm(At) * i11 + std::norm(B) * i22 +
           2.0 * std::real(At * std::conj(B)) * i12;
}

} // namespace detail

TotalDwell buttiker_dwell(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const double k = kpt.k;
    const double L = sys.gap;
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    const TwoBarrierParams two = compose_two_barrier(sys, kpt);
    const StationaryField f = total_field(sys, kpt);
    const double m = sys.mass;
    const double hbar = sys.hbar;

    TotalDwell tot;
    tot.tau1 = m / (hbar * k) *
               detail::region_mod2_integral(f.A1, f.B1, kpt.kappa_sq, sys.d);
    tot.tau_gap = m * two.T_two / (hbar * k * k * par.T) *
                  (k * L * (1.0 + par.R) +
                   2.0 * par.eta * std::sqrt(par.R) * std::sin(two.chi) * std::sin(k * L));
    const auto [tr, ref] = dwell_times(sys, kpt);
    tot.tau2 = tr.tau1 * two.T_two;
    tot.total = tot.tau1 + tot.tau_gap + tot.tau2;
    return tot;
}

OpaqueReport opaque_limit_report(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    if (kpt.kappa_sq <= 0.0)
        throw std::domain_error("opaque-limit report requires E < V0");
    const double k = kpt.k;
    const double kap = std::sqrt(kpt.kappa_sq);
    const double s0 = sys.kappa0sq();
    const double d = sys.d;
    const double L = sys.gap;
    const double m = sys.mass;
    const double hbar = sys.hbar;
    const double tp2 = std::pow((k / kap + kap / k) / 2.0, 2);
    const double Jinf = std::atan((k / kap - kap / k) / 2.0);
    const double chi_inf = Jinf + k * L;

    OpaqueReport rep;
    rep.tau1_tr_asym = m * s0 * std::exp(2.0 * kap * d) / (8.0 * hbar * k * kap * kap * kap);
    rep.tau_gap_tr_asym = m * tp2 / (2.0 * hbar * k * k) *
                          (k * L + 2.0 * std::sin(k * L / 2.0) * std::sin(Jinf + k * L / 2.0)) *
                          std::exp(2.0 * kap * d);
    rep.tau_ref_asym = m *
                       (s0 - (kap * kap - k * k) * std::cos(k * L) +
                        2.0 * k * kap * std::sin(k * L)) /
                       (2.0 * hbar * k * kap * kap * kap * tp2 * (1.0 + std::sin(chi_inf)));
    rep.tau_group_asym = 2.0 * m / (hbar * k * kap);

    const auto [tr, ref] = dwell_times(sys, kpt);
    const GroupTimes g = phase_and_group_times(sys, kpt);
    rep.ratio_tau1_tr = tr.tau1 / rep.tau1_tr_asym;
    rep.ratio_tau_gap_tr = (L > 0.0) ? tr.tau_gap / rep.tau_gap_tr_asym : 0.0;
    rep.ratio_tau_ref = ref.empty ? 0.0 : ref.total / rep.tau_ref_asym;
    rep.ratio_tau_as = g.tau_as / rep.tau_group_asym;
    return rep;
}

} // namespace dbt
