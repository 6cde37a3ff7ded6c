#include "dbt/scatter.hpp"

#include <algorithm>
#include <cmath>

namespace dbt {

namespace detail {

void sinhc_cosh(double u, double x, double& shc, double& ch) {
    const double ux2 = u * x * x;
    if (std::abs(ux2) < 1e-8) {
        // series limit; keeps the E = V0 crossing regular
        shc = x * (1.0 + ux2 / 6.0 + ux2 * ux2 / 120.0);
        ch = 1.0 + ux2 / 2.0 + ux2 * ux2 / 24.0;
    } else if (u > 0.0) {
        const double r = std::sqrt(u);
        shc = std::sinh(r * x) / r;
        ch = std::cosh(r * x);
    } else {
        const double r = std::sqrt(-u);
        shc = std::sin(r * x) / r;
        ch = std::cos(r * x);
    }
}

} // namespace detail

OneBarrierParams one_barrier_params(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const double k = kpt.k;
    const double u = kpt.kappa_sq;          // kappa^2, signed
    const double s0 = sys.kappa0sq();       // kappa0^2, signed (negative for a well)

    OneBarrierParams par;
    detail::sinhc_cosh(u, sys.d, par.shc, par.ch);

    // theta_+ sinh(kappa d) = (kappa0^2 / 2k) * sinh(kappa d)/kappa  (real)
    const double tps = s0 / (2.0 * k) * par.shc;
    // theta_- tanh(kappa d) * cosh(kappa d) = ((k^2 - kappa^2)/2k) * sinh/kappa
    const double tmt = (k * k - u) / (2.0 * k) * par.shc;

    par.T = 1.0 / (1.0 + tps * tps);
    par.R = 1.0 - par.T;
    par.J = std::atan2(tmt, par.ch);
    par.J0 = (par.ch < 0.0) ? M_PI : 0.0;
    par.eta = (tps >= 0.0) ? 1.0 : -1.0;
    par.F = (par.eta > 0.0) ? 0.0 : M_PI;

    const cplx kap = kpt.kappa;
    par.theta_plus = 0.5 * (k / kap + kap / k);
    par.theta_minus = 0.5 * (k / kap - kap / k);
    return par;
}

TransferMatrix transfer_matrix(const OneBarrierParams& par, double a, double b, double k) {
    if (b <= a) throw std::invalid_argument("barrier interval must have b > a");
    const cplx i(0.0, 1.0);
    TransferMatrix y;
    y.q = std::exp(i * (k * (b - a) - par.J)) / std::sqrt(par.T);
    y.p = i * std::sqrt(par.R / par.T) * std::exp(i * (par.F - k * (b + a)));
    return y;
}

TwoBarrierParams compose_two_barrier(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    TwoBarrierParams two;
    two.chi = par.J + kpt.k * sys.gap;
    const double c = std::cos(two.chi);
    const double s = std::sin(two.chi);
    two.T_two = 1.0 / (1.0 + 4.0 * par.R / (par.T * par.T) * c * c);
    two.R_two = 1.0 - two.T_two;
    two.F_two0 = (c >= 0.0) ? 0.0 : M_PI;
    two.J_two = par.J + std::atan2((1.0 - par.R) * s, (1.0 + par.R) * c);
    two.F_two = std::fmod(par.F + two.F_two0, 2.0 * M_PI);
    two.eta_two = (std::abs(two.F_two) < 1e-9 || std::abs(two.F_two - 2.0 * M_PI) < 1e-9)
                      ? 1.0 : -1.0;
    return two;
}

StationaryField total_field(const BarrierSystem& sys, const WaveNumberPoint& kpt) {
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    const double k = kpt.k;
    const cplx i(0.0, 1.0);

    // flat (position-free) one-barrier elements: q = e^{-iJ}/sqrt(T), p = eta sqrt(R/T)
    const cplx q = std::exp(-i * par.J) / std::sqrt(par.T);
    const double p = par.eta * std::sqrt(par.R / par.T);

    StationaryField f;
    const cplx ehalf = std::exp(i * (k * sys.gap / 2.0));
    f.Q = std::conj(q) * ehalf + i * p / ehalf;
    f.P = i * std::conj(q) * ehalf + p / ehalf;

    f.A_out = 0.5 * (f.Q / std::conj(f.Q) - f.P / std::conj(f.P));
    f.B_out = -0.5 * (f.Q / std::conj(f.Q) + f.P / std::conj(f.P));

    const cplx e1 = std::exp(i * (k * sys.a1));
    const cplx kap = kpt.kappa;
    f.A1 = i * (1.0 - f.B_out) * (k / kap) * e1;
    f.B1 = (1.0 + f.B_out) * e1;
    f.A2 = i * f.A_out * (k / kap) * e1;
    f.B2 = f.A_out * e1;
    f.Agap = -f.A_out * std::conj(f.P) * e1;
    f.Bgap = f.A_out * std::conj(f.Q) * e1;
    return f;
}

cplx eval_total(const StationaryField& f, const BarrierSystem& sys,
                const WaveNumberPoint& kpt, double x) {
    const double k = kpt.k;
    const cplx i(0.0, 1.0);
    const cplx kap = kpt.kappa;
    if (x <= sys.a1)
        return std::exp(i * (k * x)) + f.B_out * std::exp(i * (k * (2.0 * sys.a1 - x)));
    if (x <= sys.b1())
        return f.A1 * std::sinh(kap * (x - sys.a1)) + f.B1 * std::cosh(kap * (x - sys.a1));
    if (x <= sys.a2())
        return f.Agap * std::sin(k * (x - sys.xc())) + f.Bgap * std::cos(k * (x - sys.xc()));
    if (x <= sys.b2())
        return f.A2 * std::sinh(kap * (x - sys.b2())) + f.B2 * std::cosh(kap * (x - sys.b2()));
    return f.A_out * std::exp(i * (k * (x - sys.width())));
}

cplx eval_total_deriv(const StationaryField& f, const BarrierSystem& sys,
                      const WaveNumberPoint& kpt, double x) {
    const double k = kpt.k;
    const cplx i(0.0, 1.0);
    const cplx kap = kpt.kappa;
    if (x <= sys.a1)
        return i * k * std::exp(i * (k * x)) -
               i * k * f.B_out * std::exp(i * (k * (2.0 * sys.a1 - x)));
    if (x <= sys.b1())
        return kap * (f.A1 * std::cosh(kap * (x - sys.a1)) + f.B1 * std::sinh(kap * (x - sys.a1)));
    if (x <= sys.a2())
        return k * (f.Agap * std::cos(k * (x - sys.xc())) - f.Bgap * std::sin(k * (x - sys.xc())));
    if (x <= sys.b2())
        return kap * (f.A2 * std::cosh(kap * (x - sys.b2())) + f.B2 * std::sinh(kap * (x - sys.b2())));
    return i * k * f.A_out * std::exp(i * (k * (x - sys.width())));
}

std::vector<double> find_resonances(const BarrierSystem& sys, double k_lo, double k_hi) {
    if (!(k_lo > 0.0) || !(k_hi > k_lo))
        throw std::invalid_argument("resonance search range must satisfy 0 < k_lo < k_hi");

    auto g = [&](double k) {
        const WaveNumberPoint kpt(sys, k);
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        return std::cos(par.J + k * sys.gap);
    };

    const double kappa0 = std::max(sys.kappa0(), 1e-12);
    const std::size_t n =
        std::max<std::size_t>(2000, static_cast<std::size_t>(2000.0 * (k_hi - k_lo) / kappa0));
    const double h = (k_hi - k_lo) / static_cast<double>(n);

    std::vector<double> roots;
    double kl = k_lo;
    double gl = g(kl);
    for (std::size_t j = 1; j <= n; ++j) {
        const double kr = k_lo + h * static_cast<double>(j);
        const double gr = g(kr);
        if (gl == 0.0) roots.push_back(kl);
        else if (gl * gr < 0.0) {
            double a = kl, b = kr;
            double ga = gl;
            while ((b - a) > 1e-12 * b) {
                const double mid = 0.5 * (a + b);
                const double gm = g(mid);
                if (ga * gm <= 0.0) b = mid;
                else { a = mid; ga = gm; }
            }
            roots.push_back(0.5 * (a + b));
        }
        kl = kr;
        gl = gr;
    }
    return roots;
}

} // namespace dbt
