#ifndef DBT_SCATTER_HPP
#define DBT_SCATTER_HPP

#include <vector>

#include "dbt/system.hpp"

namespace dbt {

/// Real scattering parameters of a single rectangular barrier at fixed k.
/// For E > V0 the hyperbolic functions are evaluated through their
/// trigonometric equivalents, so T, J, F, eta stay real; theta_plus/minus
/// are kept complex (they are purely imaginary above the barrier).
struct OneBarrierParams {
    double T = 1.0;
    double R = 0.0;
    double J = 0.0;      // transmission phase, branch folded in
    double J0 = 0.0;     // branch offset, 0 or pi
    double F = 0.0;      // 0 or pi
    double eta = 1.0;    // +1 iff F == 0
    cplx theta_plus;
    cplx theta_minus;
    // cached entire-in-kappa^2 building blocks, shared by downstream formulas
    double shc = 0.0;    // sinh(kappa d)/kappa
    double ch = 1.0;     // cosh(kappa d)
};

/// Elements of the 2x2 flux-form transfer matrix Y = [[q, p], [p*, q*]].
struct TransferMatrix {
    cplx q{1.0, 0.0};
    cplx p{0.0, 0.0};
};

struct TwoBarrierParams {
    double T_two = 1.0;
    double R_two = 0.0;
    double J_two = 0.0;
    double F_two = 0.0;    // 0 or pi (mod 2pi)
    double F_two0 = 0.0;   // branch term, 0 or pi
    double eta_two = 1.0;  // +1 iff F_two == 0 (mod 2pi)
    double chi = 0.0;      // J + kL
};

/// Full coefficient set of the stationary total wave function over the
/// five regions, plus the Q, P combinations it was assembled from.
struct StationaryField {
    cplx B_out, A_out;
    cplx A1, B1;      // sinh/cosh coefficients, argument kappa(x - a1)
    cplx A2, B2;      // argument kappa(x - b2)
    cplx Agap, Bgap;  // sin/cos coefficients, argument k(x - xc)
    cplx Q, P;
};

OneBarrierParams one_barrier_params(const BarrierSystem& sys, const WaveNumberPoint& kpt);

/// q, p for a rectangular barrier occupying [a, b] (width b - a = sys.d).
TransferMatrix transfer_matrix(const OneBarrierParams& par, double a, double b, double k);

TwoBarrierParams compose_two_barrier(const BarrierSystem& sys, const WaveNumberPoint& kpt);

StationaryField total_field(const BarrierSystem& sys, const WaveNumberPoint& kpt);

cplx eval_total(const StationaryField& f, const BarrierSystem& sys,
                const WaveNumberPoint& kpt, double x);
/// Analytic x-derivative of the regional branch.
cplx eval_total_deriv(const StationaryField& f, const BarrierSystem& sys,
                      const WaveNumberPoint& kpt, double x);

/// Independent ground truth: assemble the 8x8 continuity system (value and
/// derivative at a1, b1, a2, b2) for piecewise regional ansatz with unit
/// incident amplitude and solve it directly.  Requires E != V0.
StationaryField oracle_amplitudes(const BarrierSystem& sys, const WaveNumberPoint& kpt);

/// All k in (k_lo, k_hi) with cos(J(k) + kL) = 0, i.e. T_two = 1.
/// Bracketing on a uniform grid (>= 2000 points per kappa0 interval),
/// refined by bisection to relative tolerance 1e-12.
std::vector<double> find_resonances(const BarrierSystem& sys, double k_lo, double k_hi);

namespace detail {
/// sinh(sqrt(u) x)/sqrt(u) and cosh(sqrt(u) x) as entire functions of the
/// signed argument u = kappa^2 (trigonometric branch for u < 0).
void sinhc_cosh(double u, double x, double& shc, double& ch);
} // namespace detail

} // namespace dbt

#endif
