#ifndef DBT_CHARTIMES_HPP
#define DBT_CHARTIMES_HPP

#include <utility>

#include "dbt/scatter.hpp"

namespace dbt {

/// Analytic k-derivatives of the one- and two-barrier phases/coefficients.
struct DerivBundle {
    double Jp = 0.0;        // dJ/dk
    double Tp = 0.0;        // dT/dk
    double J_two_p = 0.0;   // dJ_two/dk
    double lambda_p = 0.0;  // dlambda/dk (continuous branch)
    bool near_resonance = false; // |cos chi| below threshold
};

DerivBundle derivatives(const BarrierSystem& sys, const WaveNumberPoint& kpt);

struct GroupTimes {
    double tau_ph = 0.0;   // Wigner phase time m J_two'/hbar k
    double tau_as = 0.0;   // asymptotic group time
    double t_dep = 0.0;    // departure time m lambda'/hbar k
    double x_start = 0.0;  // -lambda'
    bool near_resonance = false;
};

GroupTimes phase_and_group_times(const BarrierSystem& sys, const WaveNumberPoint& kpt);

double tau_free(const BarrierSystem& sys, double k); // m D / hbar k
double tau0(const BarrierSystem& sys);               // m D / hbar kappa0

/// Single-barrier (L = 0) closed forms; throw for L != 0.
double x_start_closed(const BarrierSystem& sys, const WaveNumberPoint& kpt);
double tau_as_closed(const BarrierSystem& sys, const WaveNumberPoint& kpt);

/// Dwell times of the transmission subprocess, flux-normalized by T_two.
struct TrDwell {
    double tau1 = 0.0;     // first barrier (= tau2 by symmetry)
    double tau_gap = 0.0;
    double tau2 = 0.0;
    double total = 0.0;
    double left = 0.0;     // [a1, xc] share; equals right = total/2
    double right = 0.0;
};

/// Dwell times of the reflection subprocess, normalized by R_two.
struct RefDwell {
    bool empty = false;    // resonance: no reflection subensemble
    double tau1 = 0.0;
    double tau_gap = 0.0;
    double total = 0.0;
};

std::pair<TrDwell, RefDwell> dwell_times(const BarrierSystem& sys,
                                         const WaveNumberPoint& kpt);

/// Dwell time of the total state (flux-normalized integral of |Psi_tot|^2).
struct TotalDwell {
    double tau1 = 0.0;
    double tau_gap = 0.0;
    double tau2 = 0.0;
    double total = 0.0;
};

TotalDwell buttiker_dwell(const BarrierSystem& sys, const WaveNumberPoint& kpt);

/// Opaque-limit (kappa d -> inf) asymptotic values and exact/asymptote ratios.
struct OpaqueReport {
    double tau1_tr_asym = 0.0;
    double tau_gap_tr_asym = 0.0;
    double tau_ref_asym = 0.0;     // saturated reflection dwell time
    double tau_group_asym = 0.0;   // 2m / hbar k kappa
    double ratio_tau1_tr = 0.0;    // exact / asymptote
    double ratio_tau_gap_tr = 0.0;
    double ratio_tau_ref = 0.0;
    double ratio_tau_as = 0.0;
};

OpaqueReport opaque_limit_report(const BarrierSystem& sys, const WaveNumberPoint& kpt);

namespace detail {
/// int_0^w |A sinh(kappa s) + B cosh(kappa s)|^2 ds with signed u = kappa^2
/// (trigonometric basis for u < 0).
double region_mod2_integral(cplx A, cplx B, double u, double w);
} // namespace detail

} // namespace dbt

#endif
