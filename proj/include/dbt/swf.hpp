#ifndef DBT_SWF_HPP
#define DBT_SWF_HPP

#include "dbt/scatter.hpp"

namespace dbt {

enum class Part { tr, ref };

/// Reflection subprocess wave function psi_ref and the coefficients of
/// psi_tr = Psi_tot - psi_ref.  psi_ref vanishes identically for x >= xc;
/// psi_tr coefficients are stored in the same regional bases as
/// StationaryField so analytic one-sided derivatives are available.
struct SwfField {
    cplx A_in_ref;      // sqrt(R_two) e^{i lambda}
    cplx A_in_tr;       // 1 - A_in_ref
    double lambda = 0.0;
    cplx a_ref_gap;     // coefficient of sin(k(x - xc)) on [b1, xc)
    cplx a_ref1, b_ref1; // sinh/cosh(kappa(x - b1)) on [a1, b1]
    cplx b_out;
    cplx A_tr1, B_tr1;  // psi_tr on [a1, b1], basis sinh/cosh(kappa(x - a1))
    cplx A_tr_gap;      // psi_tr sin coefficient on [b1, xc); cos part is Bgap
    bool zero_ref = false; // resonance: empty reflection subensemble
};

SwfField ref_field(const BarrierSystem& sys, const WaveNumberPoint& kpt,
                   const StationaryField& total);

cplx eval_swf(Part which, const BarrierSystem& sys, const WaveNumberPoint& kpt,
              const SwfField& swf, const StationaryField& total, double x);
cplx eval_swf_deriv(Part which, const BarrierSystem& sys, const WaveNumberPoint& kpt,
                    const SwfField& swf, const StationaryField& total, double x);

/// Probability current density (hbar/m) Im(psi* dpsi).
double current(const BarrierSystem& sys, cplx psi, cplx dpsi);

} // namespace dbt

#endif
