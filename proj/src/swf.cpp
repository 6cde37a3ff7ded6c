#include "dbt/swf.hpp"

#include <cmath>

namespace dbt {

SwfField ref_field(const BarrierSystem& sys, const WaveNumberPoint& kpt,
                   const StationaryField& total) {
    const double k = kpt.k;
    const cplx i(0.0, 1.0);
    const TwoBarrierParams two = compose_two_barrier(sys, kpt);

    SwfField w;
    w.b_out = total.B_out;
    if (two.R_two < 1e-14) {
        // resonance: the reflection subprocess is empty
        w.zero_ref = true;
        w.lambda = two.eta_two * M_PI / 2.0;
        w.A_in_ref = 0.0;
        w.A_in_tr = 1.0;
        w.b_out = 0.0;
        w.a_ref_gap = w.a_ref1 = w.b_ref1 = 0.0;
        w.A_tr1 = total.A1;
        w.B_tr1 = total.B1;
        w.A_tr_gap = total.Agap;
        return w;
    }

    w.lambda = two.eta_two * std::atan(std::sqrt(two.T_two / two.R_two));
    w.A_in_ref = -total.B_out * std::conj(total.Q) / total.Q;
    w.A_in_tr = 1.0 - w.A_in_ref;

    const cplx e1 = std::exp(i * (k * sys.a1));
    w.a_ref_gap = -2.0 * total.P * total.B_out * std::conj(total.A_out) * e1;
    const cplx kap = kpt.kappa;
    w.a_ref1 = (k / kap) * w.a_ref_gap * std::cos(k * sys.gap / 2.0);
    w.b_ref1 = -w.a_ref_gap * std::sin(k * sys.gap / 2.0);

    // re-express psi_ref on [a1, b1] in the sinh/cosh(kappa(x - a1)) basis and
    // subtract, so psi_tr has its own analytic coefficients there
    const cplx shd = std::sinh(kap * sys.d);
    const cplx chd = std::cosh(kap * sys.d);
    const cplx Ap = w.a_ref1 * chd - w.b_ref1 * shd;
    const cplx Bp = -w.a_ref1 * shd + w.b_ref1 * chd;
    w.A_tr1 = total.A1 - Ap;
    w.B_tr1 = total.B1 - Bp;
    w.A_tr_gap = total.Agap - w.a_ref_gap;
    return w;
}

cplx eval_swf(Part which, const BarrierSystem& sys, const WaveNumberPoint& kpt,
              const SwfField& swf, const StationaryField& total, double x) {
    const double k = kpt.k;
    const cplx i(0.0, 1.0);
    const cplx kap = kpt.kappa;
    if (which == Part::ref) {
        if (x >= sys.xc()) return 0.0;
        if (x <= sys.a1)
            return swf.A_in_ref * std::exp(i * (k * x)) +
                   swf.b_out * std::exp(i * (k * (2.0 * sys.a1 - x)));
        if (x <= sys.b1())
            return swf.a_ref1 * std::sinh(kap * (x - sys.b1())) +
                   swf.b_ref1 * std::cosh(kap * (x - sys.b1()));
        return swf.a_ref_gap * std::sin(k * (x - sys.xc()));
    }
    if (x >= sys.xc()) return eval_total(total, sys, kpt, x);
    if (x <= sys.a1) return swf.A_in_tr * std::exp(i * (k * x));
    if (x <= sys.b1())
        return swf.A_tr1 * std::sinh(kap * (x - sys.a1)) +
               swf.B_tr1 * std::cosh(kap * (x - sys.a1));
    return swf.A_tr_gap * std::sin(k * (x - sys.xc())) +
           total.Bgap * std::cos(k * (x - sys.xc()));
}

cplx eval_swf_deriv(Part which, const BarrierSystem& sys, const WaveNumberPoint& kpt,
                    const SwfField& swf, const StationaryField& total, double x) {
    const double k = kpt.k;
    const cplx i(0.0, 1.0);
    const cplx kap = kpt.kappa;
    if (which == Part::ref) {
        if (x >= sys.xc()) return 0.0;
        if (x <= sys.a1)
            return i * k * swf.A_in_ref * std::exp(i * (k * x)) -
                   i * k * swf.b_out * std::exp(i * (k * (2.0 * sys.a1 - x)));
        if (x <= sys.b1())
            return kap * (swf.a_ref1 * std::cosh(kap * (x - sys.b1())) +
                          swf.b_ref1 * std::sinh(kap * (x - sys.b1())));
        return k * swf.a_ref_gap * std::cos(k * (x - sys.xc()));
    }
    if (x >= sys.xc()) return eval_total_deriv(total, sys, kpt, x);
    if (x <= sys.a1) return i * k * swf.A_in_tr * std::exp(i * (k * x));
    if (x <= sys.b1())
        return kap * (swf.A_tr1 * std::cosh(kap * (x - sys.a1)) +
                      swf.B_tr1 * std::sinh(kap * (x - sys.a1)));
    return k * (swf.A_tr_gap * std::cos(k * (x - sys.xc())) -
                total.Bgap * std::sin(k * (x - sys.xc())));
}

double current(const BarrierSystem& sys, cplx psi, cplx dpsi) {
    return (sys.hbar / sys.mass) * std::imag(std::conj(psi) * dpsi);
}

} // namespace dbt
