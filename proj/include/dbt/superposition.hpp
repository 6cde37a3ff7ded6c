#ifndef DBT_SUPERPOSITION_HPP
#define DBT_SUPERPOSITION_HPP

#include "dbt/system.hpp"

namespace dbt {

/// The naive two-solution split of the standard scattering state for a
/// barrier parameterized by transfer-matrix elements (q, p): psi_1 carries
/// the transmitted outgoing wave, psi_2 the reflected one, psi_1 + psi_2
/// reproduces the standard solution coefficient by coefficient.
struct NaiveSplit {
    cplx q, p;
    double k = 0.0;
    double T = 1.0; // 1/|q|^2

    // plane-wave amplitudes per region (left of a / right of b)
    cplx psi1_left_in;   // coefficient of e^{ikx}, x <= a
    cplx psi1_right_out; // e^{ikx}, x >= b
    cplx psi1_right_in;  // e^{-ikx}, x >= b
    cplx psi2_left_in;   // e^{ikx}, x <= a
    cplx psi2_left_out;  // e^{-ikx}, x <= a
    cplx psi2_right_in;  // e^{-ikx}, x >= b

    // net currents per solution, units of hbar k / m
    double j1_left = 0.0, j1_right = 0.0;
    double j2_left = 0.0, j2_right = 0.0;
};

NaiveSplit naive_split(cplx q, cplx p, double k);

/// Channel-by-channel current comparison between the naive split and the
/// standard solution; all entries in units of hbar k / m.
struct CurrentAudit {
    double T = 1.0;
    bool one_channel = false;   // T = 1: split degenerates, nothing to audit
    double inc1 = 0.0;          // incident current of psi_1  (= T^2)
    double transmitted = 0.0;   // transmitted current of psi (= T)
    double inc2 = 0.0;          // incident current of psi_2  (= R^2)
    double reflected = 0.0;     // reflected current of psi   (= R)
    double mismatch_tr = 0.0;   // transmitted - inc1 = T(1-T)
    double mismatch_ref = 0.0;  // reflected - inc2 = R(1-R)
};

CurrentAudit current_audit(const NaiveSplit& split);

} // namespace dbt

#endif
