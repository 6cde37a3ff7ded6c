#include "dbt/superposition.hpp"

#include <cmath>
#include <stdexcept>

namespace dbt {

NaiveSplit naive_split(cplx q, cplx p, double k) {
    if (k <= 0.0) throw std::domain_error("wavenumber must be positive");
    const double q2 = std::norm(q);
    const double p2 = std::norm(p);
    if (std::abs(q2 - p2 - 1.0) > 1e-10)
        throw std::invalid_argument("transfer-matrix pair must satisfy |q|^2-|p|^2=1");

    NaiveSplit s;
    s.q = q;
    s.p = p;
    s.k = k;
    s.T = 1.0 / q2;

    s.psi1_left_in = 1.0 / q2;
    s.psi1_right_out = 1.0 / q;
    s.psi1_right_in = -std::conj(p) / q2;
    s.psi2_left_in = p2 / q2;
    s.psi2_left_out = std::conj(p) / q;
    s.psi2_right_in = std::conj(p) / q2;

    // net current of A e^{ikx} + B e^{-ikx} is (|A|^2 - |B|^2) hbar k / m
    s.j1_left = std::norm(s.psi1_left_in);
    s.j1_right = std::norm(s.psi1_right_out) - std::norm(s.psi1_right_in);
    s.j2_left = std::norm(s.psi2_left_in) - std::norm(s.psi2_left_out);
    s.j2_right = -std::norm(s.psi2_right_in);
    return s;
}

CurrentAudit current_audit(const NaiveSplit& split) {
    CurrentAudit a;
    a.T = split.T;
    const double R = 1.0 - a.T;
    a.one_channel = R < 1e-14;
    a.inc1 = std::norm(split.psi1_left_in);
    a.transmitted = std::norm(split.psi1_right_out);
    a.inc2 = std::norm(split.psi2_left_in);
    a.reflected = std::norm(split.psi2_left_out);
    a.mismatch_tr = a.transmitted - a.inc1;
    a.mismatch_ref = a.reflected - a.inc2;
    return a;
}

} // namespace dbt
