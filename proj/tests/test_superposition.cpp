#include <cmath>

#include <doctest.h>

#include "dbt/scatter.hpp"
#include "dbt/superposition.hpp"

using namespace dbt;

namespace {

// abstract unimodular pair with transmission T and arbitrary phases
std::pair<cplx, cplx> qp_of(double T, double phi_q = 0.4, double phi_p = -1.1) {
    const cplx i(0.0, 1.0);
    return {std::exp(i * phi_q) / std::sqrt(T),
            std::sqrt((1.0 - T) / T) * std::exp(i * phi_p)};
}

} // namespace

TEST_SUITE("superposition") {

TEST_CASE("coefficient identity: the two solutions sum to the standard one") {
    for (double T : {0.1, 0.5, 0.9}) {
        const auto [q, p] = qp_of(T);
        const NaiveSplit s = naive_split(q, p, 0.8);
        // x <= a: incident 1, outgoing p*/q; x >= b: outgoing 1/q, nothing incoming
        CHECK(std::abs(s.psi1_left_in + s.psi2_left_in - 1.0) < 1e-14);
        CHECK(std::abs(s.psi2_left_out - std::conj(p) / q) < 1e-14);
        CHECK(std::abs(s.psi1_right_out - 1.0 / q) < 1e-14);
        CHECK(std::abs(s.psi1_right_in + s.psi2_right_in) < 1e-14);
    }
}

TEST_CASE("each solution separately conserves current") {
    for (double T : {0.1, 0.5, 0.9, 0.37}) {
        const auto [q, p] = qp_of(T);
        const NaiveSplit s = naive_split(q, p, 0.8);
        CHECK(std::abs(s.j1_left - s.j1_right) < 1e-12);
        CHECK(std::abs(s.j2_left - s.j2_right) < 1e-12);
        CHECK(s.j1_left == doctest::Approx(T * T).epsilon(1e-12));
        CHECK(s.j2_left == doctest::Approx(-(1.0 - T) * T).epsilon(1e-12));
    }
}

TEST_CASE("channel currents mismatch by exactly T(1-T)") {
    for (double T : {0.1, 0.5, 0.9}) {
        const auto [q, p] = qp_of(T);
        const CurrentAudit a = current_audit(naive_split(q, p, 0.8));
        CHECK(!a.one_channel);
        CHECK(a.inc1 == doctest::Approx(T * T).epsilon(1e-12));
        CHECK(a.transmitted == doctest::Approx(T).epsilon(1e-12));
        CHECK(a.mismatch_tr == doctest::Approx(T * (1.0 - T)).epsilon(1e-12));
        CHECK(a.mismatch_ref == doctest::Approx((1.0 - T) * T).epsilon(1e-12));
        CHECK(a.mismatch_tr > 0.0);
    }
}

TEST_CASE("transparent barrier leaves nothing to audit") {
    const NaiveSplit s = naive_split(1.0, 0.0, 0.8);
    CHECK(std::abs(s.psi2_left_in) < 1e-14);
    CHECK(std::abs(s.psi2_right_in) < 1e-14);
    const CurrentAudit a = current_audit(s);
    CHECK(a.one_channel);
    CHECK(std::abs(a.mismatch_tr) < 1e-14);
}

TEST_CASE("rejects a non-unimodular pair") {
    CHECK_THROWS_AS(naive_split(cplx(1.2, 0.0), cplx(0.9, 0.0), 0.8),
                    std::invalid_argument);
}

TEST_CASE("mismatch is strictly positive throughout 0 < T < 1") {
    for (int i = 1; i < 40; ++i) {
        const double T = static_cast<double>(i) / 40.0;
        const auto [q, p] = qp_of(T);
        const CurrentAudit a = current_audit(naive_split(q, p, 1.1));
        CHECK(a.mismatch_tr > 0.0);
    }
}

TEST_CASE("the audit applies to the concrete two-barrier system") {
    const BarrierSystem sys(1.0, 2.0, 1.3, 1.0);
    const double k = 0.8;
    const WaveNumberPoint kpt(sys, k);
    const OneBarrierParams par = one_barrier_params(sys, kpt);
    const TransferMatrix y1 = transfer_matrix(par, sys.a1, sys.b1(), k);
    const TransferMatrix y2 = transfer_matrix(par, sys.a2(), sys.b2(), k);
    const cplx q_two = y1.q * y2.q + y1.p * std::conj(y2.p);
    const cplx p_two = y1.q * y2.p + y1.p * std::conj(y2.q);
    const CurrentAudit a = current_audit(naive_split(q_two, p_two, k));
    const TwoBarrierParams two = compose_two_barrier(sys, kpt);
    CHECK(a.T == doctest::Approx(two.T_two).epsilon(1e-10));
    CHECK(a.mismatch_tr ==
          doctest::Approx(two.T_two * (1.0 - two.T_two)).epsilon(1e-10));
}

} // TEST_SUITE
