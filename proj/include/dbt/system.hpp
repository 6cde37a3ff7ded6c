#ifndef DBT_SYSTEM_HPP
#define DBT_SYSTEM_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dbt {

using cplx = std::complex<double>;

namespace consts {
// nm / eV / ps unit system
inline constexpr double hbar_eV_ps = 6.582119569e-4;
inline constexpr double me_eV_ps2_nm2 = 5.68563007e-6;
} // namespace consts

/// Symmetric system of two identical rectangular barriers of height v0 and
/// width d separated by a gap L, left edge at a1.  Default mass/hbar give
/// reduced units (hbar = 1, m = 1/2, so E = k^2).
struct BarrierSystem {
    double v0 = 1.0;   // barrier height, may be negative (well)
    double d = 1.0;    // single barrier width
    double gap = 0.0;  // inter-barrier distance L
    double a1 = 1.0;   // left edge
    double mass = 0.5;
    double hbar = 1.0;

    BarrierSystem() = default;
    BarrierSystem(double v0_, double d_, double gap_, double a1_,
                  double mass_ = 0.5, double hbar_ = 1.0)
        : v0(v0_), d(d_), gap(gap_), a1(a1_), mass(mass_), hbar(hbar_) {
        if (d <= 0.0) throw std::invalid_argument("barrier width must be positive");
        if (gap < 0.0) throw std::invalid_argument("gap must be non-negative");
        if (a1 <= 0.0) throw std::invalid_argument("left edge must be positive");
        if (v0 == 0.0) throw std::invalid_argument("barrier height must be nonzero");
        if (mass <= 0.0 || hbar <= 0.0) throw std::invalid_argument("bad particle constants");
    }

    double b1() const { return a1 + d; }
    double a2() const { return a1 + d + gap; }
    double b2() const { return a1 + 2.0 * d + gap; }
    double width() const { return 2.0 * d + gap; }          // D
    double xc() const { return a1 + d + 0.5 * gap; }        // midpoint
    double kappa0sq() const { return 2.0 * mass * v0 / (hbar * hbar); } // signed
    double kappa0() const { return std::sqrt(std::abs(kappa0sq())); }
};

/// One point of the wavenumber axis with derived energy and decay constant.
/// kappa is real for E < V0 and purely imaginary for E > V0.
struct WaveNumberPoint {
    double k = 0.0;
    double E = 0.0;
    cplx kappa;        // sqrt(2m(V0-E))/hbar
    double kappa_sq = 0.0; // signed real kappa^2
    double kappa0 = 0.0;

    WaveNumberPoint() = default;
    WaveNumberPoint(const BarrierSystem& sys, double k_) : k(k_) {
        if (k <= 0.0) throw std::domain_error("wavenumber must be positive");
        E = sys.hbar * sys.hbar * k * k / (2.0 * sys.mass);
        kappa_sq = 2.0 * sys.mass * (sys.v0 - E) / (sys.hbar * sys.hbar);
        kappa = std::sqrt(cplx(kappa_sq, 0.0));
        kappa0 = sys.kappa0();
    }
};

} // namespace dbt

#endif
