#include "dbt/wavepacket.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dbt/chartimes.hpp"

namespace dbt {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

double nan_val() { return std::numeric_limits<double>::quiet_NaN(); }

// least-squares line y = a + b x; returns {a, b}
std::pair<double, double> line_fit(const std::vector<double>& x,
                                   const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    const double b = (n * sxy - sx * sy) / den;
    const double a = (sy - b * sx) / n;
    return {a, b};
}
} // namespace

GaussianSpectrum build_spectrum(double l0, double kbar, std::size_t n) {
    if (l0 <= 0.0 || kbar <= 0.0) throw std::invalid_argument("l0 and kbar must be positive");
    // quasi-one-sided spectrum; below this the clipped negative-k mass matters
    if (l0 * kbar < 2.5)
        throw std::invalid_argument("spectrum too wide: l0*kbar must be >= 2.5");
    if (n < 1024) n = 1024;

    GaussianSpectrum s;
    s.l0 = l0;
    s.kbar = kbar;
    const double hi = kbar + 8.0 / l0;
    const double lo = std::max(kbar - 8.0 / l0, 1e-9 * kbar);
    s.k.resize(n);
    s.amp.resize(n);
    s.dk = (hi - lo) / static_cast<double>(n - 1);
    const double c = std::pow(2.0 * l0 * l0 / M_PI, 0.25);
    double nrm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        s.k[j] = lo + s.dk * static_cast<double>(j);
        s.amp[j] = c * std::exp(-l0 * l0 * (s.k[j] - kbar) * (s.k[j] - kbar));
        const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        nrm += w * s.amp[j] * s.amp[j] * s.dk;
    }
    const double scale = 1.0 / std::sqrt(nrm);
    for (double& a : s.amp) a *= scale;
    return s;
}

PacketSimulator::PacketSimulator(const BarrierSystem& sys, const GaussianSpectrum& spec,
                                 double x_lo, double x_hi, std::size_t nx)
    : sys_(sys), spec_(spec) {
    if (x_hi <= x_lo) throw std::invalid_argument("bad x window");
    if (nx % 2 == 0) ++nx; // Simpson needs an odd sample count
    const std::size_t nk = spec_.k.size();

    x_.resize(nx);
    wx_.resize(static_cast<Eigen::Index>(nx));
    const double dx = (x_hi - x_lo) / static_cast<double>(nx - 1);
    for (std::size_t i = 0; i < nx; ++i) {
        x_[i] = x_lo + dx * static_cast<double>(i);
        double w;
        if (i == 0 || i == nx - 1) w = 1.0;
        else if (i % 2 == 1) w = 4.0;
        else w = 2.0;
        wx_[static_cast<Eigen::Index>(i)] = w * dx / 3.0;
    }

    Mtot_.resize(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(nk));
    Mref_.resize(static_cast<Eigen::Index>(nx), static_cast<Eigen::Index>(nk));
    E_.resize(static_cast<Eigen::Index>(nk));
    base_.resize(static_cast<Eigen::Index>(nk));
    vL_.resize(static_cast<Eigen::Index>(nk));
    dL_.resize(static_cast<Eigen::Index>(nk));
    vR_.resize(static_cast<Eigen::Index>(nk));
    dR_.resize(static_cast<Eigen::Index>(nk));
    Ttwo_.resize(nk);
    Jp2_.resize(nk);
    lamp_.resize(nk);

    for (std::size_t j = 0; j < nk; ++j) {
        const double k = spec_.k[j];
        const WaveNumberPoint kpt(sys_, k);
        const StationaryField f = total_field(sys_, kpt);
        const SwfField w = ref_field(sys_, kpt, f);
        const TwoBarrierParams two = compose_two_barrier(sys_, kpt);
        const DerivBundle der = derivatives(sys_, kpt);
        const auto jc = static_cast<Eigen::Index>(j);
        for (std::size_t i = 0; i < nx; ++i) {
            const auto ic = static_cast<Eigen::Index>(i);
            Mtot_(ic, jc) = eval_total(f, sys_, kpt, x_[i]);
            Mref_(ic, jc) = eval_swf(Part::ref, sys_, kpt, w, f, x_[i]);
        }
        E_[jc] = kpt.E;
        const double trap = (j == 0 || j == nk - 1) ? 0.5 : 1.0;
        base_[jc] = spec_.amp[j] * trap * spec_.dk / std::sqrt(kTwoPi);
        // psi_tr value/derivative at the midpoint, one-sided
        vL_[jc] = f.Bgap;
        vR_[jc] = f.Bgap;
        dR_[jc] = k * f.Agap;
        dL_[jc] = k * (f.Agap - w.a_ref_gap);
        Ttwo_[j] = two.T_two;
        Jp2_[j] = der.J_two_p;
        lamp_[j] = der.lambda_p;
    }
}

Eigen::VectorXcd PacketSimulator::phases(double t) const {
    const cplx mi(0.0, -1.0);
    Eigen::VectorXcd ph(base_.size());
    for (Eigen::Index j = 0; j < base_.size(); ++j)
        ph[j] = base_[j] * std::exp(mi * (E_[j] * t / sys_.hbar));
    return ph;
}

double PacketSimulator::norm(const Eigen::VectorXcd& psi) const {
    return (wx_.array() * psi.array().abs2()).sum();
}

double PacketSimulator::xbar(const Eigen::VectorXcd& psi) const {
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const double w = wx_[i] * std::norm(psi[i]);
        num += w * x_[static_cast<std::size_t>(i)];
        den += w;
    }
    return (den > 1e-300) ? num / den : nan_val();
}

PacketState PacketSimulator::state(double t) const {
    const Eigen::VectorXcd ph = phases(t);
    PacketState s;
    s.t = t;
    s.tot = Mtot_ * ph;
    s.ref = Mref_ * ph;
    s.tr = s.tot - s.ref;
    s.norm_tot = norm(s.tot);
    s.norm_tr = norm(s.tr);
    s.norm_ref = norm(s.ref);
    return s;
}

CmTrajectory PacketSimulator::cm_track(double t0, double t1, std::size_t nt) const {
    if (nt < 2) throw std::invalid_argument("need at least two track samples");
    CmTrajectory traj;
    const double dt = (t1 - t0) / static_cast<double>(nt - 1);
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = t0 + dt * static_cast<double>(i);
        const PacketState s = state(t);
        traj.t.push_back(t);
        traj.xbar_tot.push_back(xbar(s.tot));
        traj.xbar_tr.push_back(xbar(s.tr));
        traj.xbar_ref.push_back(s.norm_ref > 1e-12 ? xbar(s.ref) : nan_val());
        traj.norm_tr.push_back(s.norm_tr);
        traj.norm_ref.push_back(s.norm_ref);
    }
    return traj;
}

NormTrace PacketSimulator::norm_trace(double t0, double t1, std::size_t nt) const {
    if (nt < 2) throw std::invalid_argument("need at least two trace samples");
    NormTrace tr;
    const double dt = (t1 - t0) / static_cast<double>(nt - 1);
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = t0 + dt * static_cast<double>(i);
        const PacketState s = state(t);
        const auto [il, ir] = xc_currents(t);
        tr.t.push_back(t);
        tr.T.push_back(s.norm_tr);
        tr.R.push_back(s.norm_ref);
        tr.imbalance.push_back(ir - il);
    }
    return tr;
}

std::pair<double, double> PacketSimulator::xc_currents(double t) const {
    const Eigen::VectorXcd ph = phases(t);
    const cplx pL = vL_.transpose() * ph;
    const cplx gL = dL_.transpose() * ph;
    const cplx pR = vR_.transpose() * ph;
    const cplx gR = dR_.transpose() * ph;
    const double pref = sys_.hbar / sys_.mass;
    return {pref * std::imag(std::conj(pL) * gL), pref * std::imag(std::conj(pR) * gR)};
}

double PacketSimulator::T_as() const {
    double s = 0.0;
    for (std::size_t j = 0; j < spec_.k.size(); ++j) {
        const double trap = (j == 0 || j == spec_.k.size() - 1) ? 0.5 : 1.0;
        s += trap * Ttwo_[j] * spec_.amp[j] * spec_.amp[j] * spec_.dk;
    }
    return s;
}

double PacketSimulator::R_as() const { return 1.0 - T_as(); }

double PacketSimulator::kbar_weighted(Part which) const {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < spec_.k.size(); ++j) {
        const double trap = (j == 0 || j == spec_.k.size() - 1) ? 0.5 : 1.0;
        const double cw = (which == Part::tr) ? Ttwo_[j] : 1.0 - Ttwo_[j];
        const double w = trap * cw * spec_.amp[j] * spec_.amp[j];
        num += w * spec_.k[j];
        den += w;
    }
    return num / den;
}

double PacketSimulator::tau_as_spectral(Part which) const {
    double jnum = 0.0, lnum = 0.0, den = 0.0;
    for (std::size_t j = 0; j < spec_.k.size(); ++j) {
        const double trap = (j == 0 || j == spec_.k.size() - 1) ? 0.5 : 1.0;
        const double cw = (which == Part::tr) ? Ttwo_[j] : 1.0 - Ttwo_[j];
        const double w = trap * cw * spec_.amp[j] * spec_.amp[j];
        jnum += w * Jp2_[j];
        lnum += w * lamp_[j];
        den += w;
    }
    return sys_.mass / (sys_.hbar * kbar_weighted(which)) * (jnum - lnum) / den;
}

double PacketSimulator::t_dep_spectral(Part which) const {
    double lnum = 0.0, den = 0.0;
    for (std::size_t j = 0; j < spec_.k.size(); ++j) {
        const double trap = (j == 0 || j == spec_.k.size() - 1) ? 0.5 : 1.0;
        const double cw = (which == Part::tr) ? Ttwo_[j] : 1.0 - Ttwo_[j];
        const double w = trap * cw * spec_.amp[j] * spec_.amp[j];
        lnum += w * lamp_[j];
        den += w;
    }
    return sys_.mass / (sys_.hbar * kbar_weighted(which)) * lnum / den;
}

double PacketSimulator::x_start_spectral(Part which) const {
    double lnum = 0.0, den = 0.0;
    for (std::size_t j = 0; j < spec_.k.size(); ++j) {
        const double trap = (j == 0 || j == spec_.k.size() - 1) ? 0.5 : 1.0;
        const double cw = (which == Part::tr) ? Ttwo_[j] : 1.0 - Ttwo_[j];
        const double w = trap * cw * spec_.amp[j] * spec_.amp[j];
        lnum += w * lamp_[j];
        den += w;
    }
    return -lnum / den;
}

namespace {
// refine a bracketed crossing of xbar_tr(t) = target by bisection
double refine_crossing(const PacketSimulator& sim, double ta, double tb,
                       double fa, double target, double tol) {
    while (tb - ta > tol) {
        const double tm = 0.5 * (ta + tb);
        const double fm = sim.xbar(sim.state(tm).tr) - target;
        if ((fa <= 0.0) == (fm <= 0.0)) {
            ta = tm;
            fa = fm;
        } else {
            tb = tm;
        }
    }
    return 0.5 * (ta + tb);
}
} // namespace

LocalTimes local_group_times(const PacketSimulator& sim, const CmTrajectory& traj) {
    const BarrierSystem& sys = sim.system();
    const double tol = 1e-6 * tau0(sys);
    LocalTimes lt;

    auto find_up = [&](double target, std::size_t from, std::size_t& idx) -> bool {
        for (std::size_t i = from; i + 1 < traj.t.size(); ++i) {
            if (traj.xbar_tr[i] <= target && traj.xbar_tr[i + 1] > target) {
                idx = i;
                return true;
            }
        }
        return false;
    };

    std::size_t ie = 0;
    if (find_up(sys.a1, 0, ie)) {
        lt.entered = true;
        lt.t_entry = refine_crossing(sim, traj.t[ie], traj.t[ie + 1],
                                     traj.xbar_tr[ie] - sys.a1, sys.a1, tol);
        std::size_t ix = 0;
        if (find_up(sys.b2(), ie, ix)) {
            lt.exited = true;
            lt.t_exit = refine_crossing(sim, traj.t[ix], traj.t[ix + 1],
                                        traj.xbar_tr[ix] - sys.b2(), sys.b2(), tol);
            lt.tau_loc_tr = lt.t_exit - lt.t_entry;
        }
    }

    // reflection: roots of xbar_ref(t) = a1 (linear interpolation suffices)
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < traj.t.size(); ++i) {
        const double f0 = traj.xbar_ref[i] - sys.a1;
        const double f1 = traj.xbar_ref[i + 1] - sys.a1;
        if (std::isnan(f0) || std::isnan(f1)) continue;
        if ((f0 <= 0.0) != (f1 <= 0.0))
            roots.push_back(traj.t[i] + f0 / (f0 - f1) * (traj.t[i + 1] - traj.t[i]));
    }
    lt.tau_loc_ref = (roots.size() >= 2) ? roots.back() - roots.front() : 0.0;
    return lt;
}

AsymptoticTimes asymptotic_group_times(const PacketSimulator& sim) {
    AsymptoticTimes at;
    at.kbar_tr = sim.kbar_weighted(Part::tr);
    at.tau_as_tr = sim.tau_as_spectral(Part::tr);
    at.t_dep = sim.t_dep_spectral(Part::tr);
    at.tau_free = tau_free(sim.system(), sim.spectrum().kbar);
    at.ref_defined = sim.R_as() > 1e-12;
    at.tau_as_ref = at.ref_defined ? sim.tau_as_spectral(Part::ref) : 0.0;
    return at;
}

double tau_as_from_track(const PacketSimulator& sim, const CmTrajectory& traj) {
    const BarrierSystem& sys = sim.system();
    const double margin = 2.0 * sim.spectrum().l0;
    std::vector<double> ti, xi, to, xo;
    bool past_barrier = false;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const double x = traj.xbar_tr[i];
        if (!past_barrier && x < sys.a1 - margin) {
            ti.push_back(traj.t[i]);
            xi.push_back(x);
        }
        if (x > sys.b2() + margin) {
            past_barrier = true;
            to.push_back(traj.t[i]);
            xo.push_back(x);
        }
    }
    if (ti.size() < 3 || to.size() < 3) return nan_val();
    const auto [ci, vi] = line_fit(ti, xi);
    const auto [co, vo] = line_fit(to, xo);
    if (vi <= 0.0 || vo <= 0.0) return nan_val();
    return (sys.b2() - co) / vo - (sys.a1 - ci) / vi;
}

} // namespace dbt
