// dbarrier: command-line front end for the double-barrier scattering library.
// Subcommands: times-sweep, packet-run, demo-superposition, resonances.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbt/chartimes.hpp"
#include "dbt/superposition.hpp"
#include "dbt/wavepacket.hpp"

using json = nlohmann::json;
using namespace dbt;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Range {
    double lo = 0.0, hi = 0.0;
    std::size_t n = 1;
};

Range parse_range(const std::string& s) {
    Range r;
    char c1 = 0, c2 = 0;
    long long n = 0;
    std::istringstream is(s);
    if (!(is >> r.lo >> c1 >> r.hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 ||
        !is.eof())
        throw std::invalid_argument("bad range '" + s + "', expected lo:hi:n");
    r.n = static_cast<std::size_t>(n);
    if (r.n > 1 && r.hi <= r.lo)
        throw std::invalid_argument("bad range '" + s + "', need hi > lo for n > 1");
    return r;
}

double range_at(const Range& r, std::size_t i) {
    if (r.n == 1) return r.lo;
    return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.n - 1);
}

// A row is an ordered list of named cells; ordering is shared by CSV and JSON.
struct Cell {
    std::string name;
    double value = 0.0;
    bool is_flag = false; // emitted as 0/1 in CSV, bool in JSON
};
using Row = std::vector<Cell>;

struct Table {
    std::vector<std::string> meta; // '#'-prefixed lines in CSV, dropped in JSON
    std::vector<Row> rows;
};

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        for (const auto& m : t.meta) os << "# " << m << "\n";
        if (!t.rows.empty()) {
            for (std::size_t j = 0; j < t.rows[0].size(); ++j)
                os << (j ? "," : "") << t.rows[0][j].name;
            os << "\n";
        }
        for (const auto& row : t.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                os << (j ? "," : "");
                if (row[j].is_flag)
                    os << (row[j].value != 0.0 ? 1 : 0);
                else
                    os << num17(row[j].value);
            }
            os << "\n";
        }
    } else {
        json arr = json::array();
        for (const auto& row : t.rows) {
            json obj = json::object();
            for (const auto& cell : row) {
                if (cell.is_flag)
                    obj[cell.name] = cell.value != 0.0;
                else
                    obj[cell.name] = cell.value;
            }
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << "\n";
    }
}

void emit(const Table& t, const std::string& format, const std::string& out) {
    if (out.empty() || out == "-") {
        write_table(t, format, std::cout);
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file '" + out + "'");
    write_table(t, format, os);
}

struct CommonOpts {
    double v0 = 1.0, d = 1.0, gap = 0.0, a1 = 1.0;
    double mass = 0.0; // SI only, units of m_e; reduced units fix m = 1/2
    std::string units = "reduced";
    std::string format = "csv";
    std::string out;
    std::string config;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--v0", o.v0, "barrier height (reduced: kappa0^2 units; si: eV)");
    cmd->add_option("--d", o.d, "single barrier width (reduced: 1/kappa0; si: nm)");
    cmd->add_option("--gap", o.gap, "inter-barrier distance L");
    cmd->add_option("--a1", o.a1, "left edge of the first barrier");
    cmd->add_option("--mass", o.mass, "particle mass in units of m_e (si units only)");
    cmd->add_option("--units", o.units, "unit system: reduced | si")
        ->check(CLI::IsMember({"reduced", "si"}));
    cmd->add_option("--format", o.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--config", o.config, "JSON config file mirroring the flags");
}

// Config file fills any flag not given on the command line.
void apply_config(CLI::App* cmd, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot read config file '" + path + "'");
    json doc;
    try {
        is >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        CLI::Option* opt = cmd->get_option_no_throw("--" + it.key());
        if (!opt) throw std::invalid_argument("config: unknown key '" + it.key() + "'");
        if (opt->count() > 0) continue; // command line wins
        std::string val;
        if (it.value().is_string())
            val = it.value().get<std::string>();
        else
            val = it.value().dump();
        opt->add_result(val);
        opt->run_callback();
    }
}

BarrierSystem make_system(const CommonOpts& o) {
    if (o.units == "si") {
        if (o.mass <= 0.0)
            throw std::invalid_argument("si units require --mass > 0 (units of m_e)");
        return BarrierSystem(o.v0, o.d, o.gap, o.a1, o.mass * consts::me_eV_ps2_nm2,
                             consts::hbar_eV_ps);
    }
    return BarrierSystem(o.v0, o.d, o.gap, o.a1);
}

std::vector<std::string> system_meta(const CommonOpts& o, const BarrierSystem& sys) {
    std::vector<std::string> m;
    m.push_back(std::string("dbarrier ") + kVersion);
    m.push_back("units = " + o.units);
    m.push_back("v0 = " + num17(o.v0) + ", d = " + num17(o.d) + ", gap = " +
                num17(o.gap) + ", a1 = " + num17(o.a1));
    m.push_back("mass = " + num17(sys.mass) + ", hbar = " + num17(sys.hbar) +
                ", kappa0 = " + num17(sys.kappa0()));
    return m;
}

// ------------------------------------------------------------------ times-sweep
int cmd_times_sweep(const CommonOpts& o, const std::string& sweep,
                    const std::string& range_s, double kbar) {
    const BarrierSystem base = make_system(o);
    const Range r = parse_range(range_s);
    const bool k_sweep = sweep == "k";
    if (!k_sweep && kbar <= 0.0)
        throw std::invalid_argument("L sweep requires --kbar > 0 (fixed wave number)");

    std::vector<Row> rows(r.n);
    auto fill = [&](std::size_t i) {
        const double v = range_at(r, i);
        const BarrierSystem sys =
            k_sweep ? base : BarrierSystem(o.v0, o.d, v, o.a1, base.mass, base.hbar);
        const double k = k_sweep ? v : kbar;
        const WaveNumberPoint kpt(sys, k);
        const double t0 = tau0(sys);
        const GroupTimes g = phase_and_group_times(sys, kpt);
        const auto [tr, ref] = dwell_times(sys, kpt);
        const TotalDwell tot = buttiker_dwell(sys, kpt);
        const TwoBarrierParams two = compose_two_barrier(sys, kpt);
        rows[i] = Row{{sweep, v},
                      {"tau_dwell_tr", tr.total / t0},
                      {"tau_dwell", tot.total / t0},
                      {"tau_ph", g.tau_ph / t0},
                      {"tau_as", g.tau_as / t0},
                      {"t_dep", g.t_dep / t0},
                      {"tau_dwell_ref", ref.total / t0},
                      {"tau_free", tau_free(sys, k) / t0},
                      {"T_two", two.T_two},
                      {"near_resonance", g.near_resonance ? 1.0 : 0.0, true}};
    };
    // independent rows: chunked across a few workers, written in sweep order
    const std::size_t nw = std::min<std::size_t>(4, r.n);
    std::vector<std::future<void>> fs;
    for (std::size_t w = 0; w < nw; ++w)
        fs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < r.n; i += nw) fill(i);
        }));
    for (auto& f : fs) f.get();

    Table t;
    t.meta = system_meta(o, base);
    t.meta.push_back("command = times-sweep, sweep = " + sweep + ", range = " + range_s +
                     (k_sweep ? "" : ", kbar = " + num17(kbar)));
    t.meta.push_back("time columns normalized by tau0 = m D / hbar kappa0 = " +
                     num17(tau0(base)));
    t.rows = std::move(rows);
    emit(t, o.format, o.out);
    return 0;
}

// ------------------------------------------------------------------ packet-run
int cmd_packet_run(const CommonOpts& o, double l0, double kbar,
                   const std::string& trange_s, std::size_t nx, std::size_t nk) {
    const BarrierSystem sys = make_system(o);
    const Range tr = parse_range(trange_s);
    const GaussianSpectrum spec = build_spectrum(l0, kbar, nk);

    const double v = sys.hbar * kbar / sys.mass;
    const double x_lo = -8.0 * l0;
    const double x_hi = sys.b2() + v * tr.hi + 8.0 * l0;
    const PacketSimulator sim(sys, spec, x_lo, x_hi, nx);

    const CmTrajectory traj = sim.cm_track(tr.lo, tr.hi, tr.n);
    const NormTrace nt = sim.norm_trace(tr.lo, tr.hi, tr.n);
    const LocalTimes lt = local_group_times(sim, traj);
    const AsymptoticTimes at = asymptotic_group_times(sim);

    Table t;
    t.meta = system_meta(o, sys);
    t.meta.push_back("command = packet-run, l0 = " + num17(l0) + ", kbar = " +
                     num17(kbar) + ", t-range = " + trange_s);
    t.meta.push_back("x window = [" + num17(x_lo) + ", " + num17(x_hi) + "], nx = " +
                     std::to_string(nx) + ", nk = " + std::to_string(nk));
    t.meta.push_back("summary: tau_loc_tr = " + num17(lt.tau_loc_tr) + ", tau_as_tr = " +
                     num17(at.tau_as_tr) + ", t_dep = " + num17(at.t_dep) +
                     ", t_arr = " + num17(lt.t_exit) + ", tau_free = " +
                     num17(at.tau_free));
    t.meta.push_back("summary: T_as = " + num17(sim.T_as()) + ", R_as = " +
                     num17(sim.R_as()) + ", entered = " + (lt.entered ? "1" : "0") +
                     ", exited = " + (lt.exited ? "1" : "0"));
    for (std::size_t i = 0; i < traj.t.size(); ++i)
        t.rows.push_back(Row{{"t", traj.t[i]},
                             {"xbar_tot", traj.xbar_tot[i]},
                             {"xbar_tr", traj.xbar_tr[i]},
                             {"xbar_ref", traj.xbar_ref[i]},
                             {"xbar_free", v * traj.t[i]},
                             {"T", nt.T[i]},
                             {"R", nt.R[i]}});
    emit(t, o.format, o.out);

    std::cerr << "tau_loc_tr = " << num17(lt.tau_loc_tr)
              << "  tau_as_tr = " << num17(at.tau_as_tr)
              << "  t_dep = " << num17(at.t_dep) << "  t_arr = " << num17(lt.t_exit)
              << "  tau_free = " << num17(at.tau_free) << "\n";
    return 0;
}

// --------------------------------------------------------- demo-superposition
int cmd_demo_superposition(const CommonOpts& o, double kbar, double Tcoef) {
    NaiveSplit split;
    Table t;
    if (Tcoef > 0.0) {
        if (Tcoef > 1.0) throw std::invalid_argument("--t-coef must lie in (0, 1]");
        const cplx i(0.0, 1.0);
        const cplx q = std::exp(i * 0.4) / std::sqrt(Tcoef);
        const cplx p = std::sqrt((1.0 - Tcoef) / Tcoef) * std::exp(i * (-1.1));
        split = naive_split(q, p, kbar > 0.0 ? kbar : 1.0);
        t.meta.push_back(std::string("dbarrier ") + kVersion);
        t.meta.push_back("command = demo-superposition, abstract barrier with T = " +
                         num17(Tcoef));
    } else {
        if (kbar <= 0.0)
            throw std::invalid_argument("demo-superposition needs --kbar or --t-coef");
        const BarrierSystem sys = make_system(o);
        const WaveNumberPoint kpt(sys, kbar);
        const OneBarrierParams par = one_barrier_params(sys, kpt);
        const TransferMatrix y1 = transfer_matrix(par, sys.a1, sys.b1(), kbar);
        const TransferMatrix y2 = transfer_matrix(par, sys.a2(), sys.b2(), kbar);
        split = naive_split(y1.q * y2.q + y1.p * std::conj(y2.p),
                            y1.q * y2.p + y1.p * std::conj(y2.q), kbar);
        t.meta = system_meta(o, sys);
        t.meta.push_back("command = demo-superposition, kbar = " + num17(kbar));
    }
    const CurrentAudit a = current_audit(split);
    t.meta.push_back("currents in units of hbar k / m");
    if (a.one_channel) {
        t.meta.push_back("one-channel; superposition principle unaffected");
        std::cerr << "one-channel; superposition principle unaffected\n";
    } else {
        std::cerr << "channel mismatch: transmitted " << num17(a.transmitted)
                  << " vs incident-of-psi1 " << num17(a.inc1) << " -> T(1-T) = "
                  << num17(a.mismatch_tr) << "\n";
    }
    t.rows.push_back(Row{{"T", a.T},
                         {"one_channel", a.one_channel ? 1.0 : 0.0, true},
                         {"inc1", a.inc1},
                         {"transmitted", a.transmitted},
                         {"inc2", a.inc2},
                         {"reflected", a.reflected},
                         {"mismatch_tr", a.mismatch_tr},
                         {"mismatch_ref", a.mismatch_ref},
                         {"j1_left", split.j1_left},
                         {"j1_right", split.j1_right},
                         {"j2_left", split.j2_left},
                         {"j2_right", split.j2_right}});
    emit(t, o.format, o.out);
    return 0;
}

// ------------------------------------------------------------------ resonances
int cmd_resonances(const CommonOpts& o, const std::string& range_s) {
    const BarrierSystem sys = make_system(o);
    double lo = 0.02 * sys.kappa0(), hi = 3.0 * sys.kappa0();
    if (!range_s.empty()) {
        const Range r = parse_range(range_s);
        lo = r.lo;
        hi = r.hi;
    }
    const std::vector<double> roots = find_resonances(sys, lo, hi);
    Table t;
    t.meta = system_meta(o, sys);
    t.meta.push_back("command = resonances, k in [" + num17(lo) + ", " + num17(hi) + "]");
    t.meta.push_back(std::to_string(roots.size()) + " resonance(s): T_two = 1");
    int idx = 1;
    for (double k : roots) {
        const WaveNumberPoint kpt(sys, k);
        t.rows.push_back(Row{{"index", static_cast<double>(idx++)},
                             {"k", k},
                             {"k_over_kappa0", k / sys.kappa0()},
                             {"E", kpt.E},
                             {"T_two", compose_two_barrier(sys, kpt).T_two}});
    }
    emit(t, o.format, o.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-barrier scattering times, wave packets, and demos"};
    app.require_subcommand(1);

    CommonOpts ts_o, pr_o, ds_o, rs_o;
    std::string sweep = "k", ts_range = "0.1:3:100";
    double ts_kbar = 0.0;
    CLI::App* ts = app.add_subcommand("times-sweep",
                                      "characteristic times along a k or L sweep");
    add_common(ts, ts_o);
    ts->add_option("--sweep", sweep, "sweep variable: k | L")
        ->check(CLI::IsMember({"k", "L"}));
    ts->add_option("--range", ts_range, "sweep range lo:hi:n");
    ts->add_option("--kbar", ts_kbar, "fixed wave number for L sweeps");

    double pr_l0 = 10.0, pr_kbar = 1.0;
    std::string pr_trange = "0:50:101";
    std::size_t pr_nx = 4097, pr_nk = 2048;
    CLI::App* pr = app.add_subcommand("packet-run",
                                      "Gaussian packet trajectory and norm trace");
    add_common(pr, pr_o);
    pr->add_option("--l0", pr_l0, "packet half-width parameter");
    pr->add_option("--kbar", pr_kbar, "spectrum center wave number");
    pr->add_option("--t-range", pr_trange, "time samples lo:hi:n");
    pr->add_option("--nx", pr_nx, "spatial grid points");
    pr->add_option("--nk", pr_nk, "spectral grid points");

    double ds_kbar = 0.0, ds_T = 0.0;
    CLI::App* ds = app.add_subcommand("demo-superposition",
                                      "current audit of the naive two-solution split");
    add_common(ds, ds_o);
    ds->add_option("--kbar", ds_kbar, "wave number for the configured system");
    ds->add_option("--t-coef", ds_T, "audit an abstract barrier with this T instead");

    std::string rs_range;
    CLI::App* rs = app.add_subcommand("resonances", "resonance wave numbers (T_two = 1)");
    add_common(rs, rs_o);
    rs->add_option("--range", rs_range, "search window lo:hi:n (n ignored)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto [cmd, o] : {std::pair{ts, &ts_o}, {pr, &pr_o}, {ds, &ds_o}, {rs, &rs_o}})
            if (cmd->parsed() && !o->config.empty()) apply_config(cmd, o->config);
        if (ts->parsed()) return cmd_times_sweep(ts_o, sweep, ts_range, ts_kbar);
        if (pr->parsed()) return cmd_packet_run(pr_o, pr_l0, pr_kbar, pr_trange, pr_nx, pr_nk);
        if (ds->parsed()) return cmd_demo_superposition(ds_o, ds_kbar, ds_T);
        if (rs->parsed()) return cmd_resonances(rs_o, rs_range);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
