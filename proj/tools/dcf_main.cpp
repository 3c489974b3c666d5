#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcf/classical.hpp"
#include "dcf/output.hpp"
#include "dcf/parallel.hpp"
#include "dcf/verify.hpp"

namespace {

using namespace dcf;

constexpr double kPi = 3.14159265358979323846;

// All tunables in one place; figure-caption values are the defaults and the
// per-command code fills in the blanks that depend on the command.
struct Options {
    double B = 0.5;
    double k = 0.0;
    int eta = +1;
    std::vector<double> beta;

    double alpha_mod = 4.0;
    double phase = 0.0;
    double delta = 0.0;
    std::string phase_sweep;

    std::vector<int> levels;
    std::string grid;
    int points = 0;  // 0 = command-dependent default

    double beta_max = 0.999;
    int beta_points = 200;
    int n_max = 10;

    double alpha_max = 4.0;
    int alpha_points = 41;

    std::vector<double> vd;
    double omega = 1.0;
    double x0 = 0.0, y0 = 0.0, v0x = 0.0, v0y = 1.0;
    double time_max = 6.0 * kPi;
    int time_points = 601;

    std::string out;
    std::string format = "csv";
    bool inject_m_corruption = false;
};

struct SweepSpec {
    double lo = 0.0, hi = 0.0;
    int count = 0;
};

SweepSpec parse_sweep(const std::string& text, const char* what) {
    const auto first = text.find(':');
    const auto last = text.rfind(':');
    if (first == std::string::npos || first == last)
        throw std::invalid_argument(std::string(what) + " must have the form lo:hi:count");
    SweepSpec s;
    try {
        std::size_t used = 0;
        s.lo = std::stod(text.substr(0, first), &used);
        s.hi = std::stod(text.substr(first + 1, last - first - 1), &used);
        s.count = std::stoi(text.substr(last + 1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + text + "'");
    }
    if (s.count < 1 || (s.count == 1 && s.lo != s.hi) || s.hi < s.lo)
        throw std::invalid_argument(std::string(what) + ": bad range '" + text + "'");
    return s;
}

std::vector<double> sweep_values(const SweepSpec& s) {
    if (s.count == 1) return {s.lo};
    return linear_grid(s.lo, s.hi, s.count);
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_double(values[i]);
    }
    return out;
}

std::string join_int(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

void base_meta(OutputTable& table, const char* command, const Options& o) {
    table.meta.emplace_back("format_version", "1");
    table.meta.emplace_back("generator", "dcf");
    table.meta.emplace_back("command", command);
    table.meta.emplace_back("units", "natural: hbar = v_F = c = e = 1");
    table.meta.emplace_back("B", format_double(o.B));
    table.meta.emplace_back("omega_B", format_double(2.0 * o.B));  // omega_B = 2B
    table.meta.emplace_back("l_B", format_double(1.0 / std::sqrt(o.B)));
}

std::vector<double> resolve_grid(const Options& o, const FieldConfig& cfg, int level_hint,
                                 int default_points) {
    const int points = o.points > 0 ? o.points : default_points;
    if (!o.grid.empty()) {
        const SweepSpec s = parse_sweep(o.grid, "--grid");
        if (s.count < 2) throw std::invalid_argument("--grid needs at least 2 points");
        return linear_grid(s.lo, s.hi, s.count);
    }
    return default_grid(cfg, level_hint, points);
}

OutputTable cmd_classical(const Options& o) {
    const std::vector<double> vd_list = o.vd.empty() ? std::vector<double>{0.0, 0.5, 1.5} : o.vd;
    const std::vector<double> times = linear_grid(0.0, o.time_max, o.time_points);

    OutputTable table;
    base_meta(table, "classical", o);
    table.meta.emplace_back("omega_cyclotron", format_double(o.omega));
    table.meta.emplace_back("v0", format_double(o.v0x) + "," + format_double(o.v0y));
    table.meta.emplace_back("start", format_double(o.x0) + "," + format_double(o.y0));
    table.meta.emplace_back("v_d", join(vd_list));

    std::vector<double> col_vd, col_t, col_x, col_y, col_res;
    for (double vd : vd_list) {
        ClassicalConfig cfg;
        cfg.x0 = o.x0;
        cfg.y0 = o.y0;
        cfg.v0x = o.v0x;
        cfg.v0y = o.v0y;
        cfg.omega_B = o.omega;
        cfg.v_d = vd;
        for (double t : times) {
            const Point2 p = trajectory(cfg, t);
            col_vd.push_back(vd);
            col_t.push_back(t);
            col_x.push_back(p.x);
            col_y.push_back(p.y);
            col_res.push_back(circle_residual(cfg, t));
        }
    }
    table.add_column("v_d", std::move(col_vd));
    table.add_column("t", std::move(col_t));
    table.add_column("x", std::move(col_x));
    table.add_column("y", std::move(col_y));
    table.add_column("circle_residual", std::move(col_res));
    return table;
}

OutputTable cmd_spectrum(const Options& o) {
    const std::vector<double> betas =
        o.beta.empty() ? linear_grid(0.0, o.beta_max, o.beta_points) : o.beta;

    OutputTable table;
    base_meta(table, "spectrum", o);
    table.meta.emplace_back("k", format_double(o.k));
    table.meta.emplace_back("n_max", std::to_string(o.n_max));

    std::vector<double> col_beta, col_n, col_e;
    for (int n = 0; n <= o.n_max; ++n)
        for (double beta : betas) {
            FieldConfig cfg;
            cfg.B = o.B;
            cfg.beta = beta;
            cfg.k = o.k;
            cfg.eta = o.eta;
            col_beta.push_back(beta);
            col_n.push_back(n);
            col_e.push_back(energy(n, cfg));
        }
    table.add_column("beta", std::move(col_beta));
    table.add_column("n", std::move(col_n));
    table.add_column("energy", std::move(col_e));
    return table;
}

OutputTable density_eigen_table(const Options& o, double k_value) {
    const std::vector<double> betas =
        o.beta.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75} : o.beta;
    const std::vector<int> levels = o.levels.empty() ? std::vector<int>{0, 1, 2} : o.levels;
    const int hint = *std::max_element(levels.begin(), levels.end());

    OutputTable table;
    base_meta(table, "density", o);
    table.meta.emplace_back("mode", "eigenstate");
    table.meta.emplace_back("k", format_double(k_value));
    table.meta.emplace_back("eta", std::to_string(o.eta));
    table.meta.emplace_back("beta", join(betas));
    table.meta.emplace_back("levels", join_int(levels));

    std::vector<double> col_beta, col_n, col_x, col_rho, col_jy;
    for (double beta : betas) {
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = beta;
        cfg.k = k_value;
        cfg.eta = o.eta;
        const std::vector<double> grid = resolve_grid(o, cfg, hint, 4001);
        for (int n : levels) {
            const DensityPair d = density_eigen(n, cfg, grid);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                col_beta.push_back(beta);
                col_n.push_back(n);
                col_x.push_back(grid[i]);
                col_rho.push_back(d.rho.values[i]);
                col_jy.push_back(d.jy.values[i]);
            }
        }
    }
    table.add_column("beta", std::move(col_beta));
    table.add_column("n", std::move(col_n));
    table.add_column("x", std::move(col_x));
    table.add_column("rho", std::move(col_rho));
    table.add_column("jy", std::move(col_jy));
    return table;
}

OutputTable density_coherent_table(const Options& o, double k_value) {
    const std::vector<double> betas =
        o.beta.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75} : o.beta;
    const SweepSpec phase_spec =
        parse_sweep(o.phase_sweep.empty() ? "0:" + format_double(2.0 * kPi) + ":65"
                                          : o.phase_sweep,
                    "--phase-sweep");
    const std::vector<double> phases = sweep_values(phase_spec);
    const int order = default_trunc(o.alpha_mod);

    OutputTable table;
    base_meta(table, "density", o);
    table.meta.emplace_back("mode", "coherent");
    table.meta.emplace_back("k", format_double(k_value));
    table.meta.emplace_back("eta", std::to_string(o.eta));
    table.meta.emplace_back("beta", join(betas));
    table.meta.emplace_back("alpha_mod", format_double(o.alpha_mod));
    table.meta.emplace_back("delta", format_double(o.delta));
    table.meta.emplace_back("phase_sweep", join(phases));
    table.meta.emplace_back("phase_markers", "phi = (2n+1) pi/2, n = 0, 1, ...");
    table.meta.emplace_back("truncation_order", std::to_string(order));

    struct Slice {
        std::vector<double> x, rho, jy;
    };
    std::vector<std::vector<double>> grids(betas.size());
    for (std::size_t ib = 0; ib < betas.size(); ++ib) {
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = betas[ib];
        cfg.k = k_value;
        cfg.eta = o.eta;
        const CoherentSpec probe = make_coherent_spec(o.alpha_mod, 0.0, o.delta);
        grids[ib] = o.grid.empty() && o.points == 0
                        ? default_coherent_grid(probe, cfg, 801)
                        : resolve_grid(o, cfg, truncation_order(o.alpha_mod), 801);
    }

    const int combos = static_cast<int>(betas.size() * phases.size());
    std::vector<Slice> slices(combos);
    parallel_for(combos, [&](int idx) {
        const std::size_t ib = static_cast<std::size_t>(idx) / phases.size();
        const std::size_t ip = static_cast<std::size_t>(idx) % phases.size();
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = betas[ib];
        cfg.k = k_value;
        cfg.eta = o.eta;
        const CoherentSpec spec = make_coherent_spec(o.alpha_mod, phases[ip], o.delta);
        const DensityPair d = density_coherent(spec, cfg, grids[ib]);
        slices[idx] = Slice{grids[ib], d.rho.values, d.jy.values};
    });

    std::vector<double> col_beta, col_phase, col_x, col_rho, col_jy;
    for (int idx = 0; idx < combos; ++idx) {
        const std::size_t ib = static_cast<std::size_t>(idx) / phases.size();
        const std::size_t ip = static_cast<std::size_t>(idx) % phases.size();
        const Slice& s = slices[idx];
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            col_beta.push_back(betas[ib]);
            col_phase.push_back(phases[ip]);
            col_x.push_back(s.x[i]);
            col_rho.push_back(s.rho[i]);
            col_jy.push_back(s.jy[i]);
        }
    }
    table.add_column("beta", std::move(col_beta));
    table.add_column("phase", std::move(col_phase));
    table.add_column("x", std::move(col_x));
    table.add_column("rho", std::move(col_rho));
    table.add_column("jy", std::move(col_jy));
    return table;
}

OutputTable cmd_density(const Options& o, bool coherent_mode, bool k_given) {
    const double k_value = k_given ? o.k : (coherent_mode ? 0.0 : 1.0);
    return coherent_mode ? density_coherent_table(o, k_value) : density_eigen_table(o, k_value);
}

OutputTable cmd_hur(const Options& o) {
    const std::vector<double> betas = o.beta.empty() ? std::vector<double>{0.0, 0.5, 0.9} : o.beta;
    const std::vector<double> alphas = linear_grid(0.0, o.alpha_max, o.alpha_points);
    const SweepSpec phase_spec =
        parse_sweep(o.phase_sweep.empty() ? "0:" + format_double(2.0 * kPi) + ":25"
                                          : o.phase_sweep,
                    "--phase-sweep");
    const std::vector<double> phases = sweep_values(phase_spec);

    OutputTable table;
    base_meta(table, "hur", o);
    table.meta.emplace_back("k", format_double(o.k));
    table.meta.emplace_back("eta", std::to_string(o.eta));
    table.meta.emplace_back("beta", join(betas));
    table.meta.emplace_back("delta", format_double(o.delta));
    table.meta.emplace_back("truncation_order", std::to_string(default_trunc(o.alpha_max)));

    const int combos = static_cast<int>(betas.size() * alphas.size() * phases.size());
    struct Row {
        double vals[13];
    };
    std::vector<Row> rows(combos);
    parallel_for(combos, [&](int idx) {
        const std::size_t per_beta = alphas.size() * phases.size();
        const std::size_t ib = static_cast<std::size_t>(idx) / per_beta;
        const std::size_t ia = (static_cast<std::size_t>(idx) % per_beta) / phases.size();
        const std::size_t ip = static_cast<std::size_t>(idx) % phases.size();
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = betas[ib];
        cfg.k = o.k;
        cfg.eta = o.eta;
        const CoherentSpec spec = make_coherent_spec(alphas[ia], phases[ip], o.delta);
        const HurResult closed = hur_closed_form(spec, cfg);
        const HurResult oracle = hur_oracle(spec, cfg);
        const double dev = std::max({std::abs(closed.mean_s0 - oracle.mean_s0),
                                     std::abs(closed.mean_s1 - oracle.mean_s1),
                                     std::abs(closed.var_s0 - oracle.var_s0),
                                     std::abs(closed.var_s1 - oracle.var_s1),
                                     std::abs(closed.product - oracle.product)});
        rows[idx] = Row{{betas[ib], alphas[ia], phases[ip],
                         alphas[ia] * std::cos(phases[ip]), alphas[ia] * std::sin(phases[ip]),
                         closed.mean_s0, closed.mean_s1, std::sqrt(closed.var_s0),
                         std::sqrt(closed.var_s1), closed.product,
                         std::sqrt(oracle.var_s0), std::sqrt(oracle.var_s1), dev}};
    });

    const char* names[13] = {"beta",       "alpha_mod",  "phase",           "re_alpha",
                             "im_alpha",   "mean_zeta",  "mean_p",          "sigma_zeta",
                             "sigma_p",    "product",    "sigma_zeta_oracle", "sigma_p_oracle",
                             "route_dev"};
    for (int c = 0; c < 13; ++c) {
        std::vector<double> col(combos);
        for (int idx = 0; idx < combos; ++idx) col[idx] = rows[idx].vals[c];
        table.add_column(names[c], std::move(col));
    }
    return table;
}

OutputTable cmd_energy(const Options& o) {
    const std::vector<double> betas = o.beta.empty() ? std::vector<double>{0.0, 0.25, 0.75} : o.beta;
    const std::vector<double> axis = linear_grid(-o.alpha_max, o.alpha_max, o.alpha_points);

    OutputTable table;
    base_meta(table, "energy", o);
    table.meta.emplace_back("k", format_double(o.k));
    table.meta.emplace_back("eta", std::to_string(o.eta));
    table.meta.emplace_back("beta", join(betas));
    table.meta.emplace_back("delta", format_double(o.delta));
    table.meta.emplace_back("truncation_order",
                            std::to_string(default_trunc(std::sqrt(2.0) * o.alpha_max)));

    std::vector<double> col_beta, col_re, col_im, col_e, col_e2, col_dev;
    for (double beta : betas) {
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = beta;
        cfg.k = o.k;
        cfg.eta = o.eta;
        for (double im : axis)
            for (double re : axis) {
                const double r = std::hypot(re, im);
                const double phase = r == 0.0 ? 0.0 : std::atan2(im, re);
                const CoherentSpec spec = make_coherent_spec(r, phase, o.delta);
                const double e = mean_energy(spec, cfg);
                const double e2 = mean_energy_coefficient_route(spec, cfg);
                col_beta.push_back(beta);
                col_re.push_back(re);
                col_im.push_back(im);
                col_e.push_back(e);
                col_e2.push_back(e2);
                col_dev.push_back(std::abs(e - e2));
            }
    }
    table.add_column("beta", std::move(col_beta));
    table.add_column("re_alpha", std::move(col_re));
    table.add_column("im_alpha", std::move(col_im));
    table.add_column("energy", std::move(col_e));
    table.add_column("energy_levels", std::move(col_e2));
    table.add_column("route_dev", std::move(col_dev));
    return table;
}

OutputTable cmd_velocity(const Options& o) {
    const std::vector<double> betas =
        o.beta.empty() ? std::vector<double>{0.25, 0.5, 0.75} : o.beta;
    const std::vector<double> alphas = linear_grid(0.0, o.alpha_max, o.alpha_points);

    OutputTable table;
    base_meta(table, "velocity", o);
    table.meta.emplace_back("k", format_double(o.k));
    table.meta.emplace_back("eta", std::to_string(o.eta));
    table.meta.emplace_back("beta", join(betas));
    table.meta.emplace_back("delta", format_double(o.delta));
    table.meta.emplace_back("truncation_order", std::to_string(default_trunc(o.alpha_max)));

    std::vector<double> col_beta, col_a, col_v, col_ratio, col_fd;
    for (double beta : betas) {
        FieldConfig cfg;
        cfg.B = o.B;
        cfg.beta = beta;
        cfg.k = o.k;
        cfg.eta = o.eta;
        for (double r : alphas) {
            const CoherentSpec spec = make_coherent_spec(r, o.phase, o.delta);
            const double v = mean_velocity_coherent(spec, cfg);
            // v / v_d without dividing by beta: the shared closed form.
            const double ratio = (1.0 - 2.0 * std::exp(r * r)) / norm_denominator(spec, beta);
            const double h = 1e-5;
            FieldConfig up = cfg, down = cfg;
            up.k += h;
            down.k -= h;
            const double fd = (mean_energy(spec, up) - mean_energy(spec, down)) / (2.0 * h);
            col_beta.push_back(beta);
            col_a.push_back(r);
            col_v.push_back(v);
            col_ratio.push_back(ratio);
            col_fd.push_back(std::abs(fd - v));
        }
    }
    table.add_column("beta", std::move(col_beta));
    table.add_column("alpha_mod", std::move(col_a));
    table.add_column("vy", std::move(col_v));
    table.add_column("vy_over_vd", std::move(col_ratio));
    table.add_column("dEdk_dev", std::move(col_fd));
    return table;
}

int run_verify(const Options& o) {
    VerifyOptions vo;
    vo.corrupt_m = o.inject_m_corruption;
    const std::vector<CheckResult> results = run_all_checks(vo);

    std::ostringstream report;
    report << "dcf verification report\n";
    bool all_pass = true;
    for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        report << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(36) << r.name
               << " measured=" << format_double(r.measured)
               << " tolerance=" << format_double(r.tolerance);
        if (!r.note.empty()) report << "  [" << r.note << "]";
        report << "\n";
    }
    report << (all_pass ? "all checks passed" : "CHECKS FAILED") << " (" << results.size()
           << " checks)\n";

    std::cout << report.str();
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) throw std::runtime_error("output: cannot open " + o.out);
        file << report.str();
        file.flush();
        if (!file) throw std::runtime_error("output: write failed for " + o.out);
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Dirac-Weyl eigensystem, coherent states, and observables in crossed fields"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    app.add_option("--B", o.B, "magnetic field (sets l_B = 1/sqrt(B))")->capture_default_str();
    CLI::Option* k_opt = app.add_option("--k", o.k, "wave number along y");
    app.add_option("--eta", o.eta, "valley sign (+1 or -1)")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
    app.add_option("--beta", o.beta, "drift ratio values in [0, 1)")->delimiter(',');

    CLI::Option* alpha_opt =
        app.add_option("--alpha-mod", o.alpha_mod, "coherent |alpha|")->capture_default_str();
    app.add_option("--phase", o.phase, "coherent phase phi")->capture_default_str();
    app.add_option("--delta", o.delta, "ladder operator phase delta")->capture_default_str();
    CLI::Option* sweep_opt =
        app.add_option("--phase-sweep", o.phase_sweep, "phase sweep lo:hi:count");

    CLI::Option* levels_opt =
        app.add_option("--levels", o.levels, "eigenstate level list, e.g. 0,1,2")->delimiter(',');
    app.add_option("--grid", o.grid, "explicit grid xmin:xmax:points");
    app.add_option("--points", o.points, "grid point count for the default window");

    app.add_option("--beta-max", o.beta_max, "spectrum sweep upper beta")->capture_default_str();
    app.add_option("--beta-points", o.beta_points, "spectrum sweep point count")
        ->capture_default_str();
    app.add_option("--nmax", o.n_max, "highest level")->capture_default_str();
    app.add_option("--alpha-max", o.alpha_max, "alpha sweep bound")->capture_default_str();
    app.add_option("--alpha-points", o.alpha_points, "alpha sweep point count")
        ->capture_default_str();

    app.add_option("--vd", o.vd, "classical drift speeds")->delimiter(',');
    app.add_option("--omega", o.omega, "classical cyclotron frequency")->capture_default_str();
    app.add_option("--x0", o.x0, "classical start x")->capture_default_str();
    app.add_option("--y0", o.y0, "classical start y")->capture_default_str();
    app.add_option("--v0x", o.v0x, "classical initial velocity x")->capture_default_str();
    app.add_option("--v0y", o.v0y, "classical initial velocity y")->capture_default_str();
    app.add_option("--time-max", o.time_max, "classical sweep end time")->capture_default_str();
    app.add_option("--time-points", o.time_points, "classical sweep point count")
        ->capture_default_str();

    app.add_option("--out", o.out, "output path (stdout when omitted)");
    app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--inject-m-corruption", o.inject_m_corruption)->group("");

    for (const char* name : {"classical", "spectrum", "density", "hur", "energy", "velocity",
                             "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "verify") return run_verify(o);

        OutputTable table;
        if (command == "classical") {
            table = cmd_classical(o);
        } else if (command == "spectrum") {
            table = cmd_spectrum(o);
        } else if (command == "density") {
            const bool coherent_mode = alpha_opt->count() > 0 || sweep_opt->count() > 0;
            if (coherent_mode && levels_opt->count() > 0)
                throw std::invalid_argument(
                    "density: --levels selects eigenstate mode, --alpha-mod/--phase-sweep "
                    "select coherent mode; pass one or the other");
            table = cmd_density(o, coherent_mode, k_opt->count() > 0);
        } else if (command == "hur") {
            table = cmd_hur(o);
        } else if (command == "energy") {
            table = cmd_energy(o);
        } else {
            table = cmd_velocity(o);
        }
        write_table(table, o.out, parse_format(o.format));
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const TruncationInsufficient& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const GridSupportError& e) {
        std::cerr << "verification failure: " << e.what() << " (missing mass "
                  << format_double(e.missing) << ")\n";
        return 2;
    } catch (const SeriesMismatch& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
}
