// Command-line front end: simulate, classify, density, invariant, mc-corner,
// identity-check. Errors go to stderr as one-line JSON records; exit codes
// are 0 (success), 1 (domain error), 2 (internal error).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rankdiff/io.hpp"
#include "rankdiff/localtime.hpp"
#include "rankdiff/mc.hpp"
#include "rankdiff/model.hpp"
#include "rankdiff/stationary.hpp"

namespace rd = rankdiff;

namespace {

struct Cli {
    std::string config;
    double g = 0.0, h = 0.0;
    std::optional<double> rho, sigma;
    double x1 = 1.0, x2 = 0.0;
    double horizon = 1.0, dt = 1e-3, burn_in = 0.0;
    std::size_t paths = 1;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    double eps_corner = 0.01, lt_epsilon = 0.01;
    double upper = 3.0;
    std::size_t grid_n = 100;
    std::size_t stride = 1000;
    std::string out;

    rd::ModelParams params() const {
        std::map<std::string, double> kv;
        if (!config.empty()) kv = rd::parse_config_file(config);
        auto put = [&](const char* k, double v) {
            if (!kv.count(k)) kv[k] = v;
        };
        put("g", g);
        put("h", h);
        put("x1", x1);
        put("x2", x2);
        if (rho && !kv.count("rho")) kv["rho"] = *rho;
        if (sigma && !kv.count("sigma")) kv["sigma"] = *sigma;
        return rd::params_from_config(kv);
    }

    rd::Scenario scenario() const {
        rd::Scenario s;
        s.params = params();
        s.horizon = horizon;
        s.dt = dt;
        s.burn_in = burn_in;
        s.n_paths = paths;
        s.base_seed = seed;
        s.n_threads = threads;
        s.eps_corner = eps_corner;
        s.lt_epsilon = lt_epsilon;
        s.check();
        return s;
    }
};

void add_model_flags(CLI::App* cmd, Cli& c) {
    cmd->add_option("--config", c.config, "flat key = value scenario file");
    cmd->add_option("-g,--g", c.g, "laggard drift");
    cmd->add_option("-H,--h", c.h, "leader drift (negated)");
    cmd->add_option("--rho", c.rho, "leader dispersion");
    cmd->add_option("--sigma", c.sigma, "laggard dispersion");
    cmd->add_option("--x1", c.x1, "initial position of particle 1");
    cmd->add_option("--x2", c.x2, "initial position of particle 2");
}

void add_grid_flags(CLI::App* cmd, Cli& c) {
    cmd->add_option("--horizon", c.horizon, "time horizon T");
    cmd->add_option("--dt", c.dt, "grid step");
    cmd->add_option("--seed", c.seed, "base RNG seed");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw rd::DomainError("cannot open output file: " + path);
    return out;
}

void write_manifest(const Cli& c, const std::string& command,
                    std::chrono::steady_clock::time_point start) {
    if (c.out.empty()) return;
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto mf = open_out(c.out + ".manifest.json");
    mf << rd::make_manifest(c.scenario(), command, wall);
}

int cmd_simulate(const Cli& c) {
    const auto start = std::chrono::steady_clock::now();
    const rd::Scenario s = c.scenario();
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!c.out.empty()) {
        file = open_out(c.out);
        out = &file;
    }
    if (s.params.sigma == 0.0) {
        const auto b = rd::degenerate_simulate(s.params, s.horizon, s.dt,
                                               {s.base_seed, 0}, s.opt.zero_tol);
        rd::write_degenerate_csv(*out, b);
    } else {
        const auto b = rd::simulate_path(s.params, s.horizon, s.dt, {s.base_seed, 0}, s.opt);
        rd::write_path_csv(*out, b);
    }
    write_manifest(c, "simulate", start);
    return rd::kExitOk;
}

int cmd_classify(const Cli& c) {
    const rd::ModelParams p = c.params();
    std::cout << "corner=" << rd::to_string(rd::classify_corner(p)) << '\n';
    if (p.sigma > 0.0 && p.sigma < 1.0) {
        const auto w = rd::wedge_geometry(p);
        std::cout << "xi_angle=" << rd::format_number(w.xi_angle) << '\n'
                  << "theta1=" << rd::format_number(w.theta1) << '\n'
                  << "theta2=" << rd::format_number(w.theta2) << '\n'
                  << "alpha=" << rd::format_number(w.alpha) << '\n';
        if (p.lambda > 0.0)
            std::cout << "recurrence=" << rd::to_string(rd::classify_recurrence(p)) << '\n';
    }
    return rd::kExitOk;
}

int cmd_density(const Cli& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto d = rd::build_sum_exp_density(c.params());
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!c.out.empty()) {
        file = open_out(c.out);
        out = &file;
    }
    rd::write_density_grid_csv(*out, d, c.upper, c.grid_n);
    write_manifest(c, "density", start);
    return rd::kExitOk;
}

int cmd_invariant(const Cli& c) {
    const auto start = std::chrono::steady_clock::now();
    const rd::Scenario s = c.scenario();
    const auto emp = rd::empirical_invariant(s.params, s.horizon, s.burn_in, s.dt, c.stride,
                                             {s.base_seed, 0}, 40, s.opt);
    std::cout << "n_samples=" << emp.gap.size() << '\n'
              << "mean_gap=" << rd::format_number(emp.mean_gap) << '\n'
              << "mean_laggard=" << rd::format_number(emp.mean_laggard) << '\n'
              << "correlation=" << rd::format_number(emp.correlation) << '\n';
    try {
        const auto d = rd::build_sum_exp_density(s.params);
        std::cout << "closed_form_mean_gap=" << rd::format_number(d.mean_gap()) << '\n'
                  << "closed_form_mean_laggard=" << rd::format_number(d.mean_laggard()) << '\n'
                  << "ks_gap=" << rd::format_number(rd::ks_distance(
                         emp.gap, [&](double u) { return d.gap_cdf(u); }))
                  << '\n'
                  << "ks_laggard=" << rd::format_number(rd::ks_distance(
                         emp.laggard, [&](double v) { return d.laggard_cdf(v); }))
                  << '\n';
    } catch (const rd::UnsupportedSigma&) {
        std::cout << "closed_form=unavailable\n";
    }
    if (!c.out.empty()) {
        auto file = open_out(c.out);
        rd::write_histogram_csv(file, emp.histogram);
    }
    write_manifest(c, "invariant", start);
    return rd::kExitOk;
}

int cmd_mc_corner(const Cli& c) {
    const auto start = std::chrono::steady_clock::now();
    const rd::Scenario s = c.scenario();
    const auto r = rd::mc_corner_hit(s);
    std::cout << "estimate=" << rd::format_number(r.estimate) << '\n'
              << "stderr=" << rd::format_number(r.std_err) << '\n'
              << "n=" << r.n << '\n';
    if (s.params.sigma == 0.0 && s.params.g > s.params.h)
        std::cout << "closed_form=" << rd::format_number(rd::degenerate_corner_prob(s.params))
                  << '\n';
    write_manifest(c, "mc-corner", start);
    return rd::kExitOk;
}

int cmd_identity_check(const Cli& c) {
    const auto start = std::chrono::steady_clock::now();
    const rd::Scenario s = c.scenario();
    const auto b = rd::simulate_path(s.params, s.horizon, s.dt, {s.base_seed, 0}, s.opt);
    const auto rep = rd::identity_suite(b, s.lt_epsilon);
    if (!c.out.empty()) {
        auto file = open_out(c.out);
        rd::write_identity_csv(file, rep);
    }
    rd::write_identity_csv(std::cout, rep);
    write_manifest(c, "identity-check", start);
    return rep.all_pass() ? rd::kExitOk : rd::kExitDomainError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-based planar diffusion toolkit"};
    app.require_subcommand(1);
    Cli c;

    auto* sim = app.add_subcommand("simulate", "simulate one path bundle, write CSV");
    add_model_flags(sim, c);
    add_grid_flags(sim, c);
    sim->add_option("--out", c.out, "output CSV path (stdout if omitted)");

    auto* cls = app.add_subcommand("classify", "print wedge geometry and classification");
    add_model_flags(cls, c);

    auto* den = app.add_subcommand("density", "grid evaluation of the closed-form density");
    add_model_flags(den, c);
    den->add_option("--upper", c.upper, "grid upper bound");
    den->add_option("--grid-n", c.grid_n, "grid points per axis");
    den->add_option("--out", c.out, "output CSV path (stdout if omitted)");

    auto* inv = app.add_subcommand("invariant", "empirical invariant law + comparison");
    add_model_flags(inv, c);
    add_grid_flags(inv, c);
    inv->add_option("--burn-in", c.burn_in, "time discarded before sampling");
    inv->add_option("--stride", c.stride, "subsample stride in grid points");
    inv->add_option("--out", c.out, "histogram CSV path");

    auto* mcc = app.add_subcommand("mc-corner", "Monte Carlo corner-hit probability");
    add_model_flags(mcc, c);
    add_grid_flags(mcc, c);
    mcc->add_option("--paths", c.paths, "number of Monte Carlo paths")->required();
    mcc->add_option("--eps-corner", c.eps_corner, "corner band on min R1");
    mcc->add_option("--threads", c.threads, "worker threads");
    mcc->add_option("--out", c.out, "manifest stem");

    auto* idc = app.add_subcommand("identity-check", "local-time identity suite on one bundle");
    add_model_flags(idc, c);
    add_grid_flags(idc, c);
    idc->add_option("--lt-epsilon", c.lt_epsilon, "local-time occupation band");
    idc->add_option("--out", c.out, "report CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(c);
        if (cls->parsed()) return cmd_classify(c);
        if (den->parsed()) return cmd_density(c);
        if (inv->parsed()) return cmd_invariant(c);
        if (mcc->parsed()) return cmd_mc_corner(c);
        if (idc->parsed()) return cmd_identity_check(c);
    } catch (const rd::DomainError& e) {
        std::cerr << rd::error_record("domain_error", "cli", e.what());
        return rd::kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << rd::error_record("internal_error", "cli", e.what());
        return rd::kExitInternalError;
    }
    return rd::kExitInternalError;
}
