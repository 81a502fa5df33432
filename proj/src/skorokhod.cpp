#include "rankdiff/skorokhod.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rankdiff {

std::pair<SampledPath, SampledPath> skorokhod_reflect_1d(const SampledPath& z) {
    z.check("skorokhod_reflect_1d");
    const std::size_t n = z.size();
    SampledPath regulator = zero_path(z.t0, z.dt, n);
    SampledPath reflected = zero_path(z.t0, z.dt, n);
    double run = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        run = std::max(run, -z[k]);
        regulator[k] = run;
        reflected[k] = z[k] + run;
    }
    return {std::move(reflected), std::move(regulator)};
}

namespace {

struct PicardState {
    // scaled coordinates: a = 2A, b = Lambda
    std::vector<double> a, b;
};

/// One Jacobi sweep of both running-max maps; returns the scaled sup-norm gap
/// max(||2A' - 2A||, sqrt(2) ||L' - L||).
double picard_sweep(const SampledPath& v_flat, const SampledPath& v2, const ModelParams& p,
                    PicardState& st, std::vector<double>& na, std::vector<double>& nb) {
    const std::size_t n = v_flat.size();
    const double t0 = v_flat.t0, dt = v_flat.dt;
    double run_a = 0.0, run_b = 0.0;
    double gap_a = 0.0, gap_b = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double s = t0 + static_cast<double>(k) * dt;
        const double ca = -std::abs(p.y0) + p.lambda * s + st.b[k] - v_flat[k];
        if (ca > run_a) run_a = ca;
        const double cb = -p.r2 - p.g * s + 0.5 * st.a[k] - p.sigma * v2[k];
        if (cb > run_b) run_b = cb;
        na[k] = run_a;
        nb[k] = run_b;
        gap_a = std::max(gap_a, std::abs(run_a - st.a[k]));
        gap_b = std::max(gap_b, std::abs(run_b - st.b[k]));
    }
    st.a.swap(na);
    st.b.swap(nb);
    return std::max(gap_a, std::sqrt(2.0) * gap_b);
}

void check_inputs(const SampledPath& v_flat, const SampledPath& v2, const ModelParams& p,
                  double tol, int max_iter) {
    v_flat.check("solve_coupled_regulators: v_flat");
    v2.check("solve_coupled_regulators: v2");
    if (!v_flat.same_grid(v2))
        throw DomainError("solve_coupled_regulators: v_flat and v2 must share a grid");
    if (v_flat[0] != 0.0 || v2[0] != 0.0)
        throw DomainError("solve_coupled_regulators: noises must start at 0");
    if (!(tol > 0.0)) throw DomainError("solve_coupled_regulators: tol must be > 0");
    if (max_iter < 1) throw DomainError("solve_coupled_regulators: max_iter must be >= 1");
    if (!(p.sigma > 0.0)) throw DomainError("solve_coupled_regulators: requires sigma > 0");
}

}  // namespace

RegulatorPair solve_coupled_regulators(const SampledPath& v_flat, const SampledPath& v2,
                                       const ModelParams& p, double tol, int max_iter) {
    check_inputs(v_flat, v2, p, tol, max_iter);
    const std::size_t n = v_flat.size();
    PicardState st{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    std::vector<double> na(n), nb(n);
    double gap = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        gap = picard_sweep(v_flat, v2, p, st, na, nb);
        if (gap < tol) break;
    }
    if (it == max_iter)
        throw NonConvergence("solve_coupled_regulators: no convergence after " +
                             std::to_string(max_iter) + " iterations (gap " +
                             std::to_string(gap) + ")");
    RegulatorPair out;
    out.A = SampledPath(v_flat.t0, v_flat.dt, std::vector<double>(n));
    out.Lambda = SampledPath(v_flat.t0, v_flat.dt, std::move(st.b));
    for (std::size_t k = 0; k < n; ++k) out.A[k] = 0.5 * st.a[k];
    out.iterations = it + 1;
    out.final_gap = gap;
    return out;
}

std::vector<double> picard_diagnostics(const SampledPath& v_flat, const SampledPath& v2,
                                       const ModelParams& p, double tol, int max_iter) {
    check_inputs(v_flat, v2, p, tol, max_iter);
    const std::size_t n = v_flat.size();
    PicardState st{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    std::vector<double> na(n), nb(n);
    std::vector<double> gaps;
    for (int it = 0; it < max_iter; ++it) {
        const double gap = picard_sweep(v_flat, v2, p, st, na, nb);
        gaps.push_back(gap);
        if (gap < tol) return gaps;
    }
    throw NonConvergence("picard_diagnostics: no convergence after " +
                         std::to_string(max_iter) + " iterations");
}

}  // namespace rankdiff
