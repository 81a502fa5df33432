#include "rankdiff/degenerate.hpp"

#include <algorithm>
#include <cmath>

namespace rankdiff {

namespace {
void require_degenerate(const ModelParams& p) {
    if (p.sigma != 0.0) throw DomainError("degenerate module: requires sigma = 0");
    if (!(p.g > 0.0)) throw DomainError("degenerate module: requires g > 0");
}
}  // namespace

std::pair<SampledPath, SampledPath> degenerate_regulators(const SampledPath& V,
                                                          const ModelParams& p) {
    require_degenerate(p);
    V.check("degenerate_regulators: V");
    const std::size_t m = V.size();
    SampledPath Lambda = zero_path(V.t0, V.dt, m);
    SampledPath LY = zero_path(V.t0, V.dt, m);

    const double ay = std::abs(p.y0);
    double run_l = 0.0, run_s = 0.0, ly_env = 0.0;
    double worst_dev = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double s = V.time(k);
        run_l = std::max(run_l, -p.xi_sum - p.nu * s - V[k]);
        run_s = std::max(run_s, -ay + p.lambda * s - V[k]);
        Lambda[k] = run_l;
        const double ly = 0.5 * (run_s - run_l);
        // monotone envelope over round-off; genuine decreases are errors
        worst_dev = std::max(worst_dev, ly_env - ly);
        ly_env = std::max(ly_env, ly);
        LY[k] = ly_env;
    }
    if (worst_dev > 1e-10)
        throw ConsistencyError("degenerate_regulators: LY envelope deviation > 1e-10");
    return {std::move(Lambda), std::move(LY)};
}

DegenerateBundle degenerate_simulate(const ModelParams& p, double horizon, double dt,
                                     const SeedRecord& seed, double zero_tol,
                                     const std::optional<std::vector<int>>& injected_marks) {
    require_degenerate(p);
    if (!(dt > 0.0) || !(horizon >= dt))
        throw DomainError("degenerate_simulate: requires dt > 0 and horizon >= dt");

    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / dt));
    const std::size_t m = n + 1;

    DegenerateBundle b;
    b.params = p;
    b.seed = seed;

    auto rng = make_stream(seed, Stream::Increments);
    std::normal_distribution<double> gauss(0.0, std::sqrt(dt));
    b.V = zero_path(0.0, dt, m);
    for (std::size_t k = 1; k < m; ++k) b.V[k] = b.V[k - 1] + gauss(rng);

    auto [Lambda, LY] = degenerate_regulators(b.V, p);
    b.Lambda = std::move(Lambda);
    b.LY = std::move(LY);

    b.R1 = zero_path(0.0, dt, m);
    b.R2 = zero_path(0.0, dt, m);
    SampledPath G = zero_path(0.0, dt, m);
    for (std::size_t k = 0; k < m; ++k) {
        const double t = b.V.time(k);
        b.R1[k] = p.r1 - p.h * t + b.V[k] + b.Lambda[k] + b.LY[k];
        b.R2[k] = std::max(0.0, p.r2 + p.g * t - b.LY[k]);
        G[k] = std::max(0.0, b.R1[k] - b.R2[k]);
    }

    b.excursions = enumerate_excursions(G, b.R1, zero_tol);
    if (injected_marks) {
        if (injected_marks->size() != b.excursions.intervals.size())
            throw DomainError("degenerate_simulate: injected mark count mismatch");
        for (std::size_t i = 0; i < injected_marks->size(); ++i)
            b.excursions.intervals[i].mark = (*injected_marks)[i];
    } else {
        auto marks_rng = make_stream(seed, Stream::Marks);
        draw_marks(b.excursions, marks_rng, /*force_corner_negative=*/true);
    }
    b.Y = unfold_gap(G, b.excursions);

    b.X1 = zero_path(0.0, dt, m);
    b.X2 = zero_path(0.0, dt, m);
    for (std::size_t k = 0; k < m; ++k) {
        const double yp = std::max(b.Y[k], 0.0);
        b.X1[k] = b.R2[k] + yp;
        b.X2[k] = b.R1[k] - yp;
    }
    return b;
}

double degenerate_corner_prob(const ModelParams& p) {
    if (p.sigma != 0.0) throw DomainError("degenerate_corner_prob: requires sigma = 0");
    if (p.h >= p.g) return 1.0;
    return std::exp(-2.0 * (p.g - p.h) * p.xi_sum);
}

}  // namespace rankdiff
