#include "rankdiff/pathgen.hpp"

#include <algorithm>
#include <cmath>

namespace rankdiff {

BrownianBundle gen_brownian_pair(std::size_t n, double dt, const SeedRecord& seed,
                                 const ModelParams& p) {
    if (n < 1) throw DomainError("gen_brownian_pair: n must be >= 1");
    if (!(dt > 0.0)) throw DomainError("gen_brownian_pair: dt must be > 0");

    auto rng = make_stream(seed, Stream::Increments);
    std::normal_distribution<double> gauss(0.0, std::sqrt(dt));

    const std::size_t m = n + 1;  // grid points
    BrownianBundle b;
    for (SampledPath* path : {&b.V1, &b.V2, &b.V, &b.Q, &b.V_flat, &b.Q_flat})
        *path = zero_path(0.0, dt, m);

    double v1 = 0.0, v2 = 0.0;
    for (std::size_t k = 1; k < m; ++k) {
        v1 += gauss(rng);
        v2 += gauss(rng);
        b.V1[k] = v1;
        b.V2[k] = v2;
        b.V[k] = p.rho * v1 + p.sigma * v2;
        b.Q[k] = p.sigma * v1 + p.rho * v2;
        b.V_flat[k] = p.rho * v1 - p.sigma * v2;
        b.Q_flat[k] = p.sigma * v1 - p.rho * v2;
    }
    return b;
}

SupportingProcesses build_supporting_processes(const BrownianBundle& b, const RegulatorPair& reg,
                                               const ModelParams& p, double consistency_tol) {
    const std::size_t m = b.V1.size();
    if (!reg.A.same_grid(b.V1))
        throw DomainError("build_supporting_processes: regulator grid mismatch");

    SupportingProcesses s;
    for (SampledPath* path : {&s.Z, &s.G, &s.K, &s.M, &s.N}) *path = zero_path(0.0, b.V1.dt, m);

    const double ay = std::abs(p.y0);
    for (std::size_t k = 0; k < m; ++k) {
        const double t = b.V1.time(k);
        const double A = reg.A[k], L = reg.Lambda[k];
        s.Z[k] = ay - p.lambda * t - L + b.V_flat[k];
        double G = s.Z[k] + 2.0 * A;
        s.K[k] = p.r2 + p.g * t - A + p.sigma * b.V2[k];
        double M = s.K[k] + L;
        if (G < 0.0) {
            if (G < -10.0 * consistency_tol)
                throw ConsistencyError("build_supporting_processes: G < -10*tol (unconverged regulators?)");
            G = 0.0;
        }
        if (M < 0.0) {
            if (M < -10.0 * consistency_tol)
                throw ConsistencyError("build_supporting_processes: M < -10*tol (unconverged regulators?)");
            M = 0.0;
        }
        s.G[k] = G;
        s.M[k] = M;
        s.N[k] = p.r1 - p.h * t + A + p.rho * b.V1[k];
    }
    return s;
}

ExcursionSet enumerate_excursions(const SampledPath& G, const SampledPath& N, double zero_tol) {
    ExcursionSet out;
    const std::size_t m = G.size();
    std::size_t k = 0;
    while (k < m) {
        if (G[k] > zero_tol) {
            Excursion e;
            e.begin = k;
            while (k < m && G[k] > zero_tol) ++k;
            e.end = k;
            const std::size_t left = e.begin > 0 ? e.begin - 1 : 0;
            e.from_corner = N[left] <= zero_tol;
            out.intervals.push_back(e);
        } else {
            ++k;
        }
    }
    return out;
}

void draw_marks(ExcursionSet& exc, std::mt19937_64& marks_rng, bool force_corner_negative) {
    for (auto& e : exc.intervals) {
        if (e.mark != 0) continue;
        if (force_corner_negative && e.from_corner) {
            e.mark = -1;
            continue;
        }
        e.mark = (marks_rng() & 1u) ? 1 : -1;
    }
}

SampledPath unfold_gap(const SampledPath& G, const ExcursionSet& exc) {
    SampledPath Y = zero_path(G.t0, G.dt, G.size());
    for (const auto& e : exc.intervals) {
        if (e.mark == 0) throw DomainError("unfold_gap: undrawn excursion mark");
        const double m = static_cast<double>(e.mark);
        for (std::size_t k = e.begin; k < e.end; ++k) Y[k] = m * G[k];
    }
    return Y;
}

std::pair<SampledPath, SampledPath> assemble_names(const SampledPath& M, const SampledPath& N,
                                                   const SampledPath& Y) {
    const std::size_t m = M.size();
    SampledPath X1 = zero_path(M.t0, M.dt, m), X2 = zero_path(M.t0, M.dt, m);
    for (std::size_t k = 0; k < m; ++k) {
        const double yp = std::max(Y[k], 0.0);
        X1[k] = M[k] + yp;
        X2[k] = N[k] - yp;
    }
    return {std::move(X1), std::move(X2)};
}

std::pair<SampledPath, SampledPath> derive_named_brownians(const SampledPath& Y,
                                                           const SampledPath& V1,
                                                           const SampledPath& V2) {
    const std::size_t m = Y.size();
    SampledPath B1 = zero_path(Y.t0, Y.dt, m), B2 = zero_path(Y.t0, Y.dt, m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const double d1 = V1[k + 1] - V1[k], d2 = V2[k + 1] - V2[k];
        if (Y[k] > 0.0) {
            B1[k + 1] = B1[k] + d1;
            B2[k + 1] = B2[k] + d2;
        } else {
            B1[k + 1] = B1[k] + d2;
            B2[k + 1] = B2[k] + d1;
        }
    }
    return {std::move(B1), std::move(B2)};
}

std::tuple<SampledPath, SampledPath, SampledPath> derive_rank_brownians(const SampledPath& Y,
                                                                        const SampledPath& V1,
                                                                        const SampledPath& V2,
                                                                        const SampledPath& V_flat) {
    const std::size_t m = Y.size();
    SampledPath W1 = zero_path(Y.t0, Y.dt, m), W2 = zero_path(Y.t0, Y.dt, m),
                W = zero_path(Y.t0, Y.dt, m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        const double s = sgn_left(Y[k]);
        W1[k + 1] = W1[k] + s * (V1[k + 1] - V1[k]);
        W2[k + 1] = W2[k] - s * (V2[k + 1] - V2[k]);
        W[k + 1] = W[k] + s * (V_flat[k + 1] - V_flat[k]);
    }
    return {std::move(W1), std::move(W2), std::move(W)};
}

PathBundle simulate_path(const ModelParams& p, double horizon, double dt, const SeedRecord& seed,
                         const SimOptions& opt, const std::optional<std::vector<int>>& injected_marks) {
    if (!(p.sigma > 0.0))
        throw DomainError("simulate_path: requires sigma > 0 (sigma = 0 is the degenerate module)");
    if (!(dt > 0.0) || !(horizon >= dt))
        throw DomainError("simulate_path: requires dt > 0 and horizon >= dt");

    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / dt));

    PathBundle bundle;
    bundle.params = p;
    bundle.seed = seed;
    bundle.brownian = gen_brownian_pair(n, dt, seed, p);
    bundle.regulators = solve_coupled_regulators(bundle.brownian.V_flat, bundle.brownian.V2, p,
                                                 opt.solver_tol, opt.max_iter);
    auto s = build_supporting_processes(bundle.brownian, bundle.regulators, p, opt.consistency_tol);
    bundle.Z = std::move(s.Z);
    bundle.G = std::move(s.G);
    bundle.K = std::move(s.K);
    bundle.M = std::move(s.M);
    bundle.N = std::move(s.N);

    bundle.excursions = enumerate_excursions(bundle.G, bundle.N, opt.zero_tol);
    if (injected_marks) {
        if (injected_marks->size() != bundle.excursions.intervals.size())
            throw DomainError("simulate_path: injected mark count mismatch");
        for (std::size_t i = 0; i < injected_marks->size(); ++i)
            bundle.excursions.intervals[i].mark = (*injected_marks)[i];
    } else {
        auto marks_rng = make_stream(seed, Stream::Marks);
        draw_marks(bundle.excursions, marks_rng);
    }
    bundle.Y = unfold_gap(bundle.G, bundle.excursions);

    auto [X1, X2] = assemble_names(bundle.M, bundle.N, bundle.Y);
    bundle.X1 = std::move(X1);
    bundle.X2 = std::move(X2);

    auto [B1, B2] = derive_named_brownians(bundle.Y, bundle.brownian.V1, bundle.brownian.V2);
    bundle.B1 = std::move(B1);
    bundle.B2 = std::move(B2);
    auto [W1, W2, W] = derive_rank_brownians(bundle.Y, bundle.brownian.V1, bundle.brownian.V2,
                                             bundle.brownian.V_flat);
    bundle.W1 = std::move(W1);
    bundle.W2 = std::move(W2);
    bundle.W = std::move(W);

    // cheap whole-bundle consistency pass; round-off within the clamp band is
    // pulled up to 0 so nonnegativity holds exactly on the grid
    const std::size_t m = bundle.G.size();
    for (std::size_t k = 0; k < m; ++k) {
        for (SampledPath* X : {&bundle.X1, &bundle.X2}) {
            if ((*X)[k] < 0.0) {
                if ((*X)[k] < -opt.consistency_tol)
                    throw ConsistencyError("simulate_path: negative particle position");
                (*X)[k] = 0.0;
            }
        }
        if (bundle.M[k] > bundle.N[k] + opt.consistency_tol)
            throw ConsistencyError("simulate_path: ordering invariant violated");
        const double t = bundle.G.time(k);
        const double sum_resid = bundle.X1[k] + bundle.X2[k] -
                                 (p.xi_sum + p.nu * t + bundle.brownian.V[k] +
                                  bundle.regulators.Lambda[k]);
        if (std::abs(sum_resid) > 1e-9)
            throw ConsistencyError("simulate_path: sum identity violated");
    }
    return bundle;
}

}  // namespace rankdiff
