#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rankdiff/degenerate.hpp"
#include "rankdiff/model.hpp"
#include "rankdiff/pathgen.hpp"
#include "rankdiff/rng.hpp"

namespace rankdiff {

/// One executable configuration: parameters, grid, batch size, seeding and
/// the thresholds shared by the estimators.
struct Scenario {
    ModelParams params;
    double horizon = 1.0;
    double dt = 1e-3;
    double burn_in = 0.0;
    std::size_t n_paths = 1;
    std::uint64_t base_seed = 0;
    std::size_t n_threads = 1;

    double eps_corner = 0.01;  // corner-hit band on min R1
    double lt_epsilon = 0.01;  // local-time occupation band
    SimOptions opt{};

    void check() const;
};

/// Batch estimate with stderr = sample-std / sqrt(n); stderr is NaN when
/// n = 1. Per-path seeds are recorded for replay.
struct McResult {
    double estimate = 0.0;
    double std_err = 0.0;
    std::size_t n = 0;
    std::vector<SeedRecord> seeds;
};

/// Evaluate a pure per-path statistic on n_paths independent bundles with
/// seeds (base_seed, 0..n-1). Results are stored per index and reduced in
/// index order, so the estimate does not depend on thread count.
McResult mc_batch(const Scenario& s, const std::function<double(const PathBundle&)>& f);

/// Same engine over the sigma = 0 construction.
McResult mc_batch_degenerate(const Scenario& s,
                             const std::function<double(const DegenerateBundle&)>& f);

/// P(min over grid of R1 <= eps_corner) by per-path indicators; dispatches
/// to the degenerate construction when sigma = 0.
McResult mc_corner_hit(const Scenario& s);

}  // namespace rankdiff
