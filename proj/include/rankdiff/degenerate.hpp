#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rankdiff/model.hpp"
#include "rankdiff/path.hpp"
#include "rankdiff/pathgen.hpp"
#include "rankdiff/rng.hpp"

namespace rankdiff {

/// Realization of the ballistic-laggard construction (sigma = 0, rho = 1,
/// g > 0): a single driving Brownian motion, explicit regulators, and the
/// modified unfolding with forced marks on corner-originating excursions.
struct DegenerateBundle {
    ModelParams params;
    SeedRecord seed;
    SampledPath V;
    SampledPath Lambda;  // local time of the sum at 0
    SampledPath LY;      // local time of the name difference at 0
    SampledPath R1, R2, Y, X1, X2;
    ExcursionSet excursions;
};

/// Explicit regulators:
///   Lambda(t) = max_{s<=t} (-xi_sum - nu s - V(s))^+
///   Lambda + 2 LY = max_{s<=t} (-|y0| + lambda s - V(s))^+
/// LY comes out by subtraction, with a monotone envelope absorbing round-off
/// (deviation asserted < 1e-10).
std::pair<SampledPath, SampledPath> degenerate_regulators(const SampledPath& V,
                                                          const ModelParams& p);

/// End-to-end degenerate synthesis on [0, horizon]: ranks via the explicit
/// regulators, gap unfolding with corner-originating excursions forced to
/// mark -1, then name assembly X1 = R2 + Y^+, X2 = R1 - Y^+.
DegenerateBundle degenerate_simulate(const ModelParams& p, double horizon, double dt,
                                     const SeedRecord& seed, double zero_tol = 1e-12,
                                     const std::optional<std::vector<int>>& injected_marks =
                                         std::nullopt);

/// Probability that the pair ever visits the corner of the quadrant:
/// exp(-2 (g - h) xi_sum) for g > h, and 1 for h >= g.
double degenerate_corner_prob(const ModelParams& p);

}  // namespace rankdiff
