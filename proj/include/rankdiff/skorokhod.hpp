#pragma once

#include <utility>
#include <vector>

#include "rankdiff/model.hpp"
#include "rankdiff/path.hpp"

namespace rankdiff {

/// The nondecreasing pair (A, Lambda) solving the coupled two-regulator
/// system: A is the local time of the name difference at 0, Lambda the local
/// time of the laggard at 0.
struct RegulatorPair {
    SampledPath A;
    SampledPath Lambda;
    int iterations = 0;       // Picard iterations used
    double final_gap = 0.0;   // last sup-norm change, scaled coordinates
};

/// Skorokhod reflection at the origin on the grid:
/// regulator(t_k) = max_{j<=k} (-z(t_j))^+, reflected = z + regulator >= 0.
std::pair<SampledPath, SampledPath> skorokhod_reflect_1d(const SampledPath& z);

/// Solves, by whole-path Picard iteration from (A, Lambda) = (0, 0),
///   2 A(t)      = max_{s<=t} ( -|y0| + lambda s + Lambda(s) - v_flat(s) )^+
///   Lambda(t)   = max_{s<=t} ( -r2 - g s + A(s) - sigma v2(s) )^+
/// exact to tol in sup-norm at every grid point. Both running-max maps are
/// applied to the previous iterate, matching the contraction argument with
/// factor 1/sqrt(2) in the scaled coordinates (2A, sqrt(2) Lambda).
///
/// Throws NonConvergence if max_iter is reached with change >= tol.
RegulatorPair solve_coupled_regulators(const SampledPath& v_flat, const SampledPath& v2,
                                       const ModelParams& p, double tol = 1e-12,
                                       int max_iter = 200);

/// Per-iteration sup-norm gaps (scaled coordinates) of the same Picard
/// iteration; successive ratios are bounded by the contraction factor.
std::vector<double> picard_diagnostics(const SampledPath& v_flat, const SampledPath& v2,
                                       const ModelParams& p, double tol = 1e-12,
                                       int max_iter = 200);

}  // namespace rankdiff
