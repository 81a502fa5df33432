#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "rankdiff/model.hpp"
#include "rankdiff/pathgen.hpp"
#include "rankdiff/rng.hpp"

namespace rankdiff {

/// One exponential term w * exp(-c1 xi1 - c2 xi2) of the expanded invariant
/// density, in original rank coordinates (xi1, xi2) = (leader, laggard).
struct SumExpTerm {
    double weight = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Closed-form invariant density of the ranked pair (R1, R2) for the
/// integer-parameter family alpha = -ell, sigma = cos(pi/(2(ell+2))),
/// expanded from rotation/reflection matrices into explicit exponential
/// terms and normalized to integrate to 1 over {0 < xi2 < xi1}.
struct SumExpDensity {
    int ell = 0;
    std::array<double, 2> mu_vec{};   // drift of the scaled-wedge problem
    std::array<double, 2> nu1_vec{};  // reflection vector on face 1
    double rho = 0.0, sigma = 0.0;    // inverse scaling to rank coordinates
    std::vector<SumExpTerm> terms;    // normalized weights

    /// Density value at rank coordinates; 0 outside {0 < xi2 < xi1}.
    double operator()(double xi1, double xi2) const;

    // closed-form functionals of the expansion (per-term exponential
    // integrals over the domain)
    double mean_gap() const;
    double mean_laggard() const;
    double gap_cdf(double u) const;
    double laggard_cdf(double v) const;
};

/// The ell = 0 (equal variances) density in its explicit form
/// 16 h (h - g) exp(-4 (h xi1 - g xi2)) on {0 < xi2 < xi1}.
double density_equal_variance(double xi1, double xi2, const ModelParams& p);

/// Assemble the sum-of-exponentials expansion for the matching ell.
/// Throws UnsupportedSigma when sigma matches no cos(pi/(2(ell+2))) and
/// DomainError when h <= g (no invariant probability density).
SumExpDensity build_sum_exp_density(const ModelParams& p);

struct Histogram2D {
    std::vector<double> gap_edges;
    std::vector<double> laggard_edges;
    std::vector<std::vector<std::uint64_t>> counts;  // [gap bin][laggard bin]
};

struct InvariantSample {
    std::vector<double> gap;
    std::vector<double> laggard;
    double mean_gap = 0.0, mean_laggard = 0.0;
    double var_gap = 0.0, var_laggard = 0.0;
    double correlation = 0.0;
    Histogram2D histogram;
};

/// Long-run subsampled estimate of the stationary law of (gap, laggard):
/// one path of simulate_path, [0, burn_in] discarded, every stride-th grid
/// point kept. Requires g < h (positive recurrence).
InvariantSample empirical_invariant(const ModelParams& p, double horizon, double burn_in,
                                    double dt, std::size_t subsample_stride,
                                    const SeedRecord& seed, std::size_t hist_bins = 40,
                                    const SimOptions& opt = {});

/// Iterated-Simpson integral of f over the truncated wedge
/// {0 < xi2 < xi1 < upper}; the independent check of normalizations and
/// moments of closed-form densities.
double integrate_wedge(const std::function<double(double, double)>& f, double upper, int n = 400);

/// One-sample Kolmogorov-Smirnov distance between samples and a CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace rankdiff
