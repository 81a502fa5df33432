#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rankdiff/model.hpp"
#include "rankdiff/path.hpp"
#include "rankdiff/rng.hpp"
#include "rankdiff/skorokhod.hpp"

namespace rankdiff {

/// The driving pair (V1, V2) and its four rotations:
/// V = rho V1 + sigma V2, Q = sigma V1 + rho V2,
/// V_flat = rho V1 - sigma V2, Q_flat = sigma V1 - rho V2.
struct BrownianBundle {
    SampledPath V1, V2;
    SampledPath V, Q, V_flat, Q_flat;
};

/// One maximal excursion of the gap away from zero: grid indices
/// [begin, end) with G > zero_tol strictly inside. from_corner records
/// whether the leader vanishes at the excursion's left boundary.
struct Excursion {
    std::size_t begin = 0;
    std::size_t end = 0;
    int mark = 0;  // +1 or -1 once drawn; 0 while undrawn
    bool from_corner = false;
};

struct ExcursionSet {
    std::vector<Excursion> intervals;
};

struct SupportingProcesses {
    SampledPath Z, G, K, M, N;
};

/// All coupled processes of one simulated realization.
struct PathBundle {
    ModelParams params;
    SeedRecord seed;
    BrownianBundle brownian;
    RegulatorPair regulators;
    SampledPath Z, G, K, M, N, Y;
    SampledPath X1, X2;
    SampledPath B1, B2, W1, W2, W;
    ExcursionSet excursions;

    // ranked processes coincide with leader/laggard by construction
    const SampledPath& R1() const { return N; }
    const SampledPath& R2() const { return M; }
};

struct SimOptions {
    double solver_tol = 1e-12;
    int max_iter = 200;
    double zero_tol = 1e-12;         // excursion / zero-set detection
    double consistency_tol = 1e-9;   // clamp band for G, M; error at 10x
};

/// n Gaussian steps of variance dt from the increments stream; grid has
/// n + 1 points starting at t = 0.
BrownianBundle gen_brownian_pair(std::size_t n, double dt, const SeedRecord& seed,
                                 const ModelParams& p);

/// Z = |y0| - lambda t - Lambda + V_flat; G = Z + 2A; K = r2 + g t - A + sigma V2;
/// M = K + Lambda; N = r1 - h t + A + rho V1. G and M are clamped to zero
/// inside (-consistency_tol, 0); larger defects raise ConsistencyError.
SupportingProcesses build_supporting_processes(const BrownianBundle& b, const RegulatorPair& reg,
                                               const ModelParams& p,
                                               double consistency_tol = 1e-9);

/// Maximal runs of G > zero_tol; from_corner is set from N at the left
/// boundary index of each run.
ExcursionSet enumerate_excursions(const SampledPath& G, const SampledPath& N, double zero_tol);

/// Draw fair +-1 marks for all undrawn excursions, in excursion order, from
/// the dedicated marks stream. Excursions flagged from_corner are forced to
/// -1 when force_corner_negative is set (degenerate construction) and do not
/// consume a draw.
void draw_marks(ExcursionSet& exc, std::mt19937_64& marks_rng, bool force_corner_negative = false);

/// Y = mark_k * G on excursion k, zero on the zero set; |Y| = G exactly.
/// All marks must be drawn (or injected) beforehand.
SampledPath unfold_gap(const SampledPath& G, const ExcursionSet& exc);

/// X1 = M + Y^+, X2 = N - Y^+; then X1 - X2 = Y, max = N, min = M exactly.
std::pair<SampledPath, SampledPath> assemble_names(const SampledPath& M, const SampledPath& N,
                                                   const SampledPath& Y);

/// Named-particle drivers: dB1 = 1{Y>0} dV1 + 1{Y<=0} dV2 with indicators at
/// the left endpoint of each increment; B2 with indicators swapped.
std::pair<SampledPath, SampledPath> derive_named_brownians(const SampledPath& Y,
                                                           const SampledPath& V1,
                                                           const SampledPath& V2);

/// Rank drivers with left-continuous signum (sgn(0) = -1):
/// W1 = int sgn(Y) dV1, W2 = -int sgn(Y) dV2, W = int sgn(Y) dV_flat.
std::tuple<SampledPath, SampledPath, SampledPath> derive_rank_brownians(const SampledPath& Y,
                                                                        const SampledPath& V1,
                                                                        const SampledPath& V2,
                                                                        const SampledPath& V_flat);

/// End-to-end synthesis on the grid [0, horizon] with step dt. Marks may be
/// injected for tests; otherwise they come from the marks stream of seed.
PathBundle simulate_path(const ModelParams& p, double horizon, double dt, const SeedRecord& seed,
                         const SimOptions& opt = {},
                         const std::optional<std::vector<int>>& injected_marks = std::nullopt);

}  // namespace rankdiff
