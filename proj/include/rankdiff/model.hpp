#pragma once

#include <array>
#include <map>
#include <string>

#include "rankdiff/errors.hpp"

namespace rankdiff {

/// Model parameters (g, h, rho, sigma, x1, x2) with derived scalars.
///
/// g is the drift of the laggard, h the negated drift of the leader; rho and
/// sigma are the dispersions of leader and laggard, constrained to the unit
/// circle rho^2 + sigma^2 = 1. Construction normalizes (rho, sigma) when the
/// defect is within 1e-9 and rejects anything worse.
struct ModelParams {
    double g = 0.0;
    double h = 0.0;
    double rho = 0.0;
    double sigma = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    // derived, computed once on construction
    double lambda = 0.0;  // g + h
    double nu = 0.0;      // g - h
    double xi_sum = 0.0;  // x1 + x2
    double y0 = 0.0;      // x1 - x2
    double r1 = 0.0;      // max(x1, x2)
    double r2 = 0.0;      // min(x1, x2)
    double mu = 0.0;      // g rho^2 - h sigma^2

    ModelParams() = default;
    ModelParams(double g, double h, double rho, double sigma, double x1, double x2);
};

/// Build ModelParams from a flat key-value record with keys
/// g, h, rho, sigma, x1, x2. Either rho or sigma may be omitted and is
/// completed from rho^2 + sigma^2 = 1. Unknown keys are errors.
ModelParams params_from_config(const std::map<std::string, double>& kv);

/// Geometry of the transformed wedge: angle, reflection angles measured from
/// the inward normals (positive toward the corner), and the scalar
/// alpha = (theta1 + theta2) / xi_angle that governs corner attainability.
struct WedgeGeometry {
    double xi_angle = 0.0;  // in (0, pi/2)
    double theta1 = 0.0;    // exactly 0
    double theta2 = 0.0;    // 2 xi_angle - pi/2
    double alpha = 0.0;     // 2 - pi / (2 xi_angle)
    std::array<double, 2> nu1{};  // reflection vector, face 1
    std::array<double, 2> nu2{};  // reflection vector, face 2
    std::array<double, 2> n1{};   // inward normal, face 1
    std::array<double, 2> n2{};   // inward normal, face 2
};

enum class CornerBehavior { Never, PositiveProbability, AlmostSurely };

enum class Recurrence { Transient, NullRecurrentBoundary, PositiveRecurrent };

struct Classification {
    CornerBehavior corner;
    Recurrence recurrence;
};

/// Wedge geometry for 0 < sigma < 1; the cases sigma in {0, 1} degenerate
/// and are rejected.
WedgeGeometry wedge_geometry(const ModelParams& p);

/// Corner attainability for 0 < sigma <= 1. Never on sigma^2 >= 1/2,
/// AlmostSurely for the driftless sub-half regime, PositiveProbability
/// otherwise. sigma = 0 is handled by the degenerate module.
CornerBehavior classify_corner(const ModelParams& p);

/// Recurrence of the ranked pair for 0 < sigma < 1, lambda > 0.
Recurrence classify_recurrence(const ModelParams& p);

enum class EntryCertainty { SubProbability, AlmostSure };
enum class ExpectedEntry { Finite, Infinite };

struct HobsonRogersResult {
    EntryCertainty entry_as;
    ExpectedEntry expected_entry;
    double effective_rate1 = 0.0;  // mu + alpha * nu^-
    double effective_rate2 = 0.0;  // nu + beta * mu^-
};

/// Recurrence dichotomy by effective drift rates for a reflecting planar
/// Brownian motion pushed by the local times of its coordinates.
HobsonRogersResult classify_hobson_rogers(double mu, double nu, double alpha_r, double beta_r);

const char* to_string(CornerBehavior c);
const char* to_string(Recurrence r);

}  // namespace rankdiff
