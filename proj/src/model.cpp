#include "rankdiff/model.hpp"

#include <algorithm>
#include <cmath>

namespace rankdiff {

namespace {
constexpr double kUnitCircleReject = 1e-9;
constexpr double kGeomTol = 1e-12;
}  // namespace

ModelParams::ModelParams(double g_, double h_, double rho_, double sigma_, double x1_, double x2_)
    : g(g_), h(h_), rho(rho_), sigma(sigma_), x1(x1_), x2(x2_) {
    if (!(g >= 0.0) || !(h >= 0.0))
        throw DomainError("ModelParams: g and h must be >= 0");
    if (!(x1 >= 0.0) || !(x2 >= 0.0))
        throw DomainError("ModelParams: x1 and x2 must be >= 0");
    if (!(rho >= 0.0) || !(sigma >= 0.0))
        throw DomainError("ModelParams: rho and sigma must be >= 0");

    const double s2 = rho * rho + sigma * sigma;
    if (std::abs(s2 - 1.0) > kUnitCircleReject)
        throw DomainError("ModelParams: rho^2 + sigma^2 must equal 1 (defect > 1e-9)");
    if (std::abs(s2 - 1.0) > kGeomTol) {
        const double scale = std::sqrt(s2);
        rho /= scale;
        sigma /= scale;
    }

    lambda = g + h;
    nu = g - h;
    xi_sum = x1 + x2;
    y0 = x1 - x2;
    r1 = std::max(x1, x2);
    r2 = std::min(x1, x2);
    mu = g * rho * rho - h * sigma * sigma;

    if (!(xi_sum > 0.0))
        throw DomainError("ModelParams: x1 + x2 must be > 0");
}

ModelParams params_from_config(const std::map<std::string, double>& kv) {
    for (const auto& [k, _] : kv) {
        if (k != "g" && k != "h" && k != "rho" && k != "sigma" && k != "x1" && k != "x2")
            throw DomainError("unknown parameter key: " + k);
    }
    auto need = [&](const std::string& k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw DomainError("missing parameter key: " + k);
        return it->second;
    };
    const double g = need("g"), h = need("h"), x1 = need("x1"), x2 = need("x2");
    const bool has_rho = kv.count("rho"), has_sigma = kv.count("sigma");
    double rho, sigma;
    if (has_rho && has_sigma) {
        rho = kv.at("rho");
        sigma = kv.at("sigma");
    } else if (has_rho) {
        rho = kv.at("rho");
        if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("rho must lie in [0,1] when sigma is omitted");
        sigma = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    } else if (has_sigma) {
        sigma = kv.at("sigma");
        if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in [0,1] when rho is omitted");
        rho = std::sqrt(std::max(0.0, 1.0 - sigma * sigma));
    } else {
        throw DomainError("one of rho, sigma is required");
    }
    return ModelParams(g, h, rho, sigma, x1, x2);
}

WedgeGeometry wedge_geometry(const ModelParams& p) {
    if (!(p.sigma > 0.0 && p.sigma < 1.0))
        throw DomainError("wedge_geometry: requires 0 < sigma < 1");
    WedgeGeometry w;
    w.xi_angle = std::acos(p.sigma);
    w.theta1 = 0.0;
    w.theta2 = 2.0 * w.xi_angle - M_PI / 2.0;
    w.alpha = 2.0 - M_PI / (2.0 * w.xi_angle);
    w.nu1 = {0.0, 1.0};
    w.n1 = {0.0, 1.0};
    w.n2 = {p.rho, -p.sigma};
    w.nu2 = {1.0 / p.rho, -1.0 / p.sigma};
    return w;
}

CornerBehavior classify_corner(const ModelParams& p) {
    if (p.sigma == 0.0)
        throw DomainError("classify_corner: sigma = 0 is handled by the degenerate module");
    if (!(p.sigma > 0.0 && p.sigma <= 1.0))
        throw DomainError("classify_corner: requires 0 < sigma <= 1");
    const double s2 = p.sigma * p.sigma;
    if (s2 >= 0.5) return CornerBehavior::Never;
    if (p.g == 0.0 && p.h == 0.0) return CornerBehavior::AlmostSurely;
    return CornerBehavior::PositiveProbability;
}

Recurrence classify_recurrence(const ModelParams& p) {
    if (!(p.sigma > 0.0 && p.sigma < 1.0))
        throw DomainError("classify_recurrence: requires 0 < sigma < 1");
    if (!(p.lambda > 0.0))
        throw DomainError("classify_recurrence: requires lambda = g + h > 0");
    if (p.g > p.h) return Recurrence::Transient;
    if (p.g == p.h) return Recurrence::NullRecurrentBoundary;
    return Recurrence::PositiveRecurrent;
}

HobsonRogersResult classify_hobson_rogers(double mu, double nu, double alpha_r, double beta_r) {
    if (mu == 0.0 && nu == 0.0)
        throw DomainError("classify_hobson_rogers: (mu, nu) must not be (0, 0)");
    HobsonRogersResult r;
    r.effective_rate1 = mu + alpha_r * std::max(-nu, 0.0);
    r.effective_rate2 = nu + beta_r * std::max(-mu, 0.0);
    const bool sure = r.effective_rate1 <= 0.0 && r.effective_rate2 <= 0.0;
    const bool finite = r.effective_rate1 < 0.0 && r.effective_rate2 < 0.0;
    r.entry_as = sure ? EntryCertainty::AlmostSure : EntryCertainty::SubProbability;
    r.expected_entry = finite ? ExpectedEntry::Finite : ExpectedEntry::Infinite;
    return r;
}

const char* to_string(CornerBehavior c) {
    switch (c) {
        case CornerBehavior::Never: return "Never";
        case CornerBehavior::PositiveProbability: return "PositiveProbability";
        case CornerBehavior::AlmostSurely: return "AlmostSurely";
    }
    return "?";
}

const char* to_string(Recurrence r) {
    switch (r) {
        case Recurrence::Transient: return "Transient";
        case Recurrence::NullRecurrentBoundary: return "NullRecurrentBoundary";
        case Recurrence::PositiveRecurrent: return "PositiveRecurrent";
    }
    return "?";
}

}  // namespace rankdiff
