#include "rankdiff/localtime.hpp"

#include <cmath>

namespace rankdiff {

LocalTimeEstimate estimate_local_time(const SampledPath& X,
                                      const std::function<double(std::size_t)>& qv_rate,
                                      double epsilon, std::string target) {
    if (!(epsilon > 0.0)) throw DomainError("estimate_local_time: epsilon must be > 0");
    X.check("estimate_local_time");
    const std::size_t m = X.size();
    LocalTimeEstimate est;
    est.epsilon = epsilon;
    est.target = std::move(target);
    est.values = zero_path(X.t0, X.dt, m);
    const double w = X.dt / (2.0 * epsilon);
    double acc = 0.0;
    for (std::size_t k = 1; k < m; ++k) {
        const double x = X[k - 1];
        if (x >= 0.0 && x < epsilon) acc += w * qv_rate(k - 1);
        est.values[k] = acc;
    }
    return est;
}

std::map<std::string, double> IdentityReport::flat() const {
    std::map<std::string, double> out;
    for (const auto& e : entries) {
        out[e.name + ".value"] = e.value;
        out[e.name + ".reference"] = e.reference;
        out[e.name + ".residual"] = e.residual;
        out[e.name + ".tolerance"] = e.tolerance;
        out[e.name + ".pass"] = e.pass ? 1.0 : 0.0;
    }
    return out;
}

IdentityReport identity_suite(const PathBundle& b, double epsilon) {
    const ModelParams& p = b.params;
    const double rho2 = p.rho * p.rho, sigma2 = p.sigma * p.sigma;

    auto const_rate = [](double r) { return [r](std::size_t) { return r; }; };
    // named particles diffuse at the leader rate when leading, laggard rate
    // when lagging
    auto x1_rate = [&](std::size_t k) { return b.Y[k] > 0.0 ? rho2 : sigma2; };
    auto x2_rate = [&](std::size_t k) { return b.Y[k] > 0.0 ? sigma2 : rho2; };

    const auto lt_leader = estimate_local_time(b.N, const_rate(rho2), epsilon, "R1");
    const auto lt_laggard = estimate_local_time(b.M, const_rate(sigma2), epsilon, "R2");
    const auto lt_gap = estimate_local_time(b.G, const_rate(1.0), epsilon, "absY");
    const auto lt_x1 = estimate_local_time(b.X1, x1_rate, epsilon, "X1");
    const auto lt_x2 = estimate_local_time(b.X2, x2_rate, epsilon, "X2");

    const double lambda_T = b.regulators.Lambda.back();
    const double twoA_T = 2.0 * b.regulators.A.back();

    // indicator-split form of the laggard local time
    double split = 0.0;
    for (std::size_t k = 1; k < b.G.size(); ++k) {
        const double d1 = lt_x1.values[k] - lt_x1.values[k - 1];
        const double d2 = lt_x2.values[k] - lt_x2.values[k - 1];
        split += (b.X1[k - 1] <= b.X2[k - 1]) ? d1 : d2;
    }

    auto rel = [](double v, double ref) { return std::abs(v - ref) / (std::abs(ref) + 1.0); };

    IdentityReport rep;
    auto add = [&](std::string name, double value, double ref, double residual, double tol) {
        rep.entries.push_back({std::move(name), value, ref, residual, tol, residual <= tol});
    };
    add("leader_no_local_time", lt_leader.total(), 0.0,
        lt_leader.total() / (lambda_T + 1.0), 0.05);
    add("laggard_vs_Lambda", lt_laggard.total(), lambda_T, rel(lt_laggard.total(), lambda_T), 0.20);
    add("gap_vs_2A", lt_gap.total(), twoA_T, rel(lt_gap.total(), twoA_T), 0.20);
    const double sum_lhs = lt_leader.total() + lt_laggard.total();
    const double sum_rhs = lt_x1.total() + lt_x2.total();
    add("sum_identity", sum_lhs, sum_rhs, rel(sum_lhs, sum_rhs), 0.25);
    add("indicator_split", split, lt_laggard.total(), rel(split, lt_laggard.total()), 0.25);
    return rep;
}

}  // namespace rankdiff
