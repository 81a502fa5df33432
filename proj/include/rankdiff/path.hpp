#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rankdiff/errors.hpp"

namespace rankdiff {

/// Uniform-grid time series. All continuous-time processes in this library
/// are carried on such grids; path functionals (running maxima, discrete
/// stochastic integrals) are computed from grid values only.
struct SampledPath {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> values;

    SampledPath() = default;
    SampledPath(double t0_, double dt_, std::vector<double> v)
        : t0(t0_), dt(dt_), values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double operator[](std::size_t k) const { return values[k]; }
    double& operator[](std::size_t k) { return values[k]; }
    double back() const { return values.back(); }

    void check(const char* what = "SampledPath") const {
        if (values.empty())
            throw DomainError(std::string(what) + ": length must be >= 1");
        if (!(dt > 0.0))
            throw DomainError(std::string(what) + ": dt must be > 0");
        for (double v : values)
            if (!std::isfinite(v))
                throw DomainError(std::string(what) + ": non-finite entry");
    }

    bool same_grid(const SampledPath& o) const {
        return t0 == o.t0 && dt == o.dt && values.size() == o.values.size();
    }
};

/// Zero path on the given grid.
inline SampledPath zero_path(double t0, double dt, std::size_t n) {
    return SampledPath(t0, dt, std::vector<double>(n, 0.0));
}

inline double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

/// Left-continuous signum: sgn(0) = -1.
inline double sgn_left(double x) { return x > 0.0 ? 1.0 : -1.0; }

}  // namespace rankdiff
