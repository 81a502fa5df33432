#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rankdiff/path.hpp"
#include "rankdiff/pathgen.hpp"

namespace rankdiff {

/// Occupation-based estimate of the local time of a process at the origin,
/// one-sided band [0, epsilon) as in the Tanaka-limit definition.
struct LocalTimeEstimate {
    SampledPath values;
    double epsilon = 0.0;
    std::string target;

    double total() const { return values.back(); }
};

/// L(t_k) = sum_{j<k} (1/2eps) 1{0 <= X(t_j) < eps} qv_rate(j) dt.
/// qv_rate supplies the instantaneous quadratic-variation rate per grid
/// index (state-dependent for named particles, constant for drivers).
LocalTimeEstimate estimate_local_time(const SampledPath& X,
                                      const std::function<double(std::size_t)>& qv_rate,
                                      double epsilon, std::string target = {});

struct IdentityEntry {
    std::string name;
    double value = 0.0;      // estimated quantity
    double reference = 0.0;  // exact grid quantity it is checked against
    double residual = 0.0;   // |value - reference| / (|reference| + 1)
    double tolerance = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    /// Flat record of named residuals with pass/fail flags.
    std::map<std::string, double> flat() const;
};

/// Statistical cross-checks of the local-time identities on one bundle:
/// (i) the leader accrues no local time, (ii) laggard estimate vs Lambda,
/// (iii) |Y| estimate vs 2A, (iv) the sum identity
/// L^{max} + L^{min} = L^{X1} + L^{X2}, (v) its indicator-split form.
IdentityReport identity_suite(const PathBundle& bundle, double epsilon);

}  // namespace rankdiff
