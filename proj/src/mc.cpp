#include "rankdiff/mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace rankdiff {

void Scenario::check() const {
    if (!(dt > 0.0)) throw DomainError("Scenario: dt must be > 0");
    if (!(burn_in < horizon)) throw DomainError("Scenario: burn_in must be < horizon");
    if (n_paths < 1) throw DomainError("Scenario: n_paths must be >= 1");
    if (n_threads < 1) throw DomainError("Scenario: n_threads must be >= 1");
}

namespace {

/// Run f(i) for i = 0..n-1 into a per-index slot vector, striding indices
/// across threads; then reduce in index order. Any worker exception is
/// rethrown on the caller thread.
McResult run_indexed(const Scenario& s, const std::function<double(std::size_t)>& f) {
    s.check();
    const std::size_t n = s.n_paths;
    std::vector<double> slot(n, 0.0);
    std::vector<std::exception_ptr> errors(s.n_threads);

    auto worker = [&](std::size_t t) {
        try {
            for (std::size_t i = t; i < n; i += s.n_threads) slot[i] = f(i);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (s.n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < s.n_threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    McResult r;
    r.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        r.seeds.push_back({s.base_seed, i});
        r.estimate += slot[i];
    }
    r.estimate /= static_cast<double>(n);
    if (n == 1) {
        r.std_err = std::numeric_limits<double>::quiet_NaN();
    } else {
        double ss = 0.0;
        for (double v : slot) ss += (v - r.estimate) * (v - r.estimate);
        r.std_err = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    return r;
}

double min_over_grid(const SampledPath& x) {
    return *std::min_element(x.values.begin(), x.values.end());
}

}  // namespace

McResult mc_batch(const Scenario& s, const std::function<double(const PathBundle&)>& f) {
    return run_indexed(s, [&](std::size_t i) {
        return f(simulate_path(s.params, s.horizon, s.dt, {s.base_seed, i}, s.opt));
    });
}

McResult mc_batch_degenerate(const Scenario& s,
                             const std::function<double(const DegenerateBundle&)>& f) {
    return run_indexed(s, [&](std::size_t i) {
        return f(degenerate_simulate(s.params, s.horizon, s.dt, {s.base_seed, i},
                                     s.opt.zero_tol));
    });
}

McResult mc_corner_hit(const Scenario& s) {
    if (s.n_paths < 100) throw DomainError("mc_corner_hit: requires n_paths >= 100");
    auto hit = [&](double min_r1) { return min_r1 <= s.eps_corner ? 1.0 : 0.0; };
    if (s.params.sigma == 0.0)
        return mc_batch_degenerate(
            s, [&](const DegenerateBundle& b) { return hit(min_over_grid(b.R1)); });
    return mc_batch(s, [&](const PathBundle& b) { return hit(min_over_grid(b.R1())); });
}

}  // namespace rankdiff
