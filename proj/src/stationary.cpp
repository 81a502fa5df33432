#include "rankdiff/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rankdiff {

namespace {

constexpr double kSigmaMatchTol = 1e-9;
constexpr int kMaxEll = 200;

using Mat2 = std::array<std::array<double, 2>, 2>;
using Vec2 = std::array<double, 2>;

Vec2 apply(const Mat2& m, const Vec2& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}
Vec2 apply_t(const Mat2& m, const Vec2& v) {  // transpose
    return {m[0][0] * v[0] + m[1][0] * v[1], m[0][1] * v[0] + m[1][1] * v[1]};
}
double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Mat2 rot_matrix(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{{-c, s}, {-s, -c}}};  // -[[cos,-sin],[sin,cos]]
}
Mat2 reflect_matrix(const Mat2& rot) {
    // Rot * diag(1, -1)
    return {{{rot[0][0], -rot[0][1]}, {rot[1][0], -rot[1][1]}}};
}
Mat2 sub(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}
constexpr Mat2 kIdentity{{{1.0, 0.0}, {0.0, 1.0}}};

}  // namespace

double density_equal_variance(double xi1, double xi2, const ModelParams& p) {
    if (std::abs(p.sigma * p.sigma - 0.5) > kSigmaMatchTol)
        throw DomainError("density_equal_variance: requires sigma^2 = 1/2");
    if (!(p.h > p.g) || !(p.g > 0.0))
        throw DomainError("density_equal_variance: requires h > g > 0");
    if (!(0.0 < xi2 && xi2 < xi1)) return 0.0;
    return 16.0 * p.h * (p.h - p.g) * std::exp(-4.0 * (p.h * xi1 - p.g * xi2));
}

SumExpDensity build_sum_exp_density(const ModelParams& p) {
    if (!(p.h > p.g) || !(p.g > 0.0))
        throw DomainError("build_sum_exp_density: requires h > g > 0");

    int ell = -1;
    for (int l = 0; l <= kMaxEll; ++l) {
        if (std::abs(p.sigma - std::cos(M_PI / (2.0 * (l + 2)))) < kSigmaMatchTol) {
            ell = l;
            break;
        }
    }
    if (ell < 0)
        throw UnsupportedSigma("build_sum_exp_density: sigma matches no cos(pi/(2(ell+2)))");

    const double xi_angle = M_PI / (2.0 * (ell + 2));
    const double theta1 = 0.0;

    SumExpDensity d;
    d.ell = ell;
    d.rho = p.rho;
    d.sigma = p.sigma;
    d.mu_vec = {p.h / p.rho, -p.g / p.sigma};
    d.nu1_vec = {0.0, 1.0};

    std::vector<Mat2> rot(ell + 1), ref(ell + 1);
    for (int k = 0; k <= ell; ++k) {
        rot[k] = rot_matrix(2.0 * theta1 + 2.0 * k * xi_angle);
        ref[k] = reflect_matrix(rot[k]);
    }

    const Vec2 e1{1.0, 0.0};
    std::vector<SumExpTerm> raw;
    for (int k = 0; k <= ell; ++k) {
        double num = 1.0;
        for (int i = 0; i <= ell; ++i)
            for (int j = i + 1; j <= ell; ++j) {
                if (i == k || j == k) continue;
                num *= dot(d.mu_vec, apply(sub(rot[i], rot[j]), e1));
            }
        const double den = dot(d.mu_vec, apply(sub(ref[k], rot[k]), d.nu1_vec));
        const double ck = ((k % 2 == 0) ? 1.0 : -1.0) * num / den;

        const Mat2 i_rot = sub(kIdentity, rot[k]);
        const Mat2 i_ref = sub(kIdentity, ref[k]);
        const Vec2 a = apply_t(i_rot, d.mu_vec);
        const Vec2 b = apply_t(i_ref, d.mu_vec);
        // pull exponents back to rank coordinates x = (xi1/rho, xi2/sigma)
        raw.push_back({ck * dot(d.mu_vec, apply(i_rot, d.nu1_vec)), a[0] / p.rho, a[1] / p.sigma});
        raw.push_back({-ck * dot(d.mu_vec, apply(i_ref, d.nu1_vec)), b[0] / p.rho, b[1] / p.sigma});
    }

    // drop vanishing terms, check integrability, normalize by the exact
    // per-term integrals over {0 < xi2 < xi1}
    double scale = 0.0;
    for (const auto& t : raw) scale = std::max(scale, std::abs(t.weight));
    double total = 0.0;
    for (const auto& t : raw) {
        if (std::abs(t.weight) < 1e-14 * scale) continue;
        if (!(t.c1 > 0.0) || !(t.c1 + t.c2 > 0.0))
            throw DomainError("build_sum_exp_density: non-integrable exponent term");
        d.terms.push_back(t);
        total += t.weight / (t.c1 * (t.c1 + t.c2));
    }
    if (!(total > 0.0))
        throw ConsistencyError("build_sum_exp_density: non-positive total mass");
    for (auto& t : d.terms) t.weight /= total;
    return d;
}

double SumExpDensity::operator()(double xi1, double xi2) const {
    if (!(0.0 < xi2 && xi2 < xi1)) return 0.0;
    double v = 0.0;
    for (const auto& t : terms) v += t.weight * std::exp(-t.c1 * xi1 - t.c2 * xi2);
    return v;
}

// In coordinates (u, v) = (gap, laggard) each term factorizes as
// w e^{-c1 u} e^{-(c1+c2) v}, so functionals reduce to exponential moments.
double SumExpDensity::mean_gap() const {
    double v = 0.0;
    for (const auto& t : terms) v += t.weight / (t.c1 * t.c1 * (t.c1 + t.c2));
    return v;
}

double SumExpDensity::mean_laggard() const {
    double v = 0.0;
    for (const auto& t : terms) {
        const double s = t.c1 + t.c2;
        v += t.weight / (t.c1 * s * s);
    }
    return v;
}

double SumExpDensity::gap_cdf(double u) const {
    if (u <= 0.0) return 0.0;
    double v = 0.0;
    for (const auto& t : terms)
        v += t.weight * (1.0 - std::exp(-t.c1 * u)) / (t.c1 * (t.c1 + t.c2));
    return v;
}

double SumExpDensity::laggard_cdf(double x) const {
    if (x <= 0.0) return 0.0;
    double v = 0.0;
    for (const auto& t : terms) {
        const double s = t.c1 + t.c2;
        v += t.weight * (1.0 - std::exp(-s * x)) / (t.c1 * s);
    }
    return v;
}

InvariantSample empirical_invariant(const ModelParams& p, double horizon, double burn_in,
                                    double dt, std::size_t subsample_stride,
                                    const SeedRecord& seed, std::size_t hist_bins,
                                    const SimOptions& opt) {
    if (!(p.g < p.h))
        throw DomainError("empirical_invariant: requires g < h (positive recurrence)");
    if (!(burn_in < horizon)) throw DomainError("empirical_invariant: burn_in must be < horizon");
    if (subsample_stride < 1) throw DomainError("empirical_invariant: stride must be >= 1");

    const PathBundle b = simulate_path(p, horizon, dt, seed, opt);
    const std::size_t first = static_cast<std::size_t>(std::ceil(burn_in / dt));

    InvariantSample out;
    for (std::size_t k = first; k < b.G.size(); k += subsample_stride) {
        out.gap.push_back(b.G[k]);
        out.laggard.push_back(b.M[k]);
    }
    const std::size_t n = out.gap.size();
    if (n < 2) throw DomainError("empirical_invariant: too few samples after burn-in");

    double sg = 0.0, sl = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sg += out.gap[i];
        sl += out.laggard[i];
    }
    out.mean_gap = sg / n;
    out.mean_laggard = sl / n;
    double vg = 0.0, vl = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dg = out.gap[i] - out.mean_gap, dl = out.laggard[i] - out.mean_laggard;
        vg += dg * dg;
        vl += dl * dl;
        cov += dg * dl;
    }
    out.var_gap = vg / (n - 1);
    out.var_laggard = vl / (n - 1);
    out.correlation = cov / std::sqrt(vg * vl);

    const double gmax = *std::max_element(out.gap.begin(), out.gap.end());
    const double lmax = *std::max_element(out.laggard.begin(), out.laggard.end());
    Histogram2D& h = out.histogram;
    h.counts.assign(hist_bins, std::vector<std::uint64_t>(hist_bins, 0));
    for (std::size_t i = 0; i <= hist_bins; ++i) {
        h.gap_edges.push_back(gmax * static_cast<double>(i) / hist_bins);
        h.laggard_edges.push_back(lmax * static_cast<double>(i) / hist_bins);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto bin = [&](double x, double mx) {
            auto j = static_cast<std::size_t>(x / mx * hist_bins);
            return std::min(j, hist_bins - 1);
        };
        ++h.counts[bin(out.gap[i], gmax)][bin(out.laggard[i], lmax)];
    }
    return out;
}

double integrate_wedge(const std::function<double(double, double)>& f, double upper, int n) {
    if (n % 2 != 0) ++n;
    const double h1 = upper / n;
    auto simpson_w = [n](int i) { return i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    double total = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double xi1 = i * h1;
        if (xi1 <= 0.0) continue;
        const double h2 = xi1 / n;
        double inner = 0.0;
        for (int j = 0; j <= n; ++j) inner += simpson_w(j) * f(xi1, j * h2);
        total += simpson_w(i) * (inner * h2 / 3.0);
    }
    return total * h1 / 3.0;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d = std::max(d, std::abs(F - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - F));
    }
    return d;
}

}  // namespace rankdiff
