#include "extremal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/types.hpp"

namespace extremal::stats {

namespace {

void require_sorted_nonempty(const std::vector<double>& s, const char* what) {
    if (s.empty()) throw std::domain_error(std::string(what) + ": empty sample");
}

}  // namespace

double ks_critical_constant(double level) {
    // asymptotic Kolmogorov quantiles, K >= 1e3 regime
    if (level == 0.05) return 1.358;
    if (level == 0.01) return 1.628;
    throw std::domain_error("ks_critical_constant: supported levels are 0.05 and 0.01");
}

double empirical_cdf(const std::vector<double>& sorted_samples, double x) {
    require_sorted_nonempty(sorted_samples, "empirical_cdf");
    const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), x);
    return static_cast<double>(it - sorted_samples.begin()) /
           static_cast<double>(sorted_samples.size());
}

KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf,
                       double level) {
    if (samples.size() < 50) throw std::domain_error("ks_one_sample: needs at least 50 samples");
    std::sort(samples.begin(), samples.end());
    const double k = static_cast<double>(samples.size());
    double stat = 0.0;
    double prev_f = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        if (!(f >= 0.0 && f <= 1.0)) {
            throw integrity_error("ks_one_sample: reference CDF left [0,1]");
        }
        if (f < prev_f - 1e-12) {
            throw integrity_error("ks_one_sample: reference CDF is not monotone on the sample");
        }
        prev_f = std::max(prev_f, f);
        const double hi = static_cast<double>(i + 1) / k - f;
        const double lo = f - static_cast<double>(i) / k;
        stat = std::max(stat, std::max(hi, lo));
    }
    KSResult r;
    r.statistic = stat;
    r.n1 = samples.size();
    r.level = level;
    r.critical_value = ks_critical_constant(level) / std::sqrt(k);
    r.pass = stat <= r.critical_value;
    return r;
}

KSResult ks_two_sample(std::vector<double> a, std::vector<double> b, double level) {
    if (a.size() < 50 || b.size() < 50) {
        throw std::domain_error("ks_two_sample: needs at least 50 samples on each side");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double m = static_cast<double>(a.size());
    const double n = static_cast<double>(b.size());
    double stat = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        stat = std::max(stat, std::fabs(static_cast<double>(i) / m - static_cast<double>(j) / n));
    }
    KSResult r;
    r.statistic = stat;
    r.n1 = a.size();
    r.n2 = b.size();
    r.level = level;
    r.critical_value = ks_critical_constant(level) * std::sqrt((m + n) / (m * n));
    r.pass = stat <= r.critical_value;
    return r;
}

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::domain_error("pearson_correlation: paired samples required");
    }
    const double k = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw integrity_error("pearson_correlation: degenerate (constant) marginal");
    }
    return sxy / std::sqrt(sxx * syy);
}

IndependenceReport independence_check(const sampling::SampleBatch& batch, std::size_t grid_size) {
    const std::size_t k = batch.count();
    if (k < 1000) throw std::domain_error("independence_check: needs at least 1000 pairs");
    if (grid_size < 2) throw std::domain_error("independence_check: grid_size must be >= 2");

    IndependenceReport rep;
    rep.pearson_r = pearson_correlation(batch.r_min, batch.r_max);

    std::vector<double> mins = batch.r_min;
    std::vector<double> maxs = batch.r_max;
    std::sort(mins.begin(), mins.end());
    std::sort(maxs.begin(), maxs.end());

    // quantile grid thresholds
    std::vector<double> rg(grid_size), Rg(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double q = static_cast<double>(i + 1) / static_cast<double>(grid_size + 1);
        const std::size_t idx = std::min(k - 1, static_cast<std::size_t>(q * static_cast<double>(k)));
        rg[i] = mins[idx];
        Rg[i] = maxs[idx];
    }
    // joint counts by a single pass per grid row
    std::vector<std::vector<double>> fj(grid_size, std::vector<double>(grid_size, 0.0));
    for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t i = 0; i < grid_size; ++i) {
            if (batch.r_min[s] > rg[i]) continue;
            for (std::size_t j = 0; j < grid_size; ++j) {
                if (batch.r_max[s] <= Rg[j]) fj[i][j] += 1.0;
            }
        }
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double fmin = empirical_cdf(mins, rg[i]);
        for (std::size_t j = 0; j < grid_size; ++j) {
            const double fmax = empirical_cdf(maxs, Rg[j]);
            gap = std::max(gap, std::fabs(fj[i][j] / static_cast<double>(k) - fmin * fmax));
        }
    }
    rep.joint_sup_gap = gap;
    rep.pearson_threshold = 3.0 / std::sqrt(static_cast<double>(k));
    // DKW-style slack at the 1% level
    rep.gap_threshold = 2.5 * std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(k)));
    rep.pearson_pass = std::fabs(rep.pearson_r) <= rep.pearson_threshold;
    rep.gap_pass = rep.joint_sup_gap <= rep.gap_threshold;
    rep.pass = rep.pearson_pass && rep.gap_pass;
    return rep;
}

Histogram histogram(const std::vector<double>& samples, std::size_t bins) {
    if (samples.empty()) throw std::domain_error("histogram: empty input");
    if (bins < 1) throw std::domain_error("histogram: needs at least one bin");
    const auto [mn_it, mx_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *mn_it, hi = *mx_it;
    if (lo == hi) {  // degenerate support: widen symmetrically
        lo -= 0.5;
        hi += 0.5;
    }
    Histogram h;
    h.edges.resize(bins + 1);
    h.density.assign(bins, 0.0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.edges[i] = lo + width * static_cast<double>(i);
    }
    for (double v : samples) {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;
        h.density[idx] += 1.0;
    }
    const double norm = 1.0 / (static_cast<double>(samples.size()) * width);
    for (double& d : h.density) d *= norm;
    return h;
}

}  // namespace extremal::stats
