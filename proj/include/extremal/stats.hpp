#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "extremal/sampling.hpp"

namespace extremal::stats {

// Kolmogorov-Smirnov outcome at a stated level.
struct KSResult {
    double statistic = 0.0;       // sup distance, in [0,1]
    std::size_t n1 = 0;
    std::size_t n2 = 0;           // 0 for one-sample
    double level = 0.01;
    double critical_value = 0.0;
    bool pass = false;
};

// Asymptotic Kolmogorov quantile c(level), levels 0.05 and 0.01 only.
double ks_critical_constant(double level);

// Right-continuous empirical CDF count(<= x)/K over a sorted sample.
double empirical_cdf(const std::vector<double>& sorted_samples, double x);

// Exact one-sample statistic sup_i max(|i/K - F(x_i)|, |(i-1)/K - F(x_i)|).
// The cdf evaluations must be monotone and inside [0,1]; otherwise the
// comparison is meaningless and an integrity_error is raised.
KSResult ks_one_sample(std::vector<double> samples, const std::function<double(double)>& cdf,
                       double level = 0.01);

// Two-sample sup distance with critical value c(level) sqrt((m+n)/(mn)).
KSResult ks_two_sample(std::vector<double> a, std::vector<double> b, double level = 0.01);

// Empirical check of the min/max factorization: Pearson correlation of the
// pairs plus the sup over a quantile grid of |F_joint - F_min F_max|.
struct IndependenceReport {
    double pearson_r = 0.0;
    double joint_sup_gap = 0.0;
    double pearson_threshold = 0.0;
    double gap_threshold = 0.0;
    bool pearson_pass = false;
    bool gap_pass = false;
    bool pass = false;
};

IndependenceReport independence_check(const sampling::SampleBatch& batch, std::size_t grid_size);

// Density-normalized histogram (area exactly 1).
struct Histogram {
    std::vector<double> edges;    // bins+1 ascending
    std::vector<double> density;  // bins heights
};

Histogram histogram(const std::vector<double>& samples, std::size_t bins);

double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace extremal::stats
