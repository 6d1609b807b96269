#include "radial_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extremal/specfun.hpp"

namespace extremal::detail {

namespace {

constexpr double kEarlyExit = -760.0;                 // below this the product is 0
const double kLnHalf = std::log(0.5);

double window(double x) { return 16.0 * (std::sqrt(x) + 1.0); }

// Kahan-compensated accumulator; the cdf/survival sums run over up to ~2e5
// factors and the curve contracts ask for ~1e-12 absolute accuracy.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// index of the first factor k (1-based) whose shape k+L is >= bound
std::int64_t first_k_at_or_above(double L, double bound) {
    const double k = std::ceil(bound - L);
    if (k < 1.0) return 1;
    if (k > 9.2e18) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(k);
}

// index of the last factor k whose shape k+L is <= bound
std::int64_t last_k_at_or_below(double L, double bound, std::int64_t n) {
    const double k = std::floor(bound - L);
    if (k < 1.0) return 0;
    if (k >= static_cast<double>(n)) return n;
    return static_cast<std::int64_t>(k);
}

// ln of the per-factor annulus probability P(a,x_hi) - P(a,x_lo), picking the
// tail pair that subtracts small against small.
double log_interval_factor(double a, double x_lo, double x_hi) {
    if (x_lo == 0.0) {
        const LogProb p = specfun::log_reg_lower_gamma(a, x_hi);
        return p.log_value;
    }
    if (std::isinf(x_hi)) {
        const LogProb q = specfun::log_reg_upper_gamma(a, x_lo);
        return q.log_value;
    }
    const specfun::LogGammaPair lo = specfun::log_reg_gamma_pair(a, x_lo);
    const specfun::LogGammaPair hi = specfun::log_reg_gamma_pair(a, x_hi);
    if (hi.lower.log_value <= kLnHalf) {
        // both lower tails small: P_hi - P_lo = P_hi (1 - e^{lnP_lo - lnP_hi})
        const double delta = lo.lower.log_value - hi.lower.log_value;
        if (delta >= 0.0) return -std::numeric_limits<double>::infinity();
        return hi.lower.log_value + std::log(-std::expm1(delta));
    }
    if (lo.upper.log_value <= kLnHalf) {
        const double delta = hi.upper.log_value - lo.upper.log_value;
        if (delta >= 0.0) return -std::numeric_limits<double>::infinity();
        return lo.upper.log_value + std::log(-std::expm1(delta));
    }
    // annulus straddles the bulk of the factor: 1 - P_lo - Q_hi with both <= 1/2
    const double mass = 1.0 - std::exp(lo.lower.log_value) - std::exp(hi.upper.log_value);
    if (mass <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(mass);
}

LogProb finish(const Accum& acc) {
    if (acc.sum < kLogUnderflow) return LogProb::zero();
    return {acc.sum, false};
}

struct StreamingLse {
    double max = -std::numeric_limits<double>::infinity();
    double scaled = 0.0;
    void add(double e) {
        if (std::isinf(e) && e < 0) return;
        if (e <= max) {
            scaled += std::exp(e - max);
        } else {
            scaled = scaled * std::exp(max - e) + 1.0;
            max = e;
        }
    }
    double value() const {
        if (std::isinf(max)) return max;
        return max + std::log(scaled);
    }
};

double hazard_exponent_cdf(double L, double x, double lnx, std::int64_t k) {
    const double a = L + static_cast<double>(k);
    const LogProb p = specfun::log_reg_lower_gamma(a, x);
    if (p.underflowed) {
        throw integrity_error("hazard sum hit an underflowed factor; evaluate the product first");
    }
    return a * lnx - x - specfun::log_gamma(a) - p.log_value;
}

double hazard_exponent_survival(double L, double x, double lnx, std::int64_t k) {
    const double a = L + static_cast<double>(k);
    const LogProb q = specfun::log_reg_upper_gamma(a, x);
    if (q.underflowed) {
        throw integrity_error("hazard sum hit an underflowed factor; evaluate the product first");
    }
    return a * lnx - x - specfun::log_gamma(a) - q.log_value;
}

}  // namespace

LogProb log_cdf_product(double L, std::int64_t n, double x) {
    if (x == 0.0) return LogProb::zero();
    Accum acc;
    // shapes below x - w contribute ln P ~ -Q(a,x), negligible
    const std::int64_t k0 = first_k_at_or_above(L, x - window(x));
    if (k0 > n) return LogProb::one();
    for (std::int64_t k = k0; k <= n; ++k) {
        const LogProb p = specfun::log_reg_lower_gamma(L + static_cast<double>(k), x);
        if (p.underflowed) return LogProb::zero();
        acc.add(p.log_value);
        if (acc.sum < kEarlyExit) return LogProb::zero();
    }
    return finish(acc);
}

LogProb log_survival_product(double L, std::int64_t n, double x) {
    if (x == 0.0) return LogProb::one();
    Accum acc;
    // shapes above x + w contribute ln Q ~ -P(a,x), negligible
    const std::int64_t k1 = last_k_at_or_below(L, x + window(x), n);
    if (k1 < 1) return LogProb::one();
    for (std::int64_t k = k1; k >= 1; --k) {
        const LogProb q = specfun::log_reg_upper_gamma(L + static_cast<double>(k), x);
        if (q.underflowed) return LogProb::zero();
        acc.add(q.log_value);
        if (acc.sum < kEarlyExit) return LogProb::zero();
    }
    return finish(acc);
}

LogProb log_interval_product(double L, std::int64_t n, double x_lo, double x_hi) {
    if (!(x_lo >= 0.0) || std::isnan(x_hi) || x_lo > x_hi) {
        throw std::domain_error("interval product requires 0 <= x_lo <= x_hi");
    }
    if (x_lo == x_hi) return LogProb::zero();
    if (x_lo == 0.0 && std::isinf(x_hi)) return LogProb::one();

    Accum acc;
    // factors near and below the inner boundary, walked downward into the plunge
    std::int64_t low_end = 0;
    if (x_lo > 0.0) {
        low_end = last_k_at_or_below(L, x_lo + window(x_lo), n);
        for (std::int64_t k = low_end; k >= 1; --k) {
            const double li = log_interval_factor(L + static_cast<double>(k), x_lo, x_hi);
            if (std::isinf(li)) return LogProb::zero();
            acc.add(li);
            if (acc.sum < kEarlyExit) return LogProb::zero();
        }
    }
    // factors near and above the outer boundary
    if (!std::isinf(x_hi)) {
        const std::int64_t hi_start =
            std::max(low_end + 1, first_k_at_or_above(L, x_hi - window(x_hi)));
        for (std::int64_t k = hi_start; k <= n; ++k) {
            const double li = log_interval_factor(L + static_cast<double>(k), x_lo, x_hi);
            if (std::isinf(li)) return LogProb::zero();
            acc.add(li);
            if (acc.sum < kEarlyExit) return LogProb::zero();
        }
    }
    return finish(acc);
}

double log_hazard_sum_cdf(double L, std::int64_t n, double x) {
    const double lnx = std::log(x);
    StreamingLse lse;
    // terms grow toward the top shape when x is beyond it; keep twice the
    // window below min(x, top shape) so the geometric build-up is complete
    const double anchor = std::min(x, L + static_cast<double>(n));
    const std::int64_t k0 =
        std::min(n, std::max<std::int64_t>(1, first_k_at_or_above(L, anchor - 2.0 * window(anchor))));
    for (std::int64_t k = k0; k <= n; ++k) {
        lse.add(hazard_exponent_cdf(L, x, lnx, k));
    }
    return lse.value();
}

double log_hazard_sum_survival(double L, std::int64_t n, double x) {
    const double lnx = std::log(x);
    StreamingLse lse;
    // terms decay upward from the bottom shape once past x; mirror bound
    const double anchor = std::max(x, L + 1.0);
    const std::int64_t k1 =
        std::max<std::int64_t>(1, last_k_at_or_below(L, anchor + 2.0 * window(anchor), n));
    for (std::int64_t k = 1; k <= k1; ++k) {
        lse.add(hazard_exponent_survival(L, x, lnx, k));
    }
    return lse.value();
}

}  // namespace extremal::detail
