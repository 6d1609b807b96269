#pragma once

#include <cstdint>

#include "extremal/types.hpp"

namespace extremal::detail {

// Products over the independent-Gamma radial factors, shapes a_k = k + L for
// k = 1..n, all evaluated at the squared (scaled) radius x.
//
// Far-from-transition factors contribute |log| < ~1e-39 each and are skipped
// (window half-width 16(sqrt(x)+1) around x); running sums below -760 end the
// loop and flag the result as an exact zero.

// log prod P(k+L, x): all squared moduli below x.
LogProb log_cdf_product(double L, std::int64_t n, double x);

// log prod Q(k+L, x): all squared moduli above x.
LogProb log_survival_product(double L, std::int64_t n, double x);

// log prod [P(k+L, x_hi) - P(k+L, x_lo)]: all squared moduli inside the
// annulus.  x_hi may be +infinity.
LogProb log_interval_product(double L, std::int64_t n, double x_lo, double x_hi);

// log sum_j exp[(j+L) ln x - x - lnGamma(j+L) - ln P(j+L, x)], j = 1..n.
// The pdf of the largest modulus is (2/r) * cdf_product * exp(of this).
double log_hazard_sum_cdf(double L, std::int64_t n, double x);

// Same with ln Q: pdf of the smallest modulus.
double log_hazard_sum_survival(double L, std::int64_t n, double x);

}  // namespace extremal::detail
