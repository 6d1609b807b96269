#pragma once

#include "extremal/types.hpp"

namespace extremal::specfun {

// ln Gamma(a) for a > 0.  Stirling series above 12, upward recursion below.
double log_gamma(double a);

// Regularized incomplete gamma functions P(a,x) = gamma(a,x)/Gamma(a) and
// Q(a,x) = Gamma(a,x)/Gamma(a).  Whichever of the pair is the small tail is
// computed directly (series, continued fraction, or the uniform large-shape
// expansion); the other is its complement, so P + Q == 1 to rounding.
double reg_lower_gamma(double a, double x);
double reg_upper_gamma(double a, double x);

// Log-scale variants.  Accurate both for tiny tails (|log| large) and for
// logs as small as 1e-16 (complement side goes through log1p/expm1).
// Values below kLogUnderflow come back as flagged -inf, never silent zeros.
LogProb log_reg_lower_gamma(double a, double x);
LogProb log_reg_upper_gamma(double a, double x);

// Both tails from one dispatch; the product kernels live on this.
struct LogGammaPair {
    LogProb lower;  // ln P
    LogProb upper;  // ln Q
};
LogGammaPair log_reg_gamma_pair(double a, double x);

// Complementary error function and its scaled variant exp(x^2) erfc(x).
double erfc(double x);
double erfcx(double x);

// Reference path: series / continued fraction only, extended iteration
// budget, never the large-shape expansion.  Slow near x ~ a for huge a;
// used for cross-validation of the expansion path.
LogProb log_reg_lower_gamma_ref(double a, double x);
LogProb log_reg_upper_gamma_ref(double a, double x);

// Raw log values without the underflow clamp (cross-validation needs the
// paths' agreement deep below exp-representability).
double raw_log_reg_lower_gamma(double a, double x, bool reference_path);
double raw_log_reg_upper_gamma(double a, double x, bool reference_path);

namespace detail {
// ln Gamma*(a) = ln[ Gamma(a) / (sqrt(2 pi / a) a^a e^-a) ], a >= 12.
double log_gamma_star(double a);
// phi(lam) = lam - 1 - ln lam, evaluated without cancellation near lam = 1.
double phi(double lam);
}  // namespace detail

}  // namespace extremal::specfun
