#pragma once

#include <cstdint>
#include <string>

#include "extremal/types.hpp"

namespace extremal::limits {

// Asymptotic extreme-value law of a scaled extreme modulus: a Gumbel
// distribution in the original radius units.
//   max: cdf(x) = exp(-exp(-(x-location)/scale))
//   min: survival(x) = exp(-exp((x-location)/scale))
struct GumbelLaw {
    enum class Orientation { Max, Min };

    Orientation orientation;
    double location;       // modulus units
    double scale;          // modulus units, > 0
    double gamma_alpha_n;  // centering sequence the law was built from

    double cdf(double x) const;
    double survival(double x) const;
    double pdf(double x) const;
    // moment-level summaries, used for automatic grids
    double mean() const;
    double stddev() const;
};

// Outer edge of the induced ensemble ring, proportional index L = alpha N:
// location 1 + sqrt(g/(2(1+alpha)N)), scale 1/(2 sqrt(2(1+alpha)N g)),
// g = log sqrt((1+alpha)N/2pi) - log log N.
GumbelLaw gumbel_outer(double alpha, std::int64_t n);

// Inner edge: location 1 - sqrt(g/(2 alpha N)), scale 1/(2 sqrt(2 alpha N g)),
// g = log sqrt(alpha N/2pi) - log log N.
GumbelLaw gumbel_inner(double alpha, std::int64_t n);

// Spectral radius of the plain complex Ginibre ensemble under sqrt(N)
// scaling: g = log sqrt(N/2pi) - log log N (positive only for N >= 163).
GumbelLaw gumbel_ginibre_rmax(std::int64_t n);

// Tagged tail model descriptors for curve metadata.
struct TailLaw {
    enum class Kind { Rayleigh, Weibull, GeneralizedGamma, LargeDeviation };
    Kind kind;
    double shape = 0.0;
    double scale = 0.0;
    std::string describe() const;
};

// Left tail of the minimum modulus, index L >= 0: Weibull CDF
// 1 - exp(-r^{2(L+1)}/(L+1)!); reduces to Rayleigh(1/sqrt(2)) at L = 0.
double tail_rmin_left(double L, double r);
TailLaw tail_rmin_left_law(double L);

// Right tail of the minimum modulus: CDF
// 1 - exp(-r^4/4 - r^2/2 + L ln r - ln Gamma(L+1)/2); the asymptotic is
// unreliable for r <= 1.5 and the result carries a flag there.
struct TailValue {
    double value;
    bool asymptotic_unreliable;
};
TailValue tail_rmin_right(double L, double r);
TailLaw tail_rmin_right_law();

// Limiting left-tail pdf at L = 1: Generalized Gamma 2 r^3 exp(-r^2).
double tail_rmin_generalized_gamma(double r);

// Large-deviation logarithm of P(r_min/sqrt(N) >= lam): -N^2 lam^4 / 4,
// for lam in (0, 1].
double ldp_log_survival(std::int64_t n, double lam);

}  // namespace extremal::limits
