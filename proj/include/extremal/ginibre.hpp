#pragma once

#include "extremal/ensemble.hpp"
#include "extremal/types.hpp"

namespace extremal::ginibre {

// Exact finite-N laws of the extreme eigenvalue moduli for the complex
// Ginibre ensemble (rectangularity index 0).  All probabilities are
// N-factor products of regularized incomplete gamma tails, summed in log
// space; `params.scaling` selects the abscissa normalization.
//
// Every op requires params.rect_index == 0 and r >= 0 (pdfs: r > 0).

double rmin_survival(const EnsembleParams& params, double r);
LogProb rmin_log_survival(const EnsembleParams& params, double r);
double rmin_pdf(const EnsembleParams& params, double r);

double rmax_cdf(const EnsembleParams& params, double r);
LogProb rmax_log_cdf(const EnsembleParams& params, double r);
double rmax_pdf(const EnsembleParams& params, double r);

// P(all moduli in the annulus [r_inner, r_outer]); r_outer may be +inf.
double joint_prob(const EnsembleParams& params, double r_inner, double r_outer);

// P(all other moduli >= s | one eigenvalue at the origin); n >= 2.
// Satisfies rmin_survival(n, s) = exp(-s^2) * conditional_hole_prob(n, s)
// in the unscaled convention.
double conditional_hole_prob(std::int64_t n, double s);

}  // namespace extremal::ginibre
