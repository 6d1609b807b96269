#pragma once

#include "extremal/ensemble.hpp"
#include "extremal/types.hpp"

namespace extremal::induced {

// Exact finite-N laws for the complex induced Ginibre ensemble with
// rectangularity index L (fixed, or proportional via alpha with L = alpha N).
// Shapes run over k + L, k = 1..N; at L = 0 every op reduces to its ginibre
// counterpart.  The scaled spectral radius uses ScalingMode::SqrtOnePlusAlphaN
// (x = (L+N) r^2), the scaled minimum modulus ScalingMode::SqrtAlphaN
// (x = L r^2); ScalingMode::None evaluates at x = r^2.

double ind_rmin_survival(const EnsembleParams& params, double r);
LogProb ind_rmin_log_survival(const EnsembleParams& params, double r);
double ind_rmin_pdf(const EnsembleParams& params, double r);

double ind_rmax_cdf(const EnsembleParams& params, double r);
LogProb ind_rmax_log_cdf(const EnsembleParams& params, double r);
double ind_rmax_pdf(const EnsembleParams& params, double r);

double ind_joint_prob(const EnsembleParams& params, double r_inner, double r_outer);

}  // namespace extremal::induced
