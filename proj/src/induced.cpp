#include "extremal/induced.hpp"

#include <cmath>
#include <string>

#include "radial_kernel.hpp"

namespace extremal::induced {

namespace {

double radius_arg(const EnsembleParams& params, double r, const char* what) {
    params.validate();
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::domain_error(std::string(what) + ": radius must be a finite real >= 0");
    }
    return params.abscissa_factor() * r * r;
}

}  // namespace

LogProb ind_rmin_log_survival(const EnsembleParams& params, double r) {
    const double x = radius_arg(params, r, "ind_rmin_survival");
    return detail::log_survival_product(params.rect_index, params.n, x);
}

double ind_rmin_survival(const EnsembleParams& params, double r) {
    return ind_rmin_log_survival(params, r).prob();
}

LogProb ind_rmax_log_cdf(const EnsembleParams& params, double r) {
    const double x = radius_arg(params, r, "ind_rmax_cdf");
    return detail::log_cdf_product(params.rect_index, params.n, x);
}

double ind_rmax_cdf(const EnsembleParams& params, double r) {
    return ind_rmax_log_cdf(params, r).prob();
}

double ind_rmin_pdf(const EnsembleParams& params, double r) {
    if (!(r > 0.0)) throw std::domain_error("ind_rmin_pdf: radius must be > 0");
    const double x = radius_arg(params, r, "ind_rmin_pdf");
    const LogProb surv = detail::log_survival_product(params.rect_index, params.n, x);
    if (surv.underflowed) return 0.0;
    const double lse = detail::log_hazard_sum_survival(params.rect_index, params.n, x);
    return std::exp(std::log(2.0 / r) + surv.log_value + lse);
}

double ind_rmax_pdf(const EnsembleParams& params, double r) {
    if (!(r > 0.0)) throw std::domain_error("ind_rmax_pdf: radius must be > 0");
    const double x = radius_arg(params, r, "ind_rmax_pdf");
    const LogProb cdf = detail::log_cdf_product(params.rect_index, params.n, x);
    if (cdf.underflowed) return 0.0;
    const double lse = detail::log_hazard_sum_cdf(params.rect_index, params.n, x);
    return std::exp(std::log(2.0 / r) + cdf.log_value + lse);
}

double ind_joint_prob(const EnsembleParams& params, double r_inner, double r_outer) {
    params.validate();
    if (!(r_inner >= 0.0)) throw std::domain_error("ind_joint_prob: inner radius must be >= 0");
    if (std::isnan(r_outer) || r_inner > r_outer) {
        throw std::domain_error("ind_joint_prob: requires r_inner <= r_outer");
    }
    const double c = params.abscissa_factor();
    const double x_lo = c * r_inner * r_inner;
    const double x_hi = std::isinf(r_outer) ? r_outer : c * r_outer * r_outer;
    return detail::log_interval_product(params.rect_index, params.n, x_lo, x_hi).prob();
}

}  // namespace extremal::induced
