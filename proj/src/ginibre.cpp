#include "extremal/ginibre.hpp"

#include <cmath>
#include <string>

#include "radial_kernel.hpp"

namespace extremal::ginibre {

namespace {

void check_ginibre(const EnsembleParams& params) {
    params.validate();
    if (params.rect_index != 0.0) {
        throw std::domain_error("ginibre laws require rectangularity index 0; use the induced ops");
    }
    if (params.scaling == ScalingMode::SqrtAlphaN || params.scaling == ScalingMode::SqrtOnePlusAlphaN) {
        throw std::domain_error("ginibre laws support scaling modes none and sqrt-n only");
    }
}

double radius_arg(const EnsembleParams& params, double r, const char* what) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::domain_error(std::string(what) + ": radius must be a finite real >= 0");
    }
    return params.abscissa_factor() * r * r;
}

}  // namespace

LogProb rmin_log_survival(const EnsembleParams& params, double r) {
    check_ginibre(params);
    return detail::log_survival_product(0.0, params.n, radius_arg(params, r, "rmin_survival"));
}

double rmin_survival(const EnsembleParams& params, double r) {
    return rmin_log_survival(params, r).prob();
}

LogProb rmax_log_cdf(const EnsembleParams& params, double r) {
    check_ginibre(params);
    return detail::log_cdf_product(0.0, params.n, radius_arg(params, r, "rmax_cdf"));
}

double rmax_cdf(const EnsembleParams& params, double r) {
    return rmax_log_cdf(params, r).prob();
}

double rmin_pdf(const EnsembleParams& params, double r) {
    check_ginibre(params);
    if (!(r > 0.0)) throw std::domain_error("rmin_pdf: radius must be > 0");
    const double x = radius_arg(params, r, "rmin_pdf");
    const LogProb surv = detail::log_survival_product(0.0, params.n, x);
    if (surv.underflowed) return 0.0;
    const double lse = detail::log_hazard_sum_survival(0.0, params.n, x);
    return std::exp(std::log(2.0 / r) + surv.log_value + lse);
}

double rmax_pdf(const EnsembleParams& params, double r) {
    check_ginibre(params);
    if (!(r > 0.0)) throw std::domain_error("rmax_pdf: radius must be > 0");
    const double x = radius_arg(params, r, "rmax_pdf");
    const LogProb cdf = detail::log_cdf_product(0.0, params.n, x);
    if (cdf.underflowed) return 0.0;
    const double lse = detail::log_hazard_sum_cdf(0.0, params.n, x);
    return std::exp(std::log(2.0 / r) + cdf.log_value + lse);
}

double joint_prob(const EnsembleParams& params, double r_inner, double r_outer) {
    check_ginibre(params);
    if (!(r_inner >= 0.0)) throw std::domain_error("joint_prob: inner radius must be >= 0");
    if (std::isnan(r_outer) || r_inner > r_outer) {
        throw std::domain_error("joint_prob: requires r_inner <= r_outer");
    }
    const double c = params.abscissa_factor();
    const double x_lo = c * r_inner * r_inner;
    const double x_hi = std::isinf(r_outer) ? r_outer : c * r_outer * r_outer;
    return detail::log_interval_product(0.0, params.n, x_lo, x_hi).prob();
}

double conditional_hole_prob(std::int64_t n, double s) {
    if (n < 2) throw std::domain_error("conditional_hole_prob: requires n >= 2");
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw std::domain_error("conditional_hole_prob: radius must be a finite real >= 0");
    }
    // factors Gamma(k+1, s^2)/Gamma(k+1), k = 1..n-1: shapes 2..n
    return detail::log_survival_product(1.0, n - 1, s * s).prob();
}

}  // namespace extremal::ginibre
