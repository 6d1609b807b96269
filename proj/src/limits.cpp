#include "extremal/limits.hpp"

#include <cmath>
#include <string>

#include "extremal/specfun.hpp"

namespace extremal::limits {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kPiOverSqrt6 = 1.28254983016186409554;  // pi/sqrt(6)

double gamma_sequence(double edge_factor, std::int64_t n) {
    // log sqrt(edge_factor * N / 2pi) - log log N
    const double nn = static_cast<double>(n);
    return 0.5 * std::log(edge_factor * nn / (2.0 * M_PI)) - std::log(std::log(nn));
}

GumbelLaw make_law(GumbelLaw::Orientation o, double edge_factor, std::int64_t n,
                   const char* what) {
    if (n < 3) {
        throw std::domain_error(std::string(what) + ": needs n >= 3, got " + std::to_string(n));
    }
    const double g = gamma_sequence(edge_factor, n);
    if (!(g > 0.0)) {
        throw std::domain_error(std::string(what) + ": centering sequence is non-positive at n = " +
                                std::to_string(n) + " (g = " + std::to_string(g) + ")");
    }
    const double cn = edge_factor * static_cast<double>(n);
    const double spread = std::sqrt(g / (2.0 * cn));
    const double scale = 1.0 / (2.0 * std::sqrt(2.0 * cn * g));
    GumbelLaw law;
    law.orientation = o;
    law.location = (o == GumbelLaw::Orientation::Max) ? 1.0 + spread : 1.0 - spread;
    law.scale = scale;
    law.gamma_alpha_n = g;
    return law;
}

}  // namespace

double GumbelLaw::cdf(double x) const {
    const double z = (x - location) / scale;
    if (orientation == Orientation::Max) {
        return std::exp(-std::exp(-z));
    }
    return -std::expm1(-std::exp(z));
}

double GumbelLaw::survival(double x) const {
    const double z = (x - location) / scale;
    if (orientation == Orientation::Max) {
        return -std::expm1(-std::exp(-z));
    }
    return std::exp(-std::exp(z));
}

double GumbelLaw::pdf(double x) const {
    const double z = (x - location) / scale;
    if (orientation == Orientation::Max) {
        return std::exp(-z - std::exp(-z)) / scale;
    }
    return std::exp(z - std::exp(z)) / scale;
}

double GumbelLaw::mean() const {
    return (orientation == Orientation::Max) ? location + kEulerGamma * scale
                                             : location - kEulerGamma * scale;
}

double GumbelLaw::stddev() const { return kPiOverSqrt6 * scale; }

GumbelLaw gumbel_outer(double alpha, std::int64_t n) {
    if (!(alpha > 0.0)) throw std::domain_error("gumbel_outer: alpha must be > 0");
    return make_law(GumbelLaw::Orientation::Max, 1.0 + alpha, n, "gumbel_outer");
}

GumbelLaw gumbel_inner(double alpha, std::int64_t n) {
    if (!(alpha > 0.0)) throw std::domain_error("gumbel_inner: alpha must be > 0");
    return make_law(GumbelLaw::Orientation::Min, alpha, n, "gumbel_inner");
}

GumbelLaw gumbel_ginibre_rmax(std::int64_t n) {
    return make_law(GumbelLaw::Orientation::Max, 1.0, n, "gumbel_ginibre_rmax");
}

std::string TailLaw::describe() const {
    switch (kind) {
        case Kind::Rayleigh: return "rayleigh(sigma=" + std::to_string(scale) + ")";
        case Kind::Weibull:
            return "weibull(shape=" + std::to_string(shape) + ",scale=" + std::to_string(scale) + ")";
        case Kind::GeneralizedGamma: return "generalized-gamma(scale=1,kappa=2,gamma=4)";
        case Kind::LargeDeviation: return "large-deviation(speed=N^2/4,rate=|z|^4)";
    }
    return "?";
}

double tail_rmin_left(double L, double r) {
    if (!(L >= 0.0)) throw std::domain_error("tail_rmin_left: index must be >= 0");
    if (!(r >= 0.0)) throw std::domain_error("tail_rmin_left: radius must be >= 0");
    if (r == 0.0) return 0.0;
    const double k = 2.0 * (L + 1.0);
    const double log_arg = k * std::log(r) - specfun::log_gamma(L + 2.0);
    return -std::expm1(-std::exp(log_arg));
}

TailLaw tail_rmin_left_law(double L) {
    TailLaw law;
    const double k = 2.0 * (L + 1.0);
    if (L == 0.0) {
        law.kind = TailLaw::Kind::Rayleigh;
        law.shape = 2.0;
        law.scale = 1.0 / std::sqrt(2.0);  // sigma
        return law;
    }
    law.kind = TailLaw::Kind::Weibull;
    law.shape = k;
    law.scale = std::exp(specfun::log_gamma(L + 2.0) / k);  // ((L+1)!)^{1/k}
    return law;
}

TailValue tail_rmin_right(double L, double r) {
    if (!(L >= 0.0)) throw std::domain_error("tail_rmin_right: index must be >= 0");
    if (!(r > 0.0)) throw std::domain_error("tail_rmin_right: radius must be > 0");
    const double exponent = -0.25 * r * r * r * r - 0.5 * r * r + L * std::log(r) -
                            0.5 * specfun::log_gamma(L + 1.0);
    return {-std::expm1(exponent), r <= 1.5};
}

TailLaw tail_rmin_right_law() {
    TailLaw law;
    law.kind = TailLaw::Kind::Weibull;
    law.shape = 4.0;
    law.scale = std::sqrt(2.0);  // 4^{1/4}
    return law;
}

double tail_rmin_generalized_gamma(double r) {
    if (!(r >= 0.0)) throw std::domain_error("tail_rmin_generalized_gamma: radius must be >= 0");
    return 2.0 * r * r * r * std::exp(-r * r);
}

double ldp_log_survival(std::int64_t n, double lam) {
    if (!(lam > 0.0) || !(lam <= 1.0)) {
        throw std::domain_error("ldp_log_survival: requires 0 < lam <= 1, got " +
                                std::to_string(lam));
    }
    const double nn = static_cast<double>(n);
    const double l2 = lam * lam;
    return -0.25 * nn * nn * l2 * l2;
}

}  // namespace extremal::limits
