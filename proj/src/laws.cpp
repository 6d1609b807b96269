#include "extremal/laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/ginibre.hpp"
#include "extremal/induced.hpp"

namespace extremal::laws {

namespace {

bool is_pdf(LawId law) { return law == LawId::RminPdf || law == LawId::RmaxPdf; }

bool is_min_side(LawId law) {
    return law == LawId::RminSurvival || law == LawId::RminPdf || law == LawId::Hole;
}

}  // namespace

LawId law_from_string(const std::string& s) {
    if (s == "rmin-survival") return LawId::RminSurvival;
    if (s == "rmin-pdf") return LawId::RminPdf;
    if (s == "rmax-cdf") return LawId::RmaxCdf;
    if (s == "rmax-pdf") return LawId::RmaxPdf;
    if (s == "joint") return LawId::Joint;
    if (s == "hole") return LawId::Hole;
    if (s == "gumbel") return LawId::Gumbel;
    if (s == "tail-left") return LawId::TailLeft;
    if (s == "tail-right") return LawId::TailRight;
    if (s == "ldp") return LawId::Ldp;
    throw std::domain_error("unknown law '" + s + "'");
}

std::string to_string(LawId law) {
    switch (law) {
        case LawId::RminSurvival: return "rmin-survival";
        case LawId::RminPdf: return "rmin-pdf";
        case LawId::RmaxCdf: return "rmax-cdf";
        case LawId::RmaxPdf: return "rmax-pdf";
        case LawId::Joint: return "joint";
        case LawId::Hole: return "hole";
        case LawId::Gumbel: return "gumbel";
        case LawId::TailLeft: return "tail-left";
        case LawId::TailRight: return "tail-right";
        case LawId::Ldp: return "ldp";
    }
    return "?";
}

double eval(LawId law, const EnsembleParams& params, double r, const LawOptions& opt) {
    switch (law) {
        case LawId::RminSurvival: return induced::ind_rmin_survival(params, r);
        case LawId::RminPdf: return induced::ind_rmin_pdf(params, r);
        case LawId::RmaxCdf: return induced::ind_rmax_cdf(params, r);
        case LawId::RmaxPdf: return induced::ind_rmax_pdf(params, r);
        case LawId::Joint: return induced::ind_joint_prob(params, opt.joint_inner, r);
        case LawId::Hole: return ginibre::conditional_hole_prob(params.n, r);
        case LawId::Gumbel: {
            const bool outer = params.scaling != ScalingMode::SqrtAlphaN;
            return matching_gumbel(params, outer).cdf(r);
        }
        case LawId::TailLeft: return limits::tail_rmin_left(params.rect_index, r);
        case LawId::TailRight: return limits::tail_rmin_right(params.rect_index, r).value;
        case LawId::Ldp: return limits::ldp_log_survival(params.n, r);
    }
    throw std::domain_error("unhandled law");
}

DistributionCurve eval_curve(LawId law, const EnsembleParams& params, std::vector<double> grid,
                             const LawOptions& opt) {
    DistributionCurve curve;
    curve.law = to_string(law);
    curve.params = params;
    curve.grid = std::move(grid);
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        if (!std::isfinite(curve.grid[i]) || (i > 0 && !(curve.grid[i] > curve.grid[i - 1]))) {
            throw std::domain_error("curve grid must be finite and strictly increasing");
        }
    }
    curve.values.reserve(curve.grid.size());
    for (double r : curve.grid) curve.values.push_back(eval(law, params, r, opt));
    curve.validate_grid();
    return curve;
}

limits::GumbelLaw matching_gumbel(const EnsembleParams& params, bool outer_edge) {
    params.validate();
    if (params.scaling == ScalingMode::None) {
        throw std::domain_error("no asymptotic law in the unscaled convention; pick a scaling");
    }
    if (outer_edge) {
        if (params.rect_index > 0.0 && params.scaling == ScalingMode::SqrtOnePlusAlphaN) {
            return limits::gumbel_outer(params.rect_index / static_cast<double>(params.n), params.n);
        }
        return limits::gumbel_ginibre_rmax(params.n);
    }
    if (!(params.rect_index > 0.0)) {
        throw std::domain_error("inner-edge asymptotic law requires rect_index > 0");
    }
    return limits::gumbel_inner(params.rect_index / static_cast<double>(params.n), params.n);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    if (points < 2) throw std::domain_error("grid needs at least 2 points");
    if (!(lo < hi)) throw std::domain_error("grid requires min < max");
    std::vector<double> g(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> auto_grid(LawId law, const EnsembleParams& params, std::size_t points) {
    params.validate();
    double lo = 0.0, hi = 1.0;
    switch (law) {
        case LawId::TailLeft: lo = 0.0, hi = 1.0; break;
        case LawId::TailRight: lo = 1.5, hi = 4.0; break;
        case LawId::Ldp: lo = 0.05, hi = 1.0; break;
        case LawId::Hole: lo = 0.0, hi = 3.5; break;
        default: {
            const double nn = static_cast<double>(params.n);
            const bool min_side = is_min_side(law);
            // span in canonical scaled units, then map into the params' units
            const double canonical =
                min_side ? (params.rect_index > 0.0 ? std::sqrt(params.rect_index) : 1.0)
                         : std::sqrt(params.rect_index + nn);
            double v_lo, v_hi;
            if (min_side && params.rect_index == 0.0) {
                v_lo = 0.0;
                v_hi = 3.5;  // unscaled minimum modulus is O(1)
            } else {
                try {
                    EnsembleParams canon = params;
                    canon.scaling = min_side ? ScalingMode::SqrtAlphaN : ScalingMode::SqrtOnePlusAlphaN;
                    if (params.rect_index == 0.0) canon.scaling = ScalingMode::SqrtN;
                    const limits::GumbelLaw g = matching_gumbel(canon, !min_side);
                    v_lo = g.mean() - 6.0 * g.stddev();
                    v_hi = g.mean() + 6.0 * g.stddev();
                } catch (const std::domain_error&) {
                    v_lo = 0.0;  // small-N fallback around the bulk edge
                    v_hi = 2.2;
                }
            }
            const double factor = canonical / params.scale_factor();
            lo = std::max(0.0, v_lo) * factor;
            hi = v_hi * factor;
            break;
        }
    }
    if (is_pdf(law) && lo <= 0.0) {
        lo = hi / static_cast<double>(points);
    }
    return linspace(lo, hi, points);
}

}  // namespace extremal::laws
