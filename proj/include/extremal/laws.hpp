#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extremal/ensemble.hpp"
#include "extremal/limits.hpp"

namespace extremal::laws {

enum class LawId {
    RminSurvival,
    RminPdf,
    RmaxCdf,
    RmaxPdf,
    Joint,
    Hole,
    Gumbel,
    TailLeft,
    TailRight,
    Ldp,
};

LawId law_from_string(const std::string& s);
std::string to_string(LawId law);

struct LawOptions {
    double joint_inner = 0.0;  // fixed inner radius for the annulus law
};

// Scalar evaluation of one law at abscissa r (for Ldp, r is |lambda|).
double eval(LawId law, const EnsembleParams& params, double r, const LawOptions& opt = {});

DistributionCurve eval_curve(LawId law, const EnsembleParams& params, std::vector<double> grid,
                             const LawOptions& opt = {});

// The asymptotic law matching the ensemble/scaling pair; throws for
// combinations without one (unscaled convention, or non-positive centering).
limits::GumbelLaw matching_gumbel(const EnsembleParams& params, bool outer_edge);

// Default grid: uniform points on [mean - 6 sd, mean + 6 sd] of the matching
// asymptotic law, mapped into the params' radius units; bulk-edge fallbacks
// where no Gumbel law exists.
std::vector<double> auto_grid(LawId law, const EnsembleParams& params, std::size_t points = 512);

std::vector<double> linspace(double lo, double hi, std::size_t points);

}  // namespace extremal::laws
