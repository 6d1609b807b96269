#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

// Which radius normalization a law is evaluated under.  The abscissa map is
// x = c r^2 with c = 1, N, L, L+N respectively; pdfs carry the matching
// Jacobian.
enum class ScalingMode { None, SqrtN, SqrtAlphaN, SqrtOnePlusAlphaN };

std::string to_string(ScalingMode m);
ScalingMode scaling_from_string(const std::string& s);

struct EnsembleParams {
    std::int64_t n = 1;        // matrix size N
    double rect_index = 0.0;   // rectangularity L >= 0
    std::optional<double> alpha;  // when set, rect_index == alpha * n
    ScalingMode scaling = ScalingMode::None;

    static EnsembleParams ginibre(std::int64_t n, ScalingMode s = ScalingMode::None);
    static EnsembleParams induced_fixed(std::int64_t n, double rect_index,
                                        ScalingMode s = ScalingMode::None);
    static EnsembleParams induced_proportional(std::int64_t n, double alpha,
                                               ScalingMode s = ScalingMode::None);

    void validate() const;

    // sqrt of the abscissa factor: r_unscaled = scale_factor() * r
    double scale_factor() const;
    // c in x = c r^2
    double abscissa_factor() const { const double s = scale_factor(); return s * s; }
};

// One evaluated law on a grid.
struct DistributionCurve {
    std::string law;
    EnsembleParams params;
    std::vector<double> grid;    // strictly increasing, finite
    std::vector<double> values;

    void validate_grid() const;
};

}  // namespace extremal
