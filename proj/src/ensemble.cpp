#include "extremal/ensemble.hpp"

#include <cmath>

namespace extremal {

std::string to_string(ScalingMode m) {
    switch (m) {
        case ScalingMode::None: return "none";
        case ScalingMode::SqrtN: return "sqrt-n";
        case ScalingMode::SqrtAlphaN: return "inner";
        case ScalingMode::SqrtOnePlusAlphaN: return "outer";
    }
    return "?";
}

ScalingMode scaling_from_string(const std::string& s) {
    if (s == "none") return ScalingMode::None;
    if (s == "sqrt-n") return ScalingMode::SqrtN;
    if (s == "inner") return ScalingMode::SqrtAlphaN;
    if (s == "outer") return ScalingMode::SqrtOnePlusAlphaN;
    throw std::domain_error("unknown scaling mode '" + s + "'");
}

EnsembleParams EnsembleParams::ginibre(std::int64_t n, ScalingMode s) {
    EnsembleParams p;
    p.n = n;
    p.rect_index = 0.0;
    p.scaling = s;
    p.validate();
    return p;
}

EnsembleParams EnsembleParams::induced_fixed(std::int64_t n, double rect_index, ScalingMode s) {
    EnsembleParams p;
    p.n = n;
    p.rect_index = rect_index;
    p.scaling = s;
    p.validate();
    return p;
}

EnsembleParams EnsembleParams::induced_proportional(std::int64_t n, double alpha, ScalingMode s) {
    EnsembleParams p;
    p.n = n;
    p.alpha = alpha;
    p.rect_index = alpha * static_cast<double>(n);
    p.scaling = s;
    p.validate();
    return p;
}

void EnsembleParams::validate() const {
    if (n < 1) throw std::domain_error("ensemble: matrix size must be >= 1");
    if (!(rect_index >= 0.0) || !std::isfinite(rect_index)) {
        throw std::domain_error("ensemble: rectangularity index must be a finite real >= 0");
    }
    if (alpha) {
        if (!(*alpha >= 0.0) || !std::isfinite(*alpha)) {
            throw std::domain_error("ensemble: alpha must be a finite real >= 0");
        }
        if (rect_index != *alpha * static_cast<double>(n)) {
            throw std::domain_error("ensemble: rect_index must equal alpha * n exactly as stored");
        }
    }
    if (scaling == ScalingMode::SqrtAlphaN && rect_index <= 0.0) {
        throw std::domain_error("ensemble: inner-edge scaling requires alpha > 0 (L > 0)");
    }
}

double EnsembleParams::scale_factor() const {
    switch (scaling) {
        case ScalingMode::None: return 1.0;
        case ScalingMode::SqrtN: return std::sqrt(static_cast<double>(n));
        case ScalingMode::SqrtAlphaN: return std::sqrt(rect_index);
        case ScalingMode::SqrtOnePlusAlphaN:
            return std::sqrt(rect_index + static_cast<double>(n));
    }
    return 1.0;
}

void DistributionCurve::validate_grid() const {
    if (grid.size() != values.size()) throw std::domain_error("curve: grid/value size mismatch");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw std::domain_error("curve: non-finite abscissa");
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::domain_error("curve: grid must be strictly increasing");
        }
    }
}

}  // namespace extremal
