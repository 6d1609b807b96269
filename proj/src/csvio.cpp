#include "extremal/csvio.hpp"

#include <cstdio>

namespace extremal::csvio {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Meta params_meta(const EnsembleParams& params) {
    Meta m;
    m.emplace_back("ensemble", params.rect_index == 0.0 && !params.alpha ? "ginibre" : "induced");
    m.emplace_back("n", std::to_string(params.n));
    if (params.alpha) m.emplace_back("alpha", format_double(*params.alpha));
    m.emplace_back("rect_index", format_double(params.rect_index));
    m.emplace_back("scaling", to_string(params.scaling));
    return m;
}

namespace {

void write_meta(std::ostream& os, const Meta& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
}

}  // namespace

void write_curve(std::ostream& os, const DistributionCurve& curve, const Meta& extra) {
    Meta meta;
    meta.emplace_back("law", curve.law);
    for (auto& kv : params_meta(curve.params)) meta.push_back(kv);
    for (auto& kv : extra) meta.push_back(kv);
    write_meta(os, meta);
    os << "r,value\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        os << format_double(curve.grid[i]) << ',' << format_double(curve.values[i]) << "\n";
    }
}

void write_samples(std::ostream& os, const sampling::SampleBatch& batch, const Meta& extra) {
    Meta meta = params_meta(batch.params);
    meta.emplace_back("seed", std::to_string(batch.seed));
    meta.emplace_back("count", std::to_string(batch.count()));
    meta.emplace_back("generator", "philox4x32-10");
    for (auto& kv : extra) meta.push_back(kv);
    write_meta(os, meta);
    os << "r_min,r_max\n";
    for (std::size_t i = 0; i < batch.count(); ++i) {
        os << format_double(batch.r_min[i]) << ',' << format_double(batch.r_max[i]) << "\n";
    }
}

}  // namespace extremal::csvio
