#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "extremal/ensemble.hpp"
#include "extremal/sampling.hpp"

namespace extremal::csvio {

using Meta = std::vector<std::pair<std::string, std::string>>;

// 17-significant-digit decimal, deterministic for identical inputs.
std::string format_double(double v);

// '#'-prefixed metadata block, header row, data rows.
void write_curve(std::ostream& os, const DistributionCurve& curve, const Meta& extra = {});
void write_samples(std::ostream& os, const sampling::SampleBatch& batch, const Meta& extra = {});

Meta params_meta(const EnsembleParams& params);

}  // namespace extremal::csvio
