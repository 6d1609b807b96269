#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace extremal {

// Probability carried in log space.  `underflowed` marks values whose
// linear-scale image is exactly 0.0 in double (log below about -745);
// downstream products must treat such factors as exact zeros rather than
// propagating NaNs across a curve.
struct LogProb {
    double log_value = 0.0;
    bool underflowed = false;

    static LogProb zero() {
        return {-std::numeric_limits<double>::infinity(), true};
    }
    static LogProb one() { return {0.0, false}; }

    double prob() const { return underflowed ? 0.0 : std::exp(log_value); }
};

// Raised when a numerical self-check fails (non-monotone CDF handed to a
// KS test, degenerate marginals, ...).  Maps to CLI exit code 3.
class integrity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kLogUnderflow = -745.0;  // exp() == 0.0 below this

}  // namespace extremal
