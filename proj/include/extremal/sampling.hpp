#pragma once

#include <cstdint>
#include <vector>

#include "extremal/ensemble.hpp"

namespace extremal::sampling {

// Counter-based Philox4x32-10 stream.  The key is the user seed, the high
// counter words select a substream, so draw i always sees the same stream
// regardless of evaluation order; K draws parallelize without coupling.
class Philox {
  public:
    Philox(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    // uniform in (0, 1], 53-bit
    double next_double();
    // standard normal (Box-Muller, pairs cached)
    double next_normal();

  private:
    void refill();
    std::uint32_t counter_[4];
    std::uint32_t key_[2];
    std::uint32_t out_[4];
    int pos_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

// One Gamma(shape, 1) variate, shape >= 1 (Marsaglia-Tsang squeeze).
double gamma_draw(double shape, Philox& rng);

// K (r_min, r_max) pairs with RNG provenance, in the scaling recorded by
// params (both components divided by params.scale_factor()).
struct SampleBatch {
    EnsembleParams params;
    std::uint64_t seed = 0;
    std::vector<double> r_min;
    std::vector<double> r_max;

    std::size_t count() const { return r_min.size(); }
};

// Radial sampler: squared moduli distributed as independent Gamma(k+L, 1),
// k = 1..N; extremes are the min/max of the draws.
SampleBatch sample_extremes_gamma(const EnsembleParams& params, std::size_t k_draws,
                                  std::uint64_t seed);

// Direct matrix sampler (rect_index must be 0, n <= 512): fills N x N
// complex Gaussian matrices, takes eigenvalue moduli via a dense
// non-symmetric eigensolver.  Scaling honored as above.
SampleBatch sample_extremes_matrix(const EnsembleParams& params, std::size_t k_draws,
                                   std::uint64_t seed);

}  // namespace extremal::sampling
