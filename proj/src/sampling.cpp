#include "extremal/sampling.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "extremal/types.hpp"

namespace extremal::sampling {

namespace {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

}  // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream) : pos_(4) {
    counter_[0] = 0;
    counter_[1] = 0;
    counter_[2] = static_cast<std::uint32_t>(stream);
    counter_[3] = static_cast<std::uint32_t>(stream >> 32);
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
}

void Philox::refill() {
    std::uint32_t c0 = counter_[0], c1 = counter_[1], c2 = counter_[2], c3 = counter_[3];
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, c0, hi0, lo0);
        mulhilo(kPhiloxM1, c2, hi1, lo1);
        const std::uint32_t n0 = hi1 ^ c1 ^ k0;
        const std::uint32_t n1 = lo1;
        const std::uint32_t n2 = hi0 ^ c3 ^ k1;
        const std::uint32_t n3 = lo0;
        c0 = n0;
        c1 = n1;
        c2 = n2;
        c3 = n3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    out_[0] = c0;
    out_[1] = c1;
    out_[2] = c2;
    out_[3] = c3;
    // bump the low 64 counter bits; the high bits stay the stream id
    if (++counter_[0] == 0) ++counter_[1];
    pos_ = 0;
}

std::uint32_t Philox::next_u32() {
    if (pos_ >= 4) refill();
    return out_[pos_++];
}

std::uint64_t Philox::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double Philox::next_double() {
    // (v + 1) / 2^53 in (0, 1]
    const std::uint64_t v = next_u64() >> 11;
    return (static_cast<double>(v) + 1.0) * 0x1.0p-53;
}

double Philox::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    cached_normal_ = rad * std::sin(ang);
    has_cached_normal_ = true;
    return rad * std::cos(ang);
}

double gamma_draw(double shape, Philox& rng) {
    if (!(shape >= 1.0)) {
        throw std::domain_error("gamma_draw: shape must be >= 1 (smallest radial shape is 1)");
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

SampleBatch sample_extremes_gamma(const EnsembleParams& params, std::size_t k_draws,
                                  std::uint64_t seed) {
    params.validate();
    if (k_draws < 1) throw std::domain_error("sample_extremes_gamma: needs at least one draw");
    SampleBatch batch;
    batch.params = params;
    batch.seed = seed;
    batch.r_min.resize(k_draws);
    batch.r_max.resize(k_draws);
    const double inv_scale = 1.0 / params.scale_factor();
    const double L = params.rect_index;
    for (std::size_t i = 0; i < k_draws; ++i) {
        Philox rng(seed, i);
        double g_min = std::numeric_limits<double>::infinity();
        double g_max = 0.0;
        for (std::int64_t k = 1; k <= params.n; ++k) {
            const double g = gamma_draw(L + static_cast<double>(k), rng);
            g_min = std::min(g_min, g);
            g_max = std::max(g_max, g);
        }
        batch.r_min[i] = std::sqrt(g_min) * inv_scale;
        batch.r_max[i] = std::sqrt(g_max) * inv_scale;
    }
    return batch;
}

SampleBatch sample_extremes_matrix(const EnsembleParams& params, std::size_t k_draws,
                                   std::uint64_t seed) {
    params.validate();
    if (params.rect_index != 0.0) {
        throw std::domain_error(
            "sample_extremes_matrix: only the plain ensemble (L = 0) has a matrix model");
    }
    if (params.n > 512) {
        throw std::domain_error("sample_extremes_matrix: dense eigensolve budget is n <= 512");
    }
    if (k_draws < 1) throw std::domain_error("sample_extremes_matrix: needs at least one draw");
    SampleBatch batch;
    batch.params = params;
    batch.seed = seed;
    batch.r_min.resize(k_draws);
    batch.r_max.resize(k_draws);
    const double inv_scale = 1.0 / params.scale_factor();
    const int n = static_cast<int>(params.n);
    const double sigma = std::sqrt(0.5);  // per-component variance 1/2
    Eigen::MatrixXcd m(n, n);
    std::uint64_t stream = 0;
    std::size_t discarded = 0;
    for (std::size_t i = 0; i < k_draws; ++i) {
        for (;;) {
            Philox rng(seed, stream++);
            for (int col = 0; col < n; ++col) {
                for (int row = 0; row < n; ++row) {
                    m(row, col) =
                        std::complex<double>(sigma * rng.next_normal(), sigma * rng.next_normal());
                }
            }
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
            if (solver.info() != Eigen::Success) {
                ++discarded;
                if (discarded > k_draws / 10 + 16) {
                    throw integrity_error("matrix sampler: eigensolver kept failing to converge");
                }
                continue;  // discard, resample from the next substream
            }
            double r_min = std::numeric_limits<double>::infinity();
            double r_max = 0.0;
            for (int j = 0; j < n; ++j) {
                const double mod = std::abs(solver.eigenvalues()[j]);
                r_min = std::min(r_min, mod);
                r_max = std::max(r_max, mod);
            }
            batch.r_min[i] = r_min * inv_scale;
            batch.r_max[i] = r_max * inv_scale;
            break;
        }
    }
    return batch;
}

}  // namespace extremal::sampling
