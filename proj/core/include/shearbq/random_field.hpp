#ifndef SHEARBQ_RANDOM_FIELD_HPP
#define SHEARBQ_RANDOM_FIELD_HPP

#include <cstdint>
#include <random>

#include "shearbq/spectral_field.hpp"

namespace shearbq {

/// Uniform double in [0, 1) from the top 53 bits of the generator output;
/// avoids std::uniform_real_distribution so streams are identical across
/// standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

struct BandSpec {
    int k_min = 1;   ///< smallest |k| populated (k = 0 excluded when >= 1)
    int k_max = 1;   ///< largest |k| populated
    int j_min = 1;   ///< smallest |j| populated on the xi lattice
    int j_max = 2;   ///< largest |j| populated
};

/// Hermitian random field supported on the band, with uniformly random
/// phases and unit-magnitude coefficients, rescaled so that the squared H^n
/// sequence norm equals exactly norm_target^2. Drawn deterministically from
/// `rng`.
SpectralField random_band_field(int nx, int ny, double delta_xi,
                                const BandSpec& band, int sobolev_n,
                                double norm_target, std::mt19937_64& rng);

}  // namespace shearbq

#endif  // SHEARBQ_RANDOM_FIELD_HPP
