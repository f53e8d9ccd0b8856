#include "shearbq/random_field.hpp"

#include <cmath>

#include "shearbq/energies.hpp"

namespace shearbq {

SpectralField random_band_field(int nx, int ny, double delta_xi,
                                const BandSpec& band, int sobolev_n,
                                double norm_target, std::mt19937_64& rng) {
    SpectralField f(nx, ny, delta_xi);
    // Fill the k > 0 half plane (plus the k = 0, j > 0 half line when the
    // band includes it) and mirror conjugates, in a fixed traversal order.
    for (int k = band.k_min; k <= band.k_max; ++k) {
        for (int j = -band.j_max; j <= band.j_max; ++j) {
            if (std::abs(j) < band.j_min) continue;
            if (k == 0 && j <= 0) continue;
            const double phase = 2.0 * M_PI * uniform01(rng);
            const Complex c{std::cos(phase), std::sin(phase)};
            f.at_mode(k, j) = c;
            f.at_mode(-k, -j) = std::conj(c);
        }
    }
    const double norm = std::sqrt(norm_hn_sq(f, sobolev_n));
    if (norm > 0.0 && norm_target > 0.0) {
        const double scale = norm_target / norm;
        for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] *= scale;
    }
    return f;
}

}  // namespace shearbq
