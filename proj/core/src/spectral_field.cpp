#include "shearbq/spectral_field.hpp"

#include <cmath>

namespace shearbq {

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    for (int i = 0; i < nx_; ++i) {
        const int im = (nx_ - i) % nx_;
        for (int j = 0; j < ny_; ++j) {
            const int jm = (ny_ - j) % ny_;
            const Complex d = at(im, jm) - std::conj(at(i, j));
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

void SpectralField::enforce_hermitian() {
    for (int i = 0; i < nx_; ++i) {
        const int im = (nx_ - i) % nx_;
        for (int j = 0; j < ny_; ++j) {
            const int jm = (ny_ - j) % ny_;
            if (i * ny_ + j > im * ny_ + jm) continue;  // visit each pair once
            const Complex avg =
                0.5 * (at(i, j) + std::conj(at(im, jm)));
            at(i, j) = avg;
            at(im, jm) = std::conj(avg);
        }
    }
}

}  // namespace shearbq
