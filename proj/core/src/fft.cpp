#include "shearbq/fft.hpp"

#include <fftw3.h>

#include <cstring>

namespace shearbq {

struct Fft2D::Impl {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

Fft2D::Fft2D(int nx, int ny) : nx_(nx), ny_(ny), impl_(new Impl) {
    impl_->buf = fftw_alloc_complex(std::size_t(nx) * ny);
    impl_->fwd = fftw_plan_dft_2d(nx, ny, impl_->buf, impl_->buf,
                                  FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_2d(nx, ny, impl_->buf, impl_->buf,
                                  FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2D::~Fft2D() {
    fftw_destroy_plan(impl_->fwd);
    fftw_destroy_plan(impl_->bwd);
    fftw_free(impl_->buf);
}

void Fft2D::forward(const Complex* phys, SpectralField& spec) {
    const std::size_t n = std::size_t(nx_) * ny_;
    std::memcpy(impl_->buf, phys, n * sizeof(Complex));
    fftw_execute(impl_->fwd);
    const double scale = 1.0 / double(n);
    Complex* out = spec.data();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = scale * Complex{impl_->buf[i][0], impl_->buf[i][1]};
}

void Fft2D::backward(const SpectralField& spec, Complex* phys) {
    const std::size_t n = std::size_t(nx_) * ny_;
    std::memcpy(impl_->buf, spec.data(), n * sizeof(Complex));
    fftw_execute(impl_->bwd);
    std::memcpy(phys, impl_->buf, n * sizeof(Complex));
}

}  // namespace shearbq
