#ifndef SHEARBQ_FFT_HPP
#define SHEARBQ_FFT_HPP

#include <memory>
#include <vector>

#include "shearbq/spectral_field.hpp"

namespace shearbq {

/// 2D complex FFT pair between physical grid values and Fourier
/// coefficients. Forward divides by nx*ny so that
///   f(x_a, y_b) = sum_{k,xi} c(k,xi) exp(i (k x_a + xi y_b)).
/// Plans use FFTW_ESTIMATE, which picks the same algorithm on every run.
class Fft2D {
  public:
    Fft2D(int nx, int ny);
    ~Fft2D();
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    /// physical values (row-major, nx*ny complex) -> coefficients
    void forward(const Complex* phys, SpectralField& spec);
    /// coefficients -> physical values
    void backward(const SpectralField& spec, Complex* phys);

  private:
    struct Impl;
    int nx_, ny_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace shearbq

#endif  // SHEARBQ_FFT_HPP
