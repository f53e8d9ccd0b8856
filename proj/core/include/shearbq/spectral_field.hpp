#ifndef SHEARBQ_SPECTRAL_FIELD_HPP
#define SHEARBQ_SPECTRAL_FIELD_HPP

#include <map>
#include <string>
#include <vector>

#include "shearbq/params.hpp"

namespace shearbq {

/// Dense spectral coefficients on the truncated doubly periodic lattice,
/// stored in the sheared frame. Index layout follows FFT order: the entry
/// (i, j) with i in [0, nx), j in [0, ny) holds wavenumber
///   k  = i <= nx/2 ? i : i - nx          (integers on the x-torus)
///   xi = (j <= ny/2 ? j : j - ny) * delta_xi.
/// The physical-frame vertical frequency of a stored mode at frame time t is
/// xi - beta*k*t.
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(int nx, int ny, double delta_xi, double frame_time = 0.0)
        : nx_(nx), ny_(ny), delta_xi_(delta_xi), frame_time_(frame_time),
          data_(std::size_t(nx) * ny, Complex{0.0, 0.0}) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double delta_xi() const { return delta_xi_; }
    double frame_time() const { return frame_time_; }
    void set_frame_time(double t) { frame_time_ = t; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    Complex& at(int i, int j) { return data_[std::size_t(i) * ny_ + j]; }
    const Complex& at(int i, int j) const {
        return data_[std::size_t(i) * ny_ + j];
    }

    int k_of(int i) const { return i <= nx_ / 2 ? i : i - nx_; }
    double xi_of(int j) const {
        return (j <= ny_ / 2 ? j : j - ny_) * delta_xi_;
    }

    /// Signed-index access; k in (-nx/2, nx/2], jxi likewise.
    Complex& at_mode(int k, int jxi) {
        return at(k >= 0 ? k : k + nx_, jxi >= 0 ? jxi : jxi + ny_);
    }
    const Complex& at_mode(int k, int jxi) const {
        return at(k >= 0 ? k : k + nx_, jxi >= 0 ? jxi : jxi + ny_);
    }

    /// Largest |data(-k,-xi) - conj(data(k,xi))| over all paired modes.
    /// Zero (to rounding) whenever the field represents a real quantity.
    double hermitian_defect() const;

    /// Overwrites each conjugate pair with its Hermitian average and zeroes
    /// the imaginary part of self-paired modes.
    void enforce_hermitian();

    /// Sum of |coefficient|^2 weighted by weight(k, xi).
    template <class Weight>
    double weighted_norm_sq(Weight w) const {
        double acc = 0.0;
        for (int i = 0; i < nx_; ++i) {
            const int k = k_of(i);
            for (int j = 0; j < ny_; ++j) {
                const double xi = xi_of(j);
                acc += w(k, xi) * std::norm(at(i, j));
            }
        }
        return acc;
    }

  private:
    int nx_ = 0;
    int ny_ = 0;
    double delta_xi_ = 1.0;
    double frame_time_ = 0.0;
    std::vector<Complex> data_;
};

/// Time-stamped values of the tracked energy functionals.
struct EnergyReport {
    struct Entry {
        double value = 0.0;
        double dissipation = 0.0;
    };
    double time = 0.0;
    std::map<std::string, Entry> entries;

    double value(const std::string& name) const {
        return entries.at(name).value;
    }
    double dissipation(const std::string& name) const {
        return entries.at(name).dissipation;
    }
};

}  // namespace shearbq

#endif  // SHEARBQ_SPECTRAL_FIELD_HPP
