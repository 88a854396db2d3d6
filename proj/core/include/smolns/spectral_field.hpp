#pragma once

#include <complex>
#include <span>
#include <vector>

#include "smolns/grid.hpp"

namespace smolns {

// Real scalar field on the periodic square stored as Fourier series
// coefficients: u(x) = sum_k coeff(k) exp(i k.x). Layout is row-major
// [iy][ix] over coefficient indices, ix the fastest; the wavenumber of
// index i is i for i <= n/2 and i-n above. Real-valuedness is the
// Hermitian symmetry coeff(-k) = conj(coeff(k)).
class SpectralField2D {
public:
    SpectralField2D() = default;
    explicit SpectralField2D(const GridSpec2D& grid)
        : grid_(grid), coeffs_(grid.size(), std::complex<double>(0.0, 0.0)) {}

    static SpectralField2D from_physical(const GridSpec2D& grid,
                                         std::span<const double> values);

    const GridSpec2D& grid() const { return grid_; }
    std::size_t size() const { return coeffs_.size(); }

    std::complex<double>& at(int ix, int iy) {
        return coeffs_[static_cast<std::size_t>(iy) * grid_.nx + ix];
    }
    const std::complex<double>& at(int ix, int iy) const {
        return coeffs_[static_cast<std::size_t>(iy) * grid_.nx + ix];
    }
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

    std::vector<double> to_physical() const;
    void to_physical(std::span<double> out) const;

    // Projects onto the Hermitian-symmetric (real-valued) part.
    void enforce_real();
    // Max |coeff(-k) - conj(coeff(k))| over the grid.
    double hermitian_defect() const;

    double mean() const { return coeffs_.empty() ? 0.0 : coeffs_[0].real(); }

    SpectralField2D& operator+=(const SpectralField2D& o);
    SpectralField2D& operator-=(const SpectralField2D& o);
    SpectralField2D& operator*=(double a);

private:
    GridSpec2D grid_{};
    std::vector<std::complex<double>> coeffs_;
};

SpectralField2D operator+(SpectralField2D a, const SpectralField2D& b);
SpectralField2D operator-(SpectralField2D a, const SpectralField2D& b);
SpectralField2D operator*(double a, SpectralField2D u);

// Throws std::invalid_argument when the two fields live on different grids.
void require_same_grid(const SpectralField2D& a, const SpectralField2D& b);

// Spectral derivative along axis 0 (x) or 1 (y). The unpaired Nyquist mode
// is zeroed, the standard convention for odd derivatives of real data.
SpectralField2D derivative(const SpectralField2D& u, int axis);
SpectralField2D laplacian(const SpectralField2D& u);

// Zeroes every mode outside the grid's dealias band.
void dealias_inplace(SpectralField2D& u);

// Pointwise physical-space product, dealiased.
SpectralField2D multiply(const SpectralField2D& a, const SpectralField2D& b);

// Physical-space helpers used by the pseudo-spectral pipelines.
std::vector<double> multiply_physical(std::span<const double> a, std::span<const double> b);
void add_scaled(std::span<double> acc, std::span<const double> v, double scale);

}  // namespace smolns
