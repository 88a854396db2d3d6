#pragma once

#include <complex>
#include <span>
#include <vector>

#include "smolns/grid.hpp"
#include "smolns/spectral_field.hpp"

namespace smolns {

// Orientation distribution f(x, y, theta) collocated on (grid x fiber).
// Storage is theta-major: values[((itheta*ny)+iy)*nx+ix], so each theta
// slice is a contiguous 2-D field in the snapshot byte order (x fastest,
// then y, then theta). Spectral operations transform slices (in x) or
// strided pencils (in theta) on demand; all coordinates are treated
// pseudo-spectrally.
class PhaseField {
public:
    PhaseField() = default;
    PhaseField(const GridSpec2D& grid, const FiberGrid& fiber)
        : grid_(grid), fiber_(fiber), values_(grid.size() * fiber.nm, 0.0) {}

    const GridSpec2D& grid() const { return grid_; }
    const FiberGrid& fiber() const { return fiber_; }
    std::size_t size() const { return values_.size(); }

    double& at(int ix, int iy, int itheta) {
        return values_[(static_cast<std::size_t>(itheta) * grid_.ny + iy) * grid_.nx + ix];
    }
    double at(int ix, int iy, int itheta) const {
        return values_[(static_cast<std::size_t>(itheta) * grid_.ny + iy) * grid_.nx + ix];
    }
    std::span<double> slice(int itheta) {
        return {values_.data() + static_cast<std::size_t>(itheta) * grid_.size(), grid_.size()};
    }
    std::span<const double> slice(int itheta) const {
        return {values_.data() + static_cast<std::size_t>(itheta) * grid_.size(), grid_.size()};
    }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    // Uniform state with site density rho: f = rho / (2 pi).
    static PhaseField isotropic(const GridSpec2D& grid, const FiberGrid& fiber,
                                double rho = 1.0);

    double total_mass() const;     // integral over x and theta
    double min_value() const;      // deterministic reduction
    // rho(x) = integral of f over theta, per collocation site.
    std::vector<double> site_density() const;
    // integral of f(x,.) cos(j theta) (or sin) per site.
    std::vector<double> angular_moment_cos(int j) const;
    std::vector<double> angular_moment_sin(int j) const;

    PhaseField& operator+=(const PhaseField& o);
    PhaseField& operator-=(const PhaseField& o);
    PhaseField& operator*=(double a);

private:
    GridSpec2D grid_{};
    FiberGrid fiber_{};
    std::vector<double> values_;
};

void require_same_shape(const PhaseField& a, const PhaseField& b);

// x-spectral view of one theta slice.
SpectralField2D slice_to_spectral(const PhaseField& f, int itheta);
void set_slice_from_spectral(PhaseField& f, int itheta, const SpectralField2D& u);

// Angular spectra of the whole field: coefficient m of site j lives at
// [im * nsites + j], i.e. the same layout as the collocation values.
std::vector<std::complex<double>> phase_theta_coeffs(const PhaseField& f);
PhaseField phase_from_theta_coeffs(const GridSpec2D& grid, const FiberGrid& fiber,
                                   std::vector<std::complex<double>> coeffs);

// sqrt( integral over x and theta of f^2 ), the L^2_x(L^2_theta) norm.
double phase_l2(const PhaseField& f);

}  // namespace smolns
