#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace smolns {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_power_of_two(int n);

// Periodic collocation grid on [0,2pi)^2. Resolvable wavenumbers on each
// axis are |k_i| <= n_i/2; radially, fields are considered resolvable inside
// the inscribed ball |k| <= min(nx,ny)/2 (corner modes beyond it are never
// populated by dealiased data). Products zero every mode with
// |k_i| > dealias_fraction * n_i/2.
struct GridSpec2D {
    int nx = 64;
    int ny = 64;
    double dealias_fraction = 2.0 / 3.0;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    double dx() const { return kTwoPi / nx; }
    double dy() const { return kTwoPi / ny; }
    double cell_area() const { return dx() * dy(); }

    int wavenumber_x(int ix) const { return ix <= nx / 2 ? ix : ix - nx; }
    int wavenumber_y(int iy) const { return iy <= ny / 2 ? iy : iy - ny; }

    int dealias_kx() const { return static_cast<int>(std::floor(dealias_fraction * (nx / 2))); }
    int dealias_ky() const { return static_cast<int>(std::floor(dealias_fraction * (ny / 2))); }
    bool in_dealias_band(int kx, int ky) const {
        return std::abs(kx) <= dealias_kx() && std::abs(ky) <= dealias_ky();
    }

    // Radius of the inscribed spectral ball.
    double resolvable_radius() const { return 0.5 * (nx < ny ? nx : ny); }

    // Returns a message per violated invariant; empty when valid.
    std::vector<std::string> validate() const;
    // Throws std::invalid_argument listing every violation.
    void require_valid() const;

    bool operator==(const GridSpec2D&) const = default;
};

// Uniform grid on the fiber S^1 (rod orientation angle).
struct FiberGrid {
    int nm = 32;

    double dtheta() const { return kTwoPi / nm; }
    double theta(int i) const { return dtheta() * i; }
    int wavenumber(int im) const { return im <= nm / 2 ? im : im - nm; }
    int dealias_k() const {
        return static_cast<int>(std::floor((2.0 / 3.0) * (nm / 2)));
    }

    std::vector<std::string> validate() const;
    void require_valid() const;

    bool operator==(const FiberGrid&) const = default;
};

}  // namespace smolns
