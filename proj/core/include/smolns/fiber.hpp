#pragma once

#include <complex>
#include <string>
#include <vector>

#include "smolns/grid.hpp"

namespace smolns {

// Real function of the rod angle at one spatial site, collocated on the
// uniform theta grid. On S^1 the fiber gradient and divergence both reduce
// to d/dtheta and every operator here is an exact Fourier multiplier.
struct FiberField {
    FiberGrid grid;
    std::vector<double> values;

    explicit FiberField(const FiberGrid& g) : grid(g), values(g.nm, 0.0) {}
    FiberField(const FiberGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {}
};

// Angular spectra (series coefficients: f = sum_m c_m exp(i m theta)).
std::vector<std::complex<double>> fiber_to_coeffs(const FiberField& f);
FiberField fiber_from_coeffs(const FiberGrid& grid,
                             const std::vector<std::complex<double>>& coeffs);

// Convolution kernel K(theta - theta') = sum_j cos_coeffs[j] cos(j dtheta).
// Even in the angle difference, hence symmetric K(m,q) = K(q,m); smooth by
// construction (finite cosine series).
struct KernelSpec {
    std::string name = "maier_saupe";
    double intensity = 1.0;             // b >= 0
    std::vector<double> cos_coeffs;     // index j is the cos(j .) coefficient

    // Fourier coefficient K_hat(m) of the kernel profile.
    double coeff(int m) const {
        int j = m < 0 ? -m : m;
        if (j >= static_cast<int>(cos_coeffs.size())) return 0.0;
        return j == 0 ? cos_coeffs[0] : 0.5 * cos_coeffs[j];
    }
};

// Named kernels: "maier_saupe" K = -b cos(2 dtheta), "dipole" K = -b cos(dtheta),
// "zero". Throws std::invalid_argument for unknown names.
KernelSpec make_kernel(const std::string& name, double intensity);

// Laplace-Beltrami on S^1: multiplier -m^2.
FiberField laplace_beltrami(const FiberField& f);
// Fiber gradient and divergence (both d/dtheta on S^1, Nyquist zeroed).
FiberField fiber_grad(const FiberField& f);
FiberField fiber_div(const FiberField& f);

// Smoothing operator H = (I - Laplace_g)^{-s/2}: multiplier (1+m^2)^{-s/2}.
// s <= 0 throws std::domain_error.
FiberField bessel_smooth(const FiberField& f, double s);

// Mean-field potential U = K f (circular convolution with the kernel).
FiberField mean_field_potential(const FiberField& f, const KernelSpec& kernel);

double fiber_l2(const FiberField& f);
// ||H f||_{L^2(M)}, the H^{-s} dual norm realized through smoothing.
double negative_sobolev_norm(const FiberField& f, double s);

// Multiplier tables shared with the bulk phase-field pipelines.
struct FiberMultipliers {
    std::vector<double> minus_m2;       // -m^2 (diffusion)
    std::vector<double> bessel;         // (1+m^2)^{-s/2}
    std::vector<double> deriv_m;        // m with Nyquist zeroed (for i*m)
    std::vector<double> dealias_mask;   // 1 inside the 2/3 band, else 0
};
FiberMultipliers make_fiber_multipliers(const FiberGrid& grid, double bessel_s);

}  // namespace smolns
