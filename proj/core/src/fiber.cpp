#include "smolns/fiber.hpp"

#include <cmath>
#include <stdexcept>

#include "smolns/fft.hpp"

namespace smolns {

std::vector<std::complex<double>> fiber_to_coeffs(const FiberField& f) {
    const int nm = f.grid.nm;
    std::vector<std::complex<double>> c(nm);
    for (int i = 0; i < nm; ++i) c[i] = f.values[i];
    fft::forward_many(nm, 1, 1, 1, c.data());
    for (auto& z : c) z *= 1.0 / nm;
    return c;
}

FiberField fiber_from_coeffs(const FiberGrid& grid,
                             const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::complex<double>> buf(coeffs);
    fft::backward_many(grid.nm, 1, 1, 1, buf.data());
    FiberField f(grid);
    for (int i = 0; i < grid.nm; ++i) f.values[i] = buf[i].real();
    return f;
}

KernelSpec make_kernel(const std::string& name, double intensity) {
    if (intensity < 0.0) throw std::invalid_argument("kernel intensity must be >= 0");
    KernelSpec k;
    k.name = name;
    k.intensity = intensity;
    if (name == "maier_saupe") {
        k.cos_coeffs = {0.0, 0.0, -intensity};
    } else if (name == "dipole") {
        k.cos_coeffs = {0.0, -intensity};
    } else if (name == "zero") {
        k.cos_coeffs = {};
    } else {
        throw std::invalid_argument("unknown kernel: " + name);
    }
    return k;
}

namespace {

FiberField apply_multiplier(const FiberField& f, const std::vector<double>& mult) {
    auto c = fiber_to_coeffs(f);
    for (int i = 0; i < f.grid.nm; ++i) c[i] *= mult[i];
    return fiber_from_coeffs(f.grid, c);
}

}  // namespace

FiberMultipliers make_fiber_multipliers(const FiberGrid& grid, double bessel_s) {
    if (bessel_s <= 0.0) throw std::domain_error("smoothing order s must be > 0");
    FiberMultipliers mult;
    const int nm = grid.nm;
    mult.minus_m2.resize(nm);
    mult.bessel.resize(nm);
    mult.deriv_m.resize(nm);
    mult.dealias_mask.resize(nm);
    for (int i = 0; i < nm; ++i) {
        const int m = grid.wavenumber(i);
        mult.minus_m2[i] = -static_cast<double>(m) * m;
        mult.bessel[i] = std::pow(1.0 + static_cast<double>(m) * m, -0.5 * bessel_s);
        mult.deriv_m[i] = (i == nm / 2) ? 0.0 : static_cast<double>(m);
        mult.dealias_mask[i] = std::abs(m) <= grid.dealias_k() ? 1.0 : 0.0;
    }
    return mult;
}

FiberField laplace_beltrami(const FiberField& f) {
    const int nm = f.grid.nm;
    auto c = fiber_to_coeffs(f);
    for (int i = 0; i < nm; ++i) {
        const double m = f.grid.wavenumber(i);
        c[i] *= -m * m;
    }
    return fiber_from_coeffs(f.grid, c);
}

FiberField fiber_grad(const FiberField& f) {
    const int nm = f.grid.nm;
    auto c = fiber_to_coeffs(f);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int i = 0; i < nm; ++i) {
        const double m = (i == nm / 2) ? 0.0 : f.grid.wavenumber(i);
        c[i] *= i_unit * m;
    }
    return fiber_from_coeffs(f.grid, c);
}

FiberField fiber_div(const FiberField& f) { return fiber_grad(f); }

FiberField bessel_smooth(const FiberField& f, double s) {
    if (s <= 0.0) throw std::domain_error("bessel_smooth: s must be > 0");
    const int nm = f.grid.nm;
    auto c = fiber_to_coeffs(f);
    for (int i = 0; i < nm; ++i) {
        const double m = f.grid.wavenumber(i);
        c[i] *= std::pow(1.0 + m * m, -0.5 * s);
    }
    return fiber_from_coeffs(f.grid, c);
}

FiberField mean_field_potential(const FiberField& f, const KernelSpec& kernel) {
    const int nm = f.grid.nm;
    auto c = fiber_to_coeffs(f);
    // Circular convolution: U_hat(m) = 2 pi K_hat(m) f_hat(m).
    for (int i = 0; i < nm; ++i) c[i] *= kTwoPi * kernel.coeff(f.grid.wavenumber(i));
    return fiber_from_coeffs(f.grid, c);
}

double fiber_l2(const FiberField& f) {
    double acc = 0.0;
    for (double v : f.values) acc += v * v;
    return std::sqrt(acc * f.grid.dtheta());
}

double negative_sobolev_norm(const FiberField& f, double s) {
    if (s <= 0.0) throw std::domain_error("negative_sobolev_norm: s must be > 0");
    auto c = fiber_to_coeffs(f);
    double acc = 0.0;
    for (int i = 0; i < f.grid.nm; ++i) {
        const double m = f.grid.wavenumber(i);
        acc += std::pow(1.0 + m * m, -s) * std::norm(c[i]);
    }
    // Parseval on the circle: integral |Hf|^2 = 2 pi sum |(Hf)_m|^2.
    return std::sqrt(kTwoPi * acc);
}

}  // namespace smolns
