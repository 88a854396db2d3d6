#include "smolns/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace smolns {

double lebesgue_norm_physical(std::span<const double> values, double cell_area, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    if (p < 1.0) throw std::invalid_argument("lebesgue_norm: p must be >= 1 or inf");
    double acc = 0.0;
    if (p == 1.0) {
        for (double v : values) acc += std::abs(v);
    } else if (p == 2.0) {
        for (double v : values) acc += v * v;
    } else {
        for (double v : values) acc += std::pow(std::abs(v), p);
    }
    return std::pow(acc * cell_area, 1.0 / p);
}

double lebesgue_norm(const SpectralField2D& u, double p) {
    return lebesgue_norm_physical(u.to_physical(), u.grid().cell_area(), p);
}

double besov_seminorm(const SpectralField2D& u, const DyadicLadder& ladder, double s,
                      double p, double r, bool inhomogeneous) {
    if (!(u.grid() == ladder.grid()))
        throw std::invalid_argument("besov_seminorm: ladder built for a different grid");
    double acc = 0.0;
    for (int q = 0; q <= ladder.q_max(); ++q) {
        const double term = std::exp2(q * s) * lebesgue_norm(ladder.dyadic_block(u, q), p);
        if (std::isinf(r))
            acc = std::max(acc, term);
        else
            acc += std::pow(term, r);
    }
    double value = std::isinf(r) ? acc : std::pow(acc, 1.0 / r);
    if (inhomogeneous)
        value += lebesgue_norm(ladder.dyadic_block(u, DyadicLadder::kLowBlock), p);
    return value;
}

SpectralField2D heat_propagate(const SpectralField2D& u, double t, double nu) {
    if (t < 0.0) throw std::domain_error("heat_propagate: t must be >= 0");
    const GridSpec2D& g = u.grid();
    SpectralField2D out = u;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            out.at(ix, iy) *= std::exp(-nu * t * (kx * kx + ky * ky));
        }
    }
    return out;
}

double sobolev_norm(const SpectralField2D& u, double order) {
    const GridSpec2D& g = u.grid();
    double acc = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            acc += std::pow(1.0 + kx * kx + ky * ky, order) * std::norm(u.at(ix, iy));
        }
    }
    return std::sqrt(acc * kTwoPi * kTwoPi);
}

}  // namespace smolns
