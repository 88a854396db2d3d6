#include "smolns/spectral_field.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "smolns/fft.hpp"

namespace smolns {

SpectralField2D SpectralField2D::from_physical(const GridSpec2D& grid,
                                               std::span<const double> values) {
    assert(values.size() == grid.size());
    SpectralField2D u(grid);
    auto& c = u.coeffs_;
    for (std::size_t i = 0; i < values.size(); ++i) c[i] = values[i];
    fft::forward_2d(grid.ny, grid.nx, c.data());
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& z : c) z *= scale;
    return u;
}

std::vector<double> SpectralField2D::to_physical() const {
    std::vector<double> out(grid_.size());
    to_physical(out);
    return out;
}

void SpectralField2D::to_physical(std::span<double> out) const {
    assert(out.size() == grid_.size());
    std::vector<std::complex<double>> buf(coeffs_);
    fft::backward_2d(grid_.ny, grid_.nx, buf.data());
    for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
}

void SpectralField2D::enforce_real() {
    const int nx = grid_.nx, ny = grid_.ny;
    for (int iy = 0; iy < ny; ++iy) {
        const int jy = (ny - iy) % ny;
        for (int ix = 0; ix < nx; ++ix) {
            const int jx = (nx - ix) % nx;
            if (iy > jy || (iy == jy && ix > jx)) continue;
            const std::complex<double> a = at(ix, iy);
            const std::complex<double> b = at(jx, jy);
            const std::complex<double> h = 0.5 * (a + std::conj(b));
            at(ix, iy) = h;
            at(jx, jy) = std::conj(h);
        }
    }
}

double SpectralField2D::hermitian_defect() const {
    const int nx = grid_.nx, ny = grid_.ny;
    double worst = 0.0;
    for (int iy = 0; iy < ny; ++iy) {
        const int jy = (ny - iy) % ny;
        for (int ix = 0; ix < nx; ++ix) {
            const int jx = (nx - ix) % nx;
            worst = std::max(worst, std::abs(at(ix, iy) - std::conj(at(jx, jy))));
        }
    }
    return worst;
}

SpectralField2D& SpectralField2D::operator+=(const SpectralField2D& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SpectralField2D& SpectralField2D::operator-=(const SpectralField2D& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SpectralField2D& SpectralField2D::operator*=(double a) {
    for (auto& z : coeffs_) z *= a;
    return *this;
}

SpectralField2D operator+(SpectralField2D a, const SpectralField2D& b) { return a += b; }
SpectralField2D operator-(SpectralField2D a, const SpectralField2D& b) { return a -= b; }
SpectralField2D operator*(double a, SpectralField2D u) { return u *= a; }

void require_same_grid(const SpectralField2D& a, const SpectralField2D& b) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("spectral fields live on different grids");
}

SpectralField2D derivative(const SpectralField2D& u, int axis) {
    if (axis != 0 && axis != 1) throw std::invalid_argument("derivative: axis must be 0 or 1");
    const GridSpec2D& g = u.grid();
    SpectralField2D d(g);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int iy = 0; iy < g.ny; ++iy) {
        const int ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const int kx = g.wavenumber_x(ix);
            int k = axis == 0 ? kx : ky;
            // Unpaired Nyquist mode carries no usable odd-derivative phase.
            if ((axis == 0 && ix == g.nx / 2) || (axis == 1 && iy == g.ny / 2)) k = 0;
            d.at(ix, iy) = i_unit * static_cast<double>(k) * u.at(ix, iy);
        }
    }
    return d;
}

SpectralField2D laplacian(const SpectralField2D& u) {
    const GridSpec2D& g = u.grid();
    SpectralField2D d(g);
    for (int iy = 0; iy < g.ny; ++iy) {
        const double ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double kx = g.wavenumber_x(ix);
            d.at(ix, iy) = -(kx * kx + ky * ky) * u.at(ix, iy);
        }
    }
    return d;
}

void dealias_inplace(SpectralField2D& u) {
    const GridSpec2D& g = u.grid();
    for (int iy = 0; iy < g.ny; ++iy) {
        const int ky = g.wavenumber_y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const int kx = g.wavenumber_x(ix);
            if (!g.in_dealias_band(kx, ky)) u.at(ix, iy) = 0.0;
        }
    }
}

SpectralField2D multiply(const SpectralField2D& a, const SpectralField2D& b) {
    require_same_grid(a, b);
    std::vector<double> pa = a.to_physical();
    std::vector<double> pb = b.to_physical();
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    SpectralField2D out = SpectralField2D::from_physical(a.grid(), pa);
    dealias_inplace(out);
    return out;
}

std::vector<double> multiply_physical(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

void add_scaled(std::span<double> acc, std::span<const double> v, double scale) {
    assert(acc.size() == v.size());
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += scale * v[i];
}

}  // namespace smolns
