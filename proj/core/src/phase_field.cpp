#include "smolns/phase_field.hpp"

#include <cmath>
#include <stdexcept>

#include "smolns/fft.hpp"
#include "smolns/parallel.hpp"

namespace smolns {

PhaseField PhaseField::isotropic(const GridSpec2D& grid, const FiberGrid& fiber, double rho) {
    PhaseField f(grid, fiber);
    const double value = rho / kTwoPi;
    for (auto& v : f.values_) v = value;
    return f;
}

double PhaseField::total_mass() const {
    const double cell = grid_.cell_area() * fiber_.dtheta();
    double acc = parallel_sum(fiber_.nm, [&](std::size_t ith) {
        double s = 0.0;
        for (double v : slice(static_cast<int>(ith))) s += v;
        return s;
    });
    return acc * cell;
}

double PhaseField::min_value() const {
    return parallel_min(fiber_.nm, [&](std::size_t ith) {
        double m = slice(static_cast<int>(ith))[0];
        for (double v : slice(static_cast<int>(ith))) m = std::min(m, v);
        return m;
    });
}

std::vector<double> PhaseField::site_density() const {
    std::vector<double> rho(grid_.size(), 0.0);
    for (int ith = 0; ith < fiber_.nm; ++ith) {
        auto s = slice(ith);
        for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += s[i];
    }
    const double dtheta = fiber_.dtheta();
    for (auto& v : rho) v *= dtheta;
    return rho;
}

namespace {

std::vector<double> weighted_moment(const PhaseField& f, const std::vector<double>& w) {
    std::vector<double> out(f.grid().size(), 0.0);
    for (int ith = 0; ith < f.fiber().nm; ++ith) {
        auto s = f.slice(ith);
        const double wi = w[ith];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += wi * s[i];
    }
    const double dtheta = f.fiber().dtheta();
    for (auto& v : out) v *= dtheta;
    return out;
}

}  // namespace

std::vector<double> PhaseField::angular_moment_cos(int j) const {
    std::vector<double> w(fiber_.nm);
    for (int i = 0; i < fiber_.nm; ++i) w[i] = std::cos(j * fiber_.theta(i));
    return weighted_moment(*this, w);
}

std::vector<double> PhaseField::angular_moment_sin(int j) const {
    std::vector<double> w(fiber_.nm);
    for (int i = 0; i < fiber_.nm; ++i) w[i] = std::sin(j * fiber_.theta(i));
    return weighted_moment(*this, w);
}

PhaseField& PhaseField::operator+=(const PhaseField& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

PhaseField& PhaseField::operator-=(const PhaseField& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

PhaseField& PhaseField::operator*=(double a) {
    for (auto& v : values_) v *= a;
    return *this;
}

void require_same_shape(const PhaseField& a, const PhaseField& b) {
    if (!(a.grid() == b.grid()) || !(a.fiber() == b.fiber()))
        throw std::invalid_argument("phase fields live on different grids");
}

SpectralField2D slice_to_spectral(const PhaseField& f, int itheta) {
    return SpectralField2D::from_physical(f.grid(), f.slice(itheta));
}

void set_slice_from_spectral(PhaseField& f, int itheta, const SpectralField2D& u) {
    u.to_physical(f.slice(itheta));
}

std::vector<std::complex<double>> phase_theta_coeffs(const PhaseField& f) {
    const std::size_t nsites = f.grid().size();
    const int nm = f.fiber().nm;
    std::vector<std::complex<double>> c(f.size());
    const auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
    fft::forward_many(nm, static_cast<int>(nsites), static_cast<int>(nsites), 1, c.data());
    const double scale = 1.0 / nm;
    for (auto& z : c) z *= scale;
    return c;
}

PhaseField phase_from_theta_coeffs(const GridSpec2D& grid, const FiberGrid& fiber,
                                   std::vector<std::complex<double>> coeffs) {
    const std::size_t nsites = grid.size();
    fft::backward_many(fiber.nm, static_cast<int>(nsites), static_cast<int>(nsites), 1,
                       coeffs.data());
    PhaseField f(grid, fiber);
    auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs[i].real();
    return f;
}

double phase_l2(const PhaseField& f) {
    const double cell = f.grid().cell_area() * f.fiber().dtheta();
    double acc = parallel_sum(f.fiber().nm, [&](std::size_t ith) {
        double s = 0.0;
        for (double v : f.slice(static_cast<int>(ith))) s += v * v;
        return s;
    });
    return std::sqrt(acc * cell);
}

}  // namespace smolns
