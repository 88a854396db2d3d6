#include "smolns/ladder.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>

namespace smolns {

namespace {

// Mollifier bump on (0,1); zero outside.
double bump(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return std::exp(-1.0 / (u * (1.0 - u)));
}

// Prefix integral of the bump over [0,s], fixed 512-panel composite Simpson.
// The panel count is fixed so the profile is a deterministic function of s.
double bump_prefix(double s) {
    constexpr int kPanels = 512;
    if (s <= 0.0) return 0.0;
    if (s > 1.0) s = 1.0;
    const double h = s / kPanels;
    double acc = bump(0.0) + bump(s);
    for (int i = 1; i < kPanels; ++i) acc += (i % 2 ? 4.0 : 2.0) * bump(i * h);
    return acc * h / 3.0;
}

double bump_total() {
    static const double total = bump_prefix(1.0);
    return total;
}

// chi as a function of r^2 (exact radii arrive as k^2 * 2^{-2q}, which is
// an exact double, so equal radii across scales hash to equal weights).
double chi_of_r2(double r2) {
    if (r2 <= 0.25) return 1.0;
    if (r2 >= 1.0) return 0.0;
    const double s = 2.0 * (std::sqrt(r2) - 0.5);
    return 1.0 - bump_prefix(s) / bump_total();
}

std::uint64_t key_of(double r2) {
    std::uint64_t k;
    std::memcpy(&k, &r2, sizeof k);
    return k;
}

}  // namespace

DyadicLadder::DyadicLadder(const GridSpec2D& grid)
    : grid_(grid), warn_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
    grid_.require_valid();
    const int radius = std::min(grid_.nx, grid_.ny) / 2;
    q_max_ = 0;
    while ((1 << (q_max_ + 1)) <= radius) ++q_max_;
    if (q_max_ < 1)
        throw std::invalid_argument("grid too small to host two dyadic rings");

    // Memoize chi by the exact bits of r^2; distinct integer |xi|^2 values
    // are few, so profile sampling is cheap.
    std::map<std::uint64_t, double> memo;
    auto chi_cached = [&](double r2) {
        auto it = memo.find(key_of(r2));
        if (it != memo.end()) return it->second;
        double v = chi_of_r2(r2);
        memo.emplace(key_of(r2), v);
        return v;
    };

    const std::size_t n = grid_.size();
    low_w_.assign(q_max_ + 3, std::vector<double>(n));
    ring_w_.assign(q_max_ + 1, std::vector<double>(n));

    for (int iy = 0; iy < grid_.ny; ++iy) {
        const double ky = grid_.wavenumber_y(iy);
        for (int ix = 0; ix < grid_.nx; ++ix) {
            const double kx = grid_.wavenumber_x(ix);
            const double k2 = kx * kx + ky * ky;
            const std::size_t idx = static_cast<std::size_t>(iy) * grid_.nx + ix;
            for (int q = 0; q <= q_max_ + 2; ++q) {
                // k2 * 2^{-2q} is exact in double arithmetic.
                low_w_[q][idx] = chi_cached(std::ldexp(k2, -2 * q));
            }
            for (int q = 0; q <= q_max_; ++q) {
                ring_w_[q][idx] = low_w_[q + 1][idx] - low_w_[q][idx];
            }
        }
    }
}

double DyadicLadder::chi(double r) const { return chi_of_r2(r * r); }

const std::vector<double>& DyadicLadder::ring_weights(int q) const {
    if (q < 0 || q > q_max_) throw std::out_of_range("ring_weights: q outside [0,q_max]");
    return ring_w_[q];
}

const std::vector<double>& DyadicLadder::lowpass_weights(int q) const {
    if (q < 0 || q > q_max_ + 2)
        throw std::out_of_range("lowpass_weights: q outside [0,q_max+2]");
    return low_w_[q];
}

SpectralField2D apply_mode_weights(const SpectralField2D& u, const std::vector<double>& w) {
    SpectralField2D out = u;
    auto& c = out.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= w[i];
    return out;
}

SpectralField2D DyadicLadder::dyadic_block(const SpectralField2D& u, int q) const {
    if (q == kLowBlock) return apply_mode_weights(u, low_w_[0]);
    if (q < kLowBlock || q > q_max_) {
        warn_->fetch_add(1);
        return SpectralField2D(grid_);
    }
    return apply_mode_weights(u, ring_w_[q]);
}

SpectralField2D DyadicLadder::low_pass(const SpectralField2D& u, int q) const {
    if (q < 0) return SpectralField2D(grid_);
    if (q > q_max_ + 2) return u;  // weight 1 everywhere, corners included
    return apply_mode_weights(u, low_w_[q]);
}

}  // namespace smolns
