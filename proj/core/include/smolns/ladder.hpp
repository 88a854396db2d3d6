#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "smolns/spectral_field.hpp"

namespace smolns {

// Dyadic Littlewood-Paley ladder on a periodic grid.
//
// chi is a smooth radial bump, identically 1 for |xi| <= 1/2 and 0 for
// |xi| >= 1, built from the normalized integral of the classic mollifier
// profile. The ring cutoff is phi(xi) = chi(xi/2) - chi(xi), supported in
// 1/2 <= |xi| <= 2, so the family telescopes exactly:
//
//   chi(xi) + sum_{q=0..Q} phi(2^{-q} xi) = chi(2^{-Q-1} xi).
//
// With q_max = log2(min(nx,ny)/2), the right side is identically 1 on the
// resolvable ball |xi| <= min(nx,ny)/2, which contains every dealiased
// mode. Block q = -1 denotes the chi low-frequency block.
class DyadicLadder {
public:
    static constexpr int kLowBlock = -1;

    explicit DyadicLadder(const GridSpec2D& grid);

    const GridSpec2D& grid() const { return grid_; }
    int q_min() const { return 0; }
    int q_max() const { return q_max_; }
    bool block_in_range(int q) const { return q >= kLowBlock && q <= q_max_; }

    // Radial profiles (arguments are |xi| scaled to the unit ring).
    double chi(double r) const;
    double phi(double r) const { return chi(0.5 * r) - chi(r); }

    // Sampled mode weights: phi(2^{-q}|xi|) for q in [0, q_max], and
    // chi(2^{-q}|xi|) for q in [0, q_max + 2].
    const std::vector<double>& ring_weights(int q) const;
    const std::vector<double>& lowpass_weights(int q) const;

    // Delta_q: band-pass block. q = -1 selects the chi low block. Out of
    // range returns a zero field and bumps out_of_range_requests().
    SpectralField2D dyadic_block(const SpectralField2D& u, int q) const;

    // S_q: low pass below ring q. q < 0 yields the zero field; large q is
    // the identity on the resolvable ball.
    SpectralField2D low_pass(const SpectralField2D& u, int q) const;

    std::uint64_t out_of_range_requests() const { return warn_->load(); }

private:
    GridSpec2D grid_;
    int q_max_ = 0;
    std::vector<std::vector<double>> ring_w_;  // [q][mode], q in 0..q_max
    std::vector<std::vector<double>> low_w_;   // [q][mode], q in 0..q_max+2
    std::shared_ptr<std::atomic<std::uint64_t>> warn_;
};

SpectralField2D apply_mode_weights(const SpectralField2D& u, const std::vector<double>& w);

}  // namespace smolns
