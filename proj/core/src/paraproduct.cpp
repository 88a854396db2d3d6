#include "smolns/paraproduct.hpp"

#include <vector>

namespace smolns {

SpectralField2D paraproduct(const SpectralField2D& u, const SpectralField2D& v,
                            const DyadicLadder& ladder) {
    require_same_grid(u, v);
    if (!(u.grid() == ladder.grid()))
        throw std::invalid_argument("paraproduct: ladder built for a different grid");

    const GridSpec2D& g = u.grid();
    std::vector<double> acc(g.size(), 0.0);
    std::vector<double> low(g.size());
    std::vector<double> ring(g.size());
    // q = 0 contributes nothing (S_{-1} = 0).
    for (int q = 1; q <= ladder.q_max(); ++q) {
        ladder.low_pass(u, q - 1).to_physical(low);
        ladder.dyadic_block(v, q).to_physical(ring);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += low[i] * ring[i];
    }
    SpectralField2D out = SpectralField2D::from_physical(g, acc);
    dealias_inplace(out);
    return out;
}

SpectralField2D bony_remainder(const SpectralField2D& u, const SpectralField2D& v,
                               const DyadicLadder& ladder) {
    require_same_grid(u, v);
    if (!(u.grid() == ladder.grid()))
        throw std::invalid_argument("bony_remainder: ladder built for a different grid");

    const GridSpec2D& g = u.grid();
    const int qmax = ladder.q_max();
    const int nblocks = qmax + 2;  // q = -1 .. q_max

    std::vector<std::vector<double>> bu(nblocks), bv(nblocks);
    for (int q = -1; q <= qmax; ++q) {
        bu[q + 1] = ladder.dyadic_block(u, q).to_physical();
        bv[q + 1] = ladder.dyadic_block(v, q).to_physical();
    }

    std::vector<double> acc(g.size(), 0.0);
    for (int q = -1; q <= qmax; ++q) {
        for (int p = std::max(-1, q - 1); p <= std::min(qmax, q + 1); ++p) {
            const auto& a = bu[p + 1];
            const auto& b = bv[q + 1];
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i] * b[i];
        }
    }
    SpectralField2D out = SpectralField2D::from_physical(g, acc);
    dealias_inplace(out);
    return out;
}

}  // namespace smolns
