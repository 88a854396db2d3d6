#pragma once

#include "smolns/ladder.hpp"
#include "smolns/spectral_field.hpp"

namespace smolns {

// Bony decomposition on the dyadic ladder, with the low block counted as
// Delta_{-1}. For dealiased inputs the identity
//   u v = T_u v + T_v u + R(u,v)
// holds to rounding error because chi + sum phi telescopes exactly on the
// resolvable ball and every product obeys the 2/3 rule.

// T_u v = sum_q S_{q-1} u . Delta_q v (products dealiased).
SpectralField2D paraproduct(const SpectralField2D& u, const SpectralField2D& v,
                            const DyadicLadder& ladder);

// R(u,v) = sum_{|q-q'|<=1} Delta_{q'} u . Delta_q v with q,q' >= -1.
SpectralField2D bony_remainder(const SpectralField2D& u, const SpectralField2D& v,
                               const DyadicLadder& ladder);

}  // namespace smolns
