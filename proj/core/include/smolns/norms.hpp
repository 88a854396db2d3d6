#pragma once

#include "smolns/ladder.hpp"
#include "smolns/spectral_field.hpp"

namespace smolns {

// Norm conventions: L^p norms integrate over the full box [0,2pi)^2 with
// no volume normalization, evaluated by the trapezoidal (= rectangle, the
// grid is periodic) rule on collocation points; p = infinity is the max
// over collocation points. ||cos x1||_{L^2} = pi*sqrt(2) under this
// convention.
double lebesgue_norm(const SpectralField2D& u, double p);
double lebesgue_norm_physical(std::span<const double> values, double cell_area, double p);

// Besov (semi-)norm over the grid-resolvable ring range q in [0, q_max];
// r is the summation exponent (infinity for the sup). When inhomogeneous
// is set the S_0 low-block L^p norm is added, matching the inhomogeneous
// norm definition.
double besov_seminorm(const SpectralField2D& u, const DyadicLadder& ladder, double s,
                      double p, double r, bool inhomogeneous = false);

// Heat propagator: multiplies each mode by exp(-nu t |k|^2). t < 0 throws
// std::domain_error.
SpectralField2D heat_propagate(const SpectralField2D& u, double t, double nu);

// Inhomogeneous Sobolev norm sqrt( (2pi)^2 sum_k (1+|k|^2)^s |u_k|^2 ),
// Parseval-consistent so order 0 equals the L^2 norm.
double sobolev_norm(const SpectralField2D& u, double order);

}  // namespace smolns
