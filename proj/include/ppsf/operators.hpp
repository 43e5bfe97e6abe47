#pragma once

#include "ppsf/geometry.hpp"
#include "ppsf/kernels.hpp"

namespace ppsf {

/// Pointwise multiplication by the indicator of [-r*t_half, r*t_half].
/// Idempotent bitwise.
GridFunction apply_time_limit(const Geometry& geom, const GridFunction& f);

/// N x N discretization of the band-limiting convolution:
/// K_ij = h*sin(omega_half*(x_i-x_j)) / (pi*(x_i-x_j)), K_ii = h*omega_half/pi.
Matrix build_band_kernel(const Geometry& geom, Exec mode = Exec::Parallel);

/// M x M restriction of the band kernel to the grid points inside the dilated
/// time window (time-limit, band-limit, time-limit composed). trace =
/// M*h*omega_half/pi. Throws if no grid point falls inside the window.
Matrix build_concentration_matrix(const Geometry& geom, Exec mode = Exec::Parallel);

} // namespace ppsf
