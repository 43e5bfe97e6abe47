#pragma once

#include <vector>

#include "ppsf/matrix.hpp"

namespace ppsf {

/// Execution mode for the dense kernels. Parallel loops split over output
/// elements with a fixed per-element evaluation order, so both modes produce
/// bitwise-identical results; Serial is kept as the reference implementation
/// for tests and the benchmark.
enum class Exec { Serial, Parallel };

/// C = A * B, naive dense product. Accumulation order over the inner index is
/// fixed regardless of mode.
Matrix multiply(const Matrix& a, const Matrix& b, Exec mode = Exec::Parallel);

std::vector<double> multiply(const Matrix& a, const std::vector<double>& v,
                             Exec mode = Exec::Parallel);

/// Fills the symmetric sinc kernel h*sin(omega*(x_i-x_j))/(pi*(x_i-x_j)) over
/// the given abscissae, diagonal h*omega/pi (the analytic limit). The upper
/// triangle is computed and mirrored, so the result is exactly symmetric.
Matrix sinc_kernel(const std::vector<double>& x, double omega, double weight,
                   Exec mode = Exec::Parallel);

} // namespace ppsf
