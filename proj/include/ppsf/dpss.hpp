#pragma once

#include <cstddef>
#include <vector>

namespace ppsf {

struct DpssPair {
    std::vector<double> sequence;   // unit l2 norm, first nonzero positive
    double concentration = 0.0;     // Rayleigh quotient against the sinc matrix
};

/// k-th discrete prolate spheroidal sequence of the given length and
/// normalized half-bandwidth W in (0, 1/2), via the commuting symmetric
/// tridiagonal matrix (diagonal ((L-1-2i)/2)^2 * cos(2 pi W), off-diagonal
/// i(L-i)/2). The concentration is computed independently as v' S v with
/// S_ij = sin(2 pi W (i-j)) / (pi (i-j)), S_ii = 2W. Used as a verification
/// backend for the dense route; the two never share an eigensolve.
DpssPair dpss_oracle(std::size_t sequence_length, double normalized_half_bandwidth,
                     std::size_t k);

} // namespace ppsf
