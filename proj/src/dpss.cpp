#include "ppsf/dpss.hpp"

#include <cmath>
#include <numbers>

#include "ppsf/errors.hpp"
#include "ppsf/lapack.hpp"

namespace ppsf {

DpssPair dpss_oracle(std::size_t sequence_length, double normalized_half_bandwidth,
                     std::size_t k) {
    const std::size_t length = sequence_length;
    const double w = normalized_half_bandwidth;
    if (length == 0) throw validation_error("dpss_oracle: sequence_length must be positive");
    if (!(w > 0.0) || !(w < 0.5))
        throw validation_error("dpss_oracle: half-bandwidth must lie in (0, 1/2)");
    if (k >= length) throw validation_error("dpss_oracle: order k must be below the length");

    // Commuting tridiagonal: same eigenvectors as the sinc matrix, but well
    // separated eigenvalues, so the vectors come out clean.
    const double cos_term = std::cos(2.0 * std::numbers::pi * w);
    std::vector<double> diag(length), offdiag(length == 0 ? 0 : length - 1);
    for (std::size_t i = 0; i < length; ++i) {
        const double half_gap = (double(length) - 1.0 - 2.0 * double(i)) / 2.0;
        diag[i] = half_gap * half_gap * cos_term;
    }
    for (std::size_t i = 1; i < length; ++i)
        offdiag[i - 1] = double(i) * double(length - i) / 2.0;

    EigResult eig = tridiag_eig(std::move(diag), std::move(offdiag));

    // k-th largest tridiagonal eigenvalue pairs with the k-th most
    // concentrated sequence.
    const double* v = eig.vectors.row_ptr(length - 1 - k);
    DpssPair out;
    out.sequence.assign(v, v + length);
    for (double& s : out.sequence) {
        if (s != 0.0) {
            if (s < 0.0)
                for (double& t : out.sequence) t = -t;
            break;
        }
    }

    // Concentration through the actual sinc quadratic form, independent of
    // the dense route's eigensolve.
    const auto& seq = out.sequence;
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t j = 0; j < length; ++j) {
            const double gap = double(i) - double(j);
            const double s_ij =
                i == j ? 2.0 * w
                       : std::sin(2.0 * std::numbers::pi * w * gap) /
                             (std::numbers::pi * gap);
            rayleigh += seq[i] * s_ij * seq[j];
        }
    }
    out.concentration = rayleigh;
    return out;
}

} // namespace ppsf
