#include "ppsf/lapack.hpp"

#include <string>

#include "ppsf/errors.hpp"

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
             double* w, double* work, const int* lwork, int* iwork, const int* liwork,
             int* info);
void dstevd_(const char* jobz, const int* n, double* d, double* e, double* z,
             const int* ldz, double* work, const int* lwork, int* iwork,
             const int* liwork, int* info);
void openblas_set_num_threads(int);
}

namespace ppsf {

namespace {

// Factorizations stay single-threaded so results are bitwise reproducible
// regardless of the ambient thread settings.
void pin_single_thread() {
    static const bool done = [] {
        openblas_set_num_threads(1);
        return true;
    }();
    (void)done;
}

[[noreturn]] void fail(const char* routine, int info, int n) {
    throw numeric_error(std::string(routine) + " failed: info=" + std::to_string(info) +
                        " at order " + std::to_string(n) +
                        (info > 0 ? " (no convergence; matrix likely ill-conditioned)"
                                  : " (bad argument)"));
}

} // namespace

EigResult sym_eig(Matrix a) {
    if (a.rows != a.cols) throw validation_error("sym_eig: matrix not square");
    pin_single_thread();
    const int n = int(a.rows);
    EigResult res;
    res.values.assign(a.rows, 0.0);
    if (n == 0) return res;

    // Row-major symmetric input doubles as column-major input; on exit the
    // column-major eigenvector columns are exactly the row-major buffer rows.
    const char jobz = 'V', uplo = 'L';
    int info = 0, lwork = -1, liwork = -1;
    double work_query = 0.0;
    int iwork_query = 0;
    dsyevd_(&jobz, &uplo, &n, a.data.data(), &n, res.values.data(), &work_query, &lwork,
            &iwork_query, &liwork, &info);
    if (info != 0) fail("dsyevd workspace query", info, n);

    lwork = int(work_query);
    liwork = iwork_query;
    std::vector<double> work(static_cast<std::size_t>(lwork));
    std::vector<int> iwork(static_cast<std::size_t>(liwork));
    dsyevd_(&jobz, &uplo, &n, a.data.data(), &n, res.values.data(), work.data(), &lwork,
            iwork.data(), &liwork, &info);
    if (info != 0) fail("dsyevd", info, n);

    res.vectors = std::move(a);
    return res;
}

EigResult tridiag_eig(std::vector<double> diag, std::vector<double> offdiag) {
    const int n = int(diag.size());
    if (n == 0) throw validation_error("tridiag_eig: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw validation_error("tridiag_eig: off-diagonal must have length n-1");
    pin_single_thread();

    EigResult res;
    res.vectors = Matrix(diag.size(), diag.size());

    const char jobz = 'V';
    int info = 0, lwork = -1, liwork = -1;
    double work_query = 0.0;
    int iwork_query = 0;
    dstevd_(&jobz, &n, diag.data(), offdiag.data(), res.vectors.data.data(), &n,
            &work_query, &lwork, &iwork_query, &liwork, &info);
    if (info != 0) fail("dstevd workspace query", info, n);

    lwork = int(work_query);
    liwork = iwork_query;
    std::vector<double> work(static_cast<std::size_t>(lwork));
    std::vector<int> iwork(static_cast<std::size_t>(liwork));
    dstevd_(&jobz, &n, diag.data(), offdiag.data(), res.vectors.data.data(), &n,
            work.data(), &lwork, iwork.data(), &liwork, &info);
    if (info != 0) fail("dstevd", info, n);

    res.values = std::move(diag);
    return res;
}

} // namespace ppsf
