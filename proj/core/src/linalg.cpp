#include "specnoise/linalg.hpp"

#include <lapacke.h>

namespace specnoise {

namespace {
lapack_complex_double* lp(MatC& m) {
    return reinterpret_cast<lapack_complex_double*>(m.data());
}
}  // namespace

ComplexEig eig_general(const MatC& a, bool want_vectors) {
    if (a.rows() != a.cols()) throw ConfigError("eig_general: matrix not square");
    const lapack_int n = static_cast<lapack_int>(a.rows());
    MatC work = a;  // zgeev overwrites its input
    ComplexEig out;
    out.values.resize(n);
    if (want_vectors) out.vectors.resize(n, n);
    lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, lp(work), n,
        reinterpret_cast<lapack_complex_double*>(out.values.data()), nullptr, 1,
        want_vectors ? lp(out.vectors) : nullptr, want_vectors ? n : 1);
    if (info != 0)
        throw NumericError("zgeev failed, info=" + std::to_string(info));
    return out;
}

VecD eigvals_symmetric(const MatD& a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    MatD work = a;
    VecD w(n);
    lapack_int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n,
                                    w.data());
    if (info != 0)
        throw NumericError("dsyev failed, info=" + std::to_string(info));
    return w;
}

VecD eigvals_hermitian(const MatC& a) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    MatC work = a;
    VecD w(n);
    lapack_int info =
        LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'L', n, lp(work), n, w.data());
    if (info != 0)
        throw NumericError("zheev failed, info=" + std::to_string(info));
    return w;
}

void eig_symmetric(const MatD& a, VecD& values, MatD& vectors) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    vectors = a;
    values.resize(n);
    lapack_int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'L', n,
                                    vectors.data(), n, values.data());
    if (info != 0)
        throw NumericError("dsyev failed, info=" + std::to_string(info));
}

}  // namespace specnoise
