#pragma once

#include "specnoise/common.hpp"

namespace specnoise {

struct ComplexEig {
    VecC values;
    MatC vectors;  // column i is the right eigenvector of values[i]
};

/// General complex eigendecomposition (LAPACK zgeev). Throws NumericError
/// on failure to converge.
ComplexEig eig_general(const MatC& a, bool want_vectors = true);

/// Eigenvalues of a real symmetric matrix, ascending (LAPACK dsyev).
VecD eigvals_symmetric(const MatD& a);

/// Eigenvalues of a complex Hermitian matrix, ascending (LAPACK zheev).
VecD eigvals_hermitian(const MatC& a);

/// Full decomposition of a real symmetric matrix (values ascending).
void eig_symmetric(const MatD& a, VecD& values, MatD& vectors);

}  // namespace specnoise
