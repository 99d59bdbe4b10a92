#pragma once

#include "specnoise/common.hpp"
#include "specnoise/grid.hpp"

namespace specnoise {

// Band-limited (trigonometric) doubling machinery behind the Wigner-space
// operations. The fine grid has 2n points of spacing dq/2; upsampling is
// value-preserving (original samples are reproduced exactly), so a matrix
// upsamples to 2 S U S^H with S the zero-padding isometry.

VecC upsample_state(const VecC& psi);
MatC upsample_matrix(const MatC& u);

/// Projects a fine-grid (2n) matrix onto the inner frequency band (the
/// image of the upsampling embedding), both indices.
MatC band_project(const MatC& rho_fine);

/// Unnormalized discrete Wigner raster of a fine-grid matrix:
///   W(c, m) = Re sum_j rho[c+j, c-j] e^{-2 pi i m j / (2n)}
/// with FFT momentum ordering along m.
MatD wigner_raster(const MatC& rho_fine);

/// Inverse of wigner_raster for band-limited rho (exact): rebuilds the
/// parity-consistent entries and fills the rest by band projection.
MatC wigner_raster_inverse(const MatD& w);

/// Wigner function of a coarse-grid state (includes the upsampling):
/// raster of psi~ psi~^H scaled by dq/(2 pi hbar) so that
/// sum W * (dq/2) * dp_fine = integral |psi|^2 dq.
MatD wigner_of_state(const VecC& psi, const Grid& grid);

/// Fine-grid momentum of raster column m (FFT ordering), spacing
/// 2 pi hbar / (2 n dq), full range +- pi hbar / dq.
double fine_momentum(const Grid& grid, int m);

}  // namespace specnoise
