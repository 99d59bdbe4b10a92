#include "specnoise/wigner.hpp"

#include "specnoise/fft.hpp"

namespace specnoise {

namespace {

// Zero-pad the n-point spectrum into 2n bins (Nyquist kept on the positive
// side so the embedding is an exact isometry).
void embed_spectrum(const VecC& x, VecC& y) {
    const int n = static_cast<int>(x.size());
    y.setZero(2 * n);
    for (int k = 0; k < n / 2; ++k) y[k] = x[k];
    for (int k = n / 2; k < n; ++k) y[k + n] = x[k];
}

VecC upsample_vec(const VecC& v, const FftPlan1d& fwd_n,
                  const FftPlan1d& bwd_2n) {
    const int n = static_cast<int>(v.size());
    VecC spec = v;
    fwd_n.execute(spec.data());
    VecC out;
    embed_spectrum(spec, out);
    bwd_2n.execute(out.data());
    out /= static_cast<double>(n);
    return out;
}

MatC upsample_cols(const MatC& m) {
    const int n = static_cast<int>(m.rows());
    FftPlan1d fwd(n, -1), bwd(2 * n, +1);
    MatC out(2 * n, m.cols());
    for (int j = 0; j < m.cols(); ++j)
        out.col(j) = upsample_vec(m.col(j), fwd, bwd);
    return out;
}

void band_project_cols(MatC& m) {
    const int nf = static_cast<int>(m.rows());  // 2n
    const int n = nf / 2;
    FftPlan1d fwd(nf, -1), bwd(nf, +1);
    for (int j = 0; j < m.cols(); ++j) {
        VecC col = m.col(j);
        fwd.execute(col.data());
        // zero everything outside the embedded band [0, n/2) U [3n/2, 2n)
        for (int k = n / 2; k < n + n / 2; ++k) col[k] = 0.0;
        bwd.execute(col.data());
        m.col(j) = col / static_cast<double>(nf);
    }
}

}  // namespace

VecC upsample_state(const VecC& psi) {
    const int n = static_cast<int>(psi.size());
    FftPlan1d fwd(n, -1), bwd(2 * n, +1);
    return upsample_vec(psi, fwd, bwd);
}

MatC upsample_matrix(const MatC& u) {
    MatC v = upsample_cols(u);
    return upsample_cols(v.adjoint()).adjoint();
}

MatC band_project(const MatC& rho_fine) {
    MatC m = rho_fine;
    band_project_cols(m);
    MatC mt = m.adjoint();
    band_project_cols(mt);
    return mt.adjoint();
}

MatD wigner_raster(const MatC& rho_fine) {
    const int nf = static_cast<int>(rho_fine.rows());
    MatD w(nf, nf);
    FftPlan1d plan(nf, -1);
    VecC line(nf);
    for (int c = 0; c < nf; ++c) {
        const int jmax = std::min(c, nf - 1 - c);
        line.setZero();
        for (int j = -jmax; j <= jmax; ++j) {
            const int slot = (j + nf) % nf;
            line[slot] = rho_fine(c + j, c - j);
        }
        plan.execute(line.data());
        for (int m = 0; m < nf; ++m) w(c, m) = line[m].real();
    }
    return w;
}

MatC wigner_raster_inverse(const MatD& w) {
    const int nf = static_cast<int>(w.rows());
    MatC x = MatC::Zero(nf, nf);
    FftPlan1d bwd(nf, +1);
    VecC line(nf);
    for (int c = 0; c < nf; ++c) {
        for (int m = 0; m < nf; ++m) line[m] = w(c, m);
        bwd.execute(line.data());
        line /= static_cast<double>(nf);
        const int jmax = std::min(c, nf - 1 - c);
        for (int j = -jmax; j <= jmax; ++j)
            x(c + j, c - j) = line[(j + nf) % nf];
    }
    // The raster only pins the parity-consistent entries; for band-limited
    // rho the projection restores the full matrix: rho = 2 Pi X Pi.
    return 2.0 * band_project(x);
}

MatD wigner_of_state(const VecC& psi, const Grid& grid) {
    VecC fine = upsample_state(psi);
    MatC rho = fine * fine.adjoint();
    MatD w = wigner_raster(rho);
    w *= grid.dq() / (kTwoPi * grid.hbar);
    return w;
}

double fine_momentum(const Grid& grid, int m) {
    const int nf = 2 * grid.n_points;
    const int mm = (m < nf / 2) ? m : m - nf;
    return mm * kTwoPi * grid.hbar / (nf * grid.dq());
}

}  // namespace specnoise
