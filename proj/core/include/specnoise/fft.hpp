#pragma once

#include <vector>

#include "specnoise/common.hpp"

namespace specnoise {

/// In-place 1D complex FFT of fixed length, reusable on any buffer.
/// Unnormalized (FFTW convention); sign -1 forward, +1 backward.
/// Plans are created with FFTW_ESTIMATE so results are run-to-run
/// deterministic.
class FftPlan1d {
public:
    FftPlan1d(int n, int sign);
    ~FftPlan1d();
    FftPlan1d(const FftPlan1d&) = delete;
    FftPlan1d& operator=(const FftPlan1d&) = delete;

    void execute(Complex* data) const;
    int size() const { return n_; }

private:
    int n_;
    void* plan_;
};

/// In-place batched FFT over all columns of an n x howmany buffer,
/// planned against that specific buffer.
class FftPlanColumns {
public:
    FftPlanColumns(Complex* data, int n, int howmany, int sign);
    ~FftPlanColumns();
    FftPlanColumns(const FftPlanColumns&) = delete;
    FftPlanColumns& operator=(const FftPlanColumns&) = delete;

    void execute() const;

private:
    void* plan_;
};

/// Convenience one-shot forward DFT: X_k = sum_q x_q exp(-2 pi i k q / n).
std::vector<Complex> dft_forward(const std::vector<Complex>& x);

}  // namespace specnoise
