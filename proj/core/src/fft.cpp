#include "specnoise/fft.hpp"

#include <fftw3.h>

namespace specnoise {

namespace {
fftw_complex* fc(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }
}  // namespace

FftPlan1d::FftPlan1d(int n, int sign) : n_(n) {
    std::vector<Complex> scratch(n);
    plan_ = fftw_plan_dft_1d(n, fc(scratch.data()), fc(scratch.data()), sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw NumericError("fftw_plan_dft_1d failed");
}

FftPlan1d::~FftPlan1d() { fftw_destroy_plan(static_cast<fftw_plan>(plan_)); }

void FftPlan1d::execute(Complex* data) const {
    fftw_execute_dft(static_cast<fftw_plan>(plan_), fc(data), fc(data));
}

FftPlanColumns::FftPlanColumns(Complex* data, int n, int howmany, int sign) {
    plan_ = fftw_plan_many_dft(1, &n, howmany, fc(data), nullptr, 1, n,
                               fc(data), nullptr, 1, n, sign, FFTW_ESTIMATE);
    if (!plan_) throw NumericError("fftw_plan_many_dft failed");
}

FftPlanColumns::~FftPlanColumns() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void FftPlanColumns::execute() const {
    fftw_execute(static_cast<fftw_plan>(plan_));
}

std::vector<Complex> dft_forward(const std::vector<Complex>& x) {
    std::vector<Complex> out = x;
    FftPlan1d plan(static_cast<int>(x.size()), -1);
    plan.execute(out.data());
    return out;
}

}  // namespace specnoise
