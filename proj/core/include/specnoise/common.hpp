#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace specnoise {

using Complex = std::complex<double>;
using VecD = Eigen::VectorXd;
using VecC = Eigen::VectorXcd;
using MatD = Eigen::MatrixXd;
using MatC = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Invalid parameters or configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: lost unitarity, failed eigensolve, blow-up (CLI exit code 3).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_g17(double x);

}  // namespace specnoise
