#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace qi {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Interface tolerances. These are contract values, not tuning knobs.
inline constexpr double kHermTol = 1e-12;      // max |H - H^dag| entry for density matrices
inline constexpr double kTraceTol = 1e-10;     // |tr(rho) - 1|
inline constexpr double kEigClampTol = 1e-10;  // eigenvalues below -this reject the state
inline constexpr double kNormTol = 1e-12;      // pure-state norm
inline constexpr double kXPatternTol = 1e-12;  // off-pattern mass allowed in an X state

// Thrown when an input fails a structural precondition (bad state, bad
// parameter range). Numerical breakdowns use std::runtime_error instead.
struct InvalidState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const Mat& pauli(int a);  // 0:identity 1:x 2:y 3:z
Mat kron(const Mat& a, const Mat& b);

// log base 2 with 0*log(0) = 0
double xlog2x(double p);

// Execution policy for the grid kernels. Serial is the reference path kept
// for testing; parallel uses OpenMP when compiled in and degrades to the
// serial loop otherwise. Both must produce bitwise identical results.
enum class Exec { serial, parallel };

void run_indexed(std::size_t n, const std::function<void(std::size_t)>& fn,
                 Exec exec = Exec::parallel);

int max_threads();
void set_threads(int n);  // n < 1 resets to the hardware default

std::string version_string();

}  // namespace qi
