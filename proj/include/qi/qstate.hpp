#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qi/core.hpp"

namespace qi {

// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct Spectrum {
  RVec eigenvalues;
  Mat eigenvectors;  // orthonormal columns, same order as eigenvalues
};

// Rejects non-Hermitian input (symmetry violation above 1e-10 * scale).
Spectrum eig_hermitian(const Mat& h);

// Validated density matrix. Construction checks hermiticity (1e-12), unit
// trace (1e-10) and positivity: eigenvalues below -1e-10 reject the state,
// tiny negatives from roundoff are clamped to zero and the matrix is
// reprojected so downstream code can rely on exact positive
// semidefiniteness.
class DensityMatrix {
 public:
  static DensityMatrix make(Mat entries, std::string label = "");
  const Mat& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  const std::string& label() const { return label_; }

 private:
  DensityMatrix(Mat m, std::string label)
      : m_(std::move(m)), label_(std::move(label)) {}
  Mat m_;
  std::string label_;
};

class PureState {
 public:
  static PureState make(Vec amplitudes, std::string label = "");
  const Vec& vec() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  const std::string& label() const { return label_; }
  DensityMatrix to_density() const;

 private:
  PureState(Vec v, std::string label)
      : v_(std::move(v)), label_(std::move(label)) {}
  Vec v_;
  std::string label_;
};

// Trace out all factors not listed in keep. dims are the factor dimensions
// in tensor order (factor 0 leftmost / most significant), keep is a strictly
// increasing list of factor indices to retain.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-clamp_tol, 0) are clamped to zero; anything below -clamp_tol throws.
Mat matrix_sqrt_psd(const Mat& m, double clamp_tol = kEigClampTol);
Mat matrix_sqrt_psd(const DensityMatrix& rho, double clamp_tol = kEigClampTol);

// Entropies are in bits (log base 2) throughout.
double shannon_entropy(const RVec& p);
double shannon_entropy(const std::vector<double>& p);
double von_neumann_entropy(const DensityMatrix& rho);

// Quantum Jensen-Shannon divergence
//   S((rho+sigma)/2) - S(rho)/2 - S(sigma)/2.
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

// S(A) + S(B) - S(AB) for a bipartite state with the given factor dims.
double mutual_information(const DensityMatrix& rho, int dim_a, int dim_b);

// Remove all off-diagonal elements (computational basis).
DensityMatrix dephase(const DensityMatrix& rho);

// Named reference states.
DensityMatrix werner(double p);         // (1-p)/4 I + p |psi-><psi-|
DensityMatrix werner_mix(double p);     // p|0><0| + (1-p)|+><+| on one qubit
PureState bell_state();                 // (|00> + |11>)/sqrt(2)
PureState ghz_state(int n);             // n-qubit GHZ, n >= 2
PureState plus_state();                 // (|0> + |1>)/sqrt(2)
std::pair<PureState, PureState> fsb_pair();  // (|0> +/- |1>)/sqrt(2)

}  // namespace qi
