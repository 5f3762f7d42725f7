#include "qi/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qi {

namespace {

// Eigenvalues of the 2x2 Hermitian block [[a, c],[conj(c), b]].
std::pair<double, double> block_eigs(double a, double b, cxd c) {
  const double mid = 0.5 * (a + b);
  const double rad = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(c));
  return {mid + rad, mid - rad};
}

}  // namespace

XState XState::from(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidState("XState: need a two-qubit state");
  const Mat& m = rho.mat();
  double off = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) off = std::max(off, std::abs(m(i, j)));
  if (off > kXPatternTol) {
    std::ostringstream os;
    os << "XState: off-pattern element of magnitude " << off;
    throw InvalidState(os.str());
  }
  return XState(m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                m(3, 3).real(), m(2, 1), m(0, 3));
}

XState XState::from_elements(double xp, double yp, double ym, double xm,
                             cxd z, cxd w) {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = xp;
  m(1, 1) = yp;
  m(2, 2) = ym;
  m(3, 3) = xm;
  m(2, 1) = z;
  m(1, 2) = std::conj(z);
  m(0, 3) = w;
  m(3, 0) = std::conj(w);
  return XState::from(DensityMatrix::make(std::move(m)));
}

DensityMatrix XState::to_density() const {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = xp_;
  m(1, 1) = yp_;
  m(2, 2) = ym_;
  m(3, 3) = xm_;
  m(2, 1) = z_;
  m(1, 2) = std::conj(z_);
  m(0, 3) = w_;
  m(3, 0) = std::conj(w_);
  return DensityMatrix::make(std::move(m));
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw InvalidState("binary_entropy: argument outside [0,1]");
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidState("concurrence: need a two-qubit state");
  const Mat yy = kron(pauli(2), pauli(2));
  const Mat rho_tilde = yy * rho.mat().conjugate() * yy;
  const Mat sq = matrix_sqrt_psd(rho);
  // rho * rho_tilde shares eigenvalues with the Hermitian sq*rho_tilde*sq
  Spectrum s = eig_hermitian(sq * rho_tilde * sq);
  RVec lam = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence(const XState& rho) {
  const double c1 = std::abs(rho.z()) - std::sqrt(rho.xp() * rho.xm());
  const double c2 = std::abs(rho.w()) - std::sqrt(rho.yp() * rho.ym());
  return 2.0 * std::max({0.0, c1, c2});
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double single_qubit_coherence_of_formation(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw InvalidState("coherence_of_formation: need a single qubit");
  const double r = std::abs(rho.mat()(0, 1));
  const double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * r * r));
  return binary_entropy(0.5 * (1.0 + s));
}

DiscordCC xstate_discord_cc(const XState& rho) {
  const double xp = rho.xp(), yp = rho.yp(), ym = rho.ym(), xm = rho.xm();
  const double az = std::abs(rho.z()), aw = std::abs(rho.w());

  const double sa = binary_entropy(xp + yp);
  const double sb = binary_entropy(xp + ym);

  auto [l1, l2] = block_eigs(xp, xm, rho.w());
  auto [l3, l4] = block_eigs(yp, ym, rho.z());
  const double s_ab = -xlog2x(std::max(0.0, l1)) - xlog2x(std::max(0.0, l2)) -
                      xlog2x(std::max(0.0, l3)) - xlog2x(std::max(0.0, l4));

  // measurement of sigma_x on B
  const double u = 1.0 - 2.0 * (ym + xm);
  const double d1 = binary_entropy(
      0.5 * (1.0 + std::sqrt(u * u + 4.0 * (aw + az) * (aw + az))));
  // measurement of sigma_z on B
  const double d2 =
      -xlog2x(xp) - xlog2x(yp) - xlog2x(ym) - xlog2x(xm) - sb;

  const double cc1 = sa - d1;
  const double cc2 = sa - d2;
  const double mi = sa + sb - s_ab;
  const double qd1 = mi - cc1;
  const double qd2 = mi - cc2;
  return {std::min(qd1, qd2), std::max(cc1, cc2)};
}

double coherence_qjsd(const DensityMatrix& rho) {
  return std::sqrt(qjsd(rho, dephase(rho)));
}

double relative_entropy_coherence(const DensityMatrix& rho) {
  return von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho);
}

}  // namespace qi
