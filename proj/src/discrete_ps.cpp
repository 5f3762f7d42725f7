#include "qi/discrete_ps.hpp"

#include <cmath>
#include <numbers>

#include "qi/core.hpp"

namespace qi {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kPi = std::numbers::pi;

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

Mat single_point_operator(int x, int p) {
  const double fx = parity_sign(p);
  const double fz = parity_sign(x);
  const double fy = fx * fz;
  return 0.5 * (pauli(0) + fz * pauli(3) + fx * pauli(1) + fy * pauli(2));
}

int qubit_count_of(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim)
    throw InvalidState("operator dimension is not a power of two");
  return n;
}

}  // namespace

Mat wootters_point_operator(unsigned x_bits, unsigned p_bits, int n_qubits) {
  if (n_qubits < 1) throw InvalidState("need at least one qubit");
  const int top = n_qubits - 1;
  Mat a = single_point_operator((x_bits >> top) & 1u, (p_bits >> top) & 1u);
  for (int s = 1; s < n_qubits; ++s) {
    const int shift = n_qubits - 1 - s;
    a = kron(a, single_point_operator((x_bits >> shift) & 1u,
                                      (p_bits >> shift) & 1u));
  }
  return a;
}

RVec phase_space_table(const Mat& op, int n_qubits) {
  if (n_qubits < 1) throw InvalidState("need at least one qubit");
  if (op.rows() != op.cols() ||
      op.rows() != (Eigen::Index{1} << n_qubits))
    throw InvalidState("operator dimension does not match qubit count");
  const std::size_t side = std::size_t{1} << n_qubits;
  const std::size_t total = side * side;
  RVec table(static_cast<Eigen::Index>(total));
  run_indexed(total, [&](std::size_t idx) {
    const unsigned x = static_cast<unsigned>(idx >> n_qubits);
    const unsigned p = static_cast<unsigned>(idx & (side - 1));
    const Mat a = wootters_point_operator(x, p, n_qubits);
    table(static_cast<Eigen::Index>(idx)) =
        op.cwiseProduct(a.transpose()).sum().real() /
        static_cast<double>(side);
  });
  return table;
}

RVec dwf(const DensityMatrix& rho) {
  return phase_space_table(rho.mat(), qubit_count_of(rho.dim()));
}

Mat dwf_reconstruct(const RVec& table, int n_qubits) {
  const std::size_t side = std::size_t{1} << n_qubits;
  if (table.size() != static_cast<Eigen::Index>(side * side))
    throw InvalidState("table size does not match qubit count");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Mat rho = Mat::Zero(dim, dim);
  for (std::size_t idx = 0; idx < side * side; ++idx) {
    const unsigned x = static_cast<unsigned>(idx >> n_qubits);
    const unsigned p = static_cast<unsigned>(idx & (side - 1));
    rho += table(static_cast<Eigen::Index>(idx)) *
           wootters_point_operator(x, p, n_qubits);
  }
  return rho;
}

double dwf_two_site_symmetric(const SpinCorrelators& c, int x1, int p1,
                              int x2, int p2) {
  const double fz1 = parity_sign(x1);
  const double fz2 = parity_sign(x2);
  const double fx = parity_sign(p1 + p2);
  const double fy = parity_sign(x1 + p1 + x2 + p2);
  const double fzz = parity_sign(x1 + x2);
  return (1.0 + (fz1 + fz2) * c.sz + fx * c.xx + fy * c.yy + fzz * c.zz) /
         16.0;
}

Mat stratonovich_kernel(double theta, double phi) {
  const cxd iu(0.0, 1.0);
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  Mat ry(2, 2);
  ry << ch, sh, -sh, ch;
  Mat rz = Mat::Zero(2, 2);
  rz(0, 0) = std::exp(iu * (0.5 * phi));
  rz(1, 1) = std::exp(-iu * (0.5 * phi));
  const Mat u = rz * ry;
  Mat parity = Mat::Zero(2, 2);
  parity(0, 0) = 0.5 * (1.0 - kSqrt3);
  parity(1, 1) = 0.5 * (1.0 + kSqrt3);
  return u * parity * u.adjoint();
}

Mat displaced_parity_point(int x, int p) {
  const cxd iu(0.0, 1.0);
  Mat d = std::exp(iu * (0.5 * kPi * (x % 2) * (p % 2))) * pauli(0);
  if (p % 2 == 1) d = (d * pauli(1)).eval();
  if (x % 2 == 1) d = (d * pauli(3)).eval();
  const Mat a00 = single_point_operator(0, 0);
  return d * a00 * d.adjoint();
}

std::pair<double, double> wootters_map_angles(int x, int p) {
  const double theta0 = std::acos(-1.0 / kSqrt3);
  const double phi0 = -0.25 * kPi;
  return {theta0 + (p % 2) * kPi,
          phi0 + (2.0 * (x % 2) - (p % 2)) * 0.5 * kPi};
}

double gwf_single(double sz, double theta) {
  return 0.5 * (1.0 - kSqrt3 * std::cos(2.0 * theta) * sz);
}

double gwf_two(const SpinCorrelators& c, const KernelAngles& a,
               const KernelAngles& b) {
  const double ci = std::cos(2.0 * a.theta);
  const double cj = std::cos(2.0 * b.theta);
  const double xi = std::cos(2.0 * a.phi) * std::sin(2.0 * a.theta);
  const double xj = std::cos(2.0 * b.phi) * std::sin(2.0 * b.theta);
  const double yi = std::sin(2.0 * a.theta) * std::sin(2.0 * a.phi);
  const double yj = std::sin(2.0 * b.theta) * std::sin(2.0 * b.phi);
  return (1.0 - kSqrt3 * (ci + cj) * c.sz + 3.0 * xi * xj * c.xx +
          3.0 * yi * yj * c.yy + 3.0 * ci * cj * c.zz) /
         4.0;
}

double gwf_xxz(const SpinCorrelators& c, const KernelAngles& a,
               const KernelAngles& b) {
  const double ci = std::cos(2.0 * a.theta);
  const double cj = std::cos(2.0 * b.theta);
  const double si = std::sin(2.0 * a.theta);
  const double sj = std::sin(2.0 * b.theta);
  return (1.0 + 3.0 * ci * cj * c.zz +
          3.0 * si * sj * std::cos(2.0 * (a.phi - b.phi)) * c.xx) /
         4.0;
}

double gwf_three(const ThreeSiteCorrelators& c, const KernelAngles& a,
                 const KernelAngles& b, const KernelAngles& k) {
  const double ci = std::cos(2.0 * a.theta);
  const double cj = std::cos(2.0 * b.theta);
  const double ck = std::cos(2.0 * k.theta);
  const double xi = std::cos(2.0 * a.phi) * std::sin(2.0 * a.theta);
  const double xj = std::cos(2.0 * b.phi) * std::sin(2.0 * b.theta);
  const double xk = std::cos(2.0 * k.phi) * std::sin(2.0 * k.theta);
  const double yi = std::sin(2.0 * a.theta) * std::sin(2.0 * a.phi);
  const double yj = std::sin(2.0 * b.theta) * std::sin(2.0 * b.phi);
  const double yk = std::sin(2.0 * k.theta) * std::sin(2.0 * k.phi);
  // Mixed-angle cross weight and its pairing with the i,k correlator are
  // kept exactly as in the closed form this reproduces (see header note).
  const double cross = std::sin(2.0 * a.theta) * std::sin(2.0 * k.theta) *
                       std::sin(2.0 * b.phi) * std::sin(2.0 * k.phi);
  return (1.0 - kSqrt3 * (ci + cj + ck) * c.sz + 3.0 * xi * xk * c.xx_nnn +
          3.0 * (xi * xj + xj * xk) * c.xx_nn + 3.0 * yi * yk * c.yy_nnn +
          3.0 * ci * ck * c.zz_nnn + 3.0 * (yi * yj + cross) * c.yy_nnn +
          3.0 * (ci * cj + cj * ck) * c.zz_nn -
          3.0 * kSqrt3 * xi * xj * ck * c.xx_nn * c.sz +
          3.0 * kSqrt3 * xi * xk * cj * c.xx_nnn * c.sz -
          3.0 * kSqrt3 * yi * yj * ck * c.yy_nn * c.sz +
          3.0 * kSqrt3 * yi * yk * cj * c.yy_nnn * c.sz -
          3.0 * kSqrt3 * ci * cj * ck * (c.zz_nn - c.zz_nnn) * c.sz) /
         8.0;
}

DwfClassValues dwf_extremes(const SpinCorrelators& c) {
  DwfClassValues v;
  v.corner = dwf_two_site_symmetric(c, 0, 0, 0, 0);
  v.edge = dwf_two_site_symmetric(c, 0, 0, 0, 1);
  v.rest = dwf_two_site_symmetric(c, 0, 0, 1, 0);
  // A finite magnetization splits off the x = (1,1) points from the named
  // x = (0,0) classes, so the extremes scan the whole grid.
  v.w_max = v.corner;
  v.w_min = v.corner;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int p1 = 0; p1 < 2; ++p1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int p2 = 0; p2 < 2; ++p2) {
          const double w = dwf_two_site_symmetric(c, x1, p1, x2, p2);
          v.w_max = std::max(v.w_max, w);
          v.w_min = std::min(v.w_min, w);
        }
  return v;
}

RVec sqrt_rho_dwf(const DensityMatrix& rho) {
  return phase_space_table(matrix_sqrt_psd(rho.mat()),
                           qubit_count_of(rho.dim()));
}

}  // namespace qi
