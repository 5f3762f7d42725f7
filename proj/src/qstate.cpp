#include "qi/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qi {

namespace {

double herm_violation(const Mat& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

Spectrum eig_hermitian(const Mat& h) {
  if (h.rows() != h.cols()) throw InvalidState("eig_hermitian: matrix not square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double viol = herm_violation(h);
  if (viol > 1e-10 * scale) {
    std::ostringstream os;
    os << "eig_hermitian: symmetry violation " << viol << " exceeds "
       << 1e-10 * scale;
    throw InvalidState(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

DensityMatrix DensityMatrix::make(Mat entries, std::string label) {
  if (entries.rows() != entries.cols())
    throw InvalidState("density matrix must be square");
  const double hv = herm_violation(entries);
  if (hv > kHermTol) {
    std::ostringstream os;
    os << "density matrix not Hermitian: violation " << hv;
    throw InvalidState(os.str());
  }
  const double tr = entries.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " deviates from 1";
    throw InvalidState(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (entries + entries.adjoint()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("density matrix eigensolve failed");
  const double lo = es.eigenvalues().minCoeff();
  if (lo < -kEigClampTol) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << lo << " below -" << kEigClampTol;
    throw InvalidState(os.str());
  }
  if (lo < 0.0) {
    RVec ev = es.eigenvalues().cwiseMax(0.0);
    ev /= ev.sum();
    entries = es.eigenvectors() * ev.asDiagonal() *
              es.eigenvectors().adjoint();
  }
  return DensityMatrix(std::move(entries), std::move(label));
}

PureState PureState::make(Vec amplitudes, std::string label) {
  const double n = amplitudes.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "pure state norm " << n << " deviates from 1";
    throw InvalidState(os.str());
  }
  return PureState(std::move(amplitudes), std::move(label));
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix::make(v_ * v_.adjoint(), label_);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidState("partial_trace: factor dims must be >= 1");
    total *= d;
  }
  if (total != rho.dim())
    throw InvalidState("partial_trace: dims do not match matrix size");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= static_cast<int>(dims.size()))
      throw InvalidState("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw InvalidState("partial_trace: keep must be strictly increasing");
  }

  const int nf = static_cast<int>(dims.size());
  std::vector<int> traced;
  for (int f = 0; f < nf; ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end())
      traced.push_back(f);

  long long dk = 1, dt = 1;
  for (int f : keep) dk *= dims[f];
  for (int f : traced) dt *= dims[f];

  // stride of factor f in the full index (factor 0 most significant)
  std::vector<long long> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  auto expand = [&](long long packed, const std::vector<int>& factors) {
    long long full = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      const int f = factors[i];
      full += (packed % dims[f]) * stride[f];
      packed /= dims[f];
    }
    return full;
  };

  Mat out = Mat::Zero(dk, dk);
  for (long long i = 0; i < dk; ++i) {
    const long long bi = expand(i, keep);
    for (long long j = 0; j < dk; ++j) {
      const long long bj = expand(j, keep);
      cxd acc = 0;
      for (long long t = 0; t < dt; ++t) {
        const long long bt = expand(t, traced);
        acc += rho.mat()(bi + bt, bj + bt);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix::make(std::move(out), rho.label());
}

Mat matrix_sqrt_psd(const Mat& m, double clamp_tol) {
  Spectrum s = eig_hermitian(m);
  RVec ev = s.eigenvalues;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -clamp_tol) {
      std::ostringstream os;
      os << "matrix_sqrt_psd: eigenvalue " << ev[i] << " below -" << clamp_tol;
      throw InvalidState(os.str());
    }
    ev[i] = ev[i] < 0.0 ? 0.0 : std::sqrt(ev[i]);
  }
  return s.eigenvectors * ev.asDiagonal() * s.eigenvectors.adjoint();
}

Mat matrix_sqrt_psd(const DensityMatrix& rho, double clamp_tol) {
  return matrix_sqrt_psd(rho.mat(), clamp_tol);
}

double shannon_entropy(const RVec& p) {
  double sum = 0.0, s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < -1e-12)
      throw InvalidState("shannon_entropy: negative probability");
    sum += p[i];
    s -= xlog2x(p[i]);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidState("shannon_entropy: probabilities do not sum to 1");
  return s;
}

double shannon_entropy(const std::vector<double>& p) {
  return shannon_entropy(Eigen::Map<const RVec>(p.data(), p.size()));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Spectrum s = eig_hermitian(rho.mat());
  double out = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
    out -= xlog2x(std::max(0.0, s.eigenvalues[i]));
  return out;
}

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw InvalidState("qjsd: dimension mismatch");
  DensityMatrix mix =
      DensityMatrix::make(0.5 * (rho.mat() + sigma.mat()), "mix");
  double d = von_neumann_entropy(mix) - 0.5 * von_neumann_entropy(rho) -
             0.5 * von_neumann_entropy(sigma);
  return std::max(0.0, d);
}

double mutual_information(const DensityMatrix& rho, int dim_a, int dim_b) {
  if (static_cast<long long>(dim_a) * dim_b != rho.dim())
    throw InvalidState("mutual_information: dims do not match state");
  DensityMatrix ra = partial_trace(rho, {dim_a, dim_b}, {0});
  DensityMatrix rb = partial_trace(rho, {dim_a, dim_b}, {1});
  return von_neumann_entropy(ra) + von_neumann_entropy(rb) -
         von_neumann_entropy(rho);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Mat d = rho.mat().diagonal().asDiagonal();
  return DensityMatrix::make(std::move(d), rho.label());
}

DensityMatrix werner(double p) {
  if (p < 0.0 || p > 1.0) throw InvalidState("werner: p must be in [0,1]");
  Vec psi(4);
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  Mat m = (1.0 - p) / 4.0 * Mat::Identity(4, 4) + p * (psi * psi.adjoint());
  return DensityMatrix::make(std::move(m), "werner");
}

DensityMatrix werner_mix(double p) {
  if (p < 0.0 || p > 1.0) throw InvalidState("werner_mix: p must be in [0,1]");
  Vec zero(2), plus(2);
  zero << 1, 0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Mat m = p * (zero * zero.adjoint()) + (1.0 - p) * (plus * plus.adjoint());
  return DensityMatrix::make(std::move(m), "werner_mix");
}

PureState bell_state() {
  Vec v(4);
  v << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return PureState::make(std::move(v), "bell");
}

PureState ghz_state(int n) {
  if (n < 2) throw InvalidState("ghz_state: need at least 2 qubits");
  Vec v = Vec::Zero(1LL << n);
  v[0] = 1.0 / std::sqrt(2.0);
  v[v.size() - 1] = 1.0 / std::sqrt(2.0);
  return PureState::make(std::move(v), "ghz");
}

PureState plus_state() {
  Vec v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return PureState::make(std::move(v), "plus");
}

std::pair<PureState, PureState> fsb_pair() {
  Vec a(2), b(2);
  a << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  b << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return {PureState::make(std::move(a), "fsb+"),
          PureState::make(std::move(b), "fsb-")};
}

}  // namespace qi
