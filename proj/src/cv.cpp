#include "qi/cv.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailTol = 1e-8;
constexpr int kMaxCutoff = 1 << 13;

// Doubles the cutoff until the truncated norm captures all but kTailTol of
// the exact norm, then normalizes.
template <typename Gen>
FockState build_truncated(Gen gen, double exact_norm, int cutoff,
                          std::string label) {
  if (cutoff < 2) cutoff = 2;
  for (;;) {
    Vec c = gen(cutoff);
    const double captured = c.squaredNorm();
    if (exact_norm - captured <= kTailTol * exact_norm || cutoff >= kMaxCutoff) {
      if (exact_norm - captured > kTailTol * exact_norm)
        throw InvalidState("Fock tail does not converge at cutoff " +
                           std::to_string(cutoff));
      c /= std::sqrt(captured);
      return FockState{std::move(c), std::move(label)};
    }
    cutoff *= 2;
  }
}

}  // namespace

FockState fock_state(Vec coeffs, std::string label) {
  const double n2 = coeffs.squaredNorm();
  if (n2 <= 0.0) throw InvalidState("Fock coefficient vector is zero");
  coeffs /= std::sqrt(n2);
  return FockState{std::move(coeffs), std::move(label)};
}

FockState fock_vacuum(int cutoff) {
  if (cutoff < 1) cutoff = 1;
  Vec c = Vec::Zero(cutoff);
  c(0) = 1.0;
  return FockState{std::move(c), "vacuum"};
}

FockState fock_number(int n, int cutoff) {
  if (n < 0) throw InvalidState("photon number must be non-negative");
  if (cutoff < n + 1) cutoff = n + 1;
  Vec c = Vec::Zero(cutoff);
  c(n) = 1.0;
  return FockState{std::move(c), "fock-" + std::to_string(n)};
}

FockState coherent_state(cxd alpha, int cutoff) {
  auto gen = [alpha](int nc) {
    Vec c(nc);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < nc; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
    return c;
  };
  return build_truncated(gen, 1.0, cutoff, "coherent");
}

FockState squeezed_vacuum(double r, int cutoff) {
  auto gen = [r](int nc) {
    Vec c = Vec::Zero(nc);
    c(0) = 1.0 / std::sqrt(std::cosh(r));
    for (int n = 0; 2 * (n + 1) < nc; ++n) {
      const double k = 2.0 * n;
      c(2 * (n + 1)) = c(2 * n) * (-std::tanh(r)) *
                       std::sqrt((k + 1.0) * (k + 2.0)) / (k + 2.0);
    }
    return c;
  };
  return build_truncated(gen, 1.0, cutoff, "squeezed");
}

FockState cat_state(double beta, int cutoff) {
  // |b> + |-b> up to normalization: only even components survive, with
  // amplitude 2 e^{-b^2/2} b^n / sqrt(n!); exact squared norm 2(1+e^{-2b^2}).
  const double exact_norm = 2.0 * (1.0 + std::exp(-2.0 * beta * beta));
  auto gen = [beta](int nc) {
    Vec c = Vec::Zero(nc);
    double amp = 2.0 * std::exp(-0.5 * beta * beta);
    c(0) = amp;
    for (int n = 1; n < nc; ++n) {
      amp *= beta / std::sqrt(double(n));
      if (n % 2 == 0) c(n) = amp;
    }
    return c;
  };
  return build_truncated(gen, exact_norm, cutoff, "cat");
}

double cv_wigner_point(const FockState& psi, double x, double p) {
  const Eigen::Index nmax = psi.coeffs.size();
  const cxd alpha(x, p);
  const cxd beta = 2.0 * alpha;
  const double t = std::norm(beta);

  // psi^dag D(beta) Parity psi through the number-basis matrix elements
  // <n+d|D|n> = sqrt(n!/(n+d)!) beta^d e^{-t/2} L_n^{(d)}(t); the operator
  // is Hermitian so the d > 0 bands contribute twice their real part.
  double acc = 0.0;
  {
    double lprev = 0.0, lcur = 1.0;
    double sgn = 1.0;
    for (Eigen::Index n = 0; n < nmax; ++n) {
      acc += sgn * std::norm(psi.coeffs(n)) * lcur;
      const double lnext =
          ((2.0 * n + 1.0 - t) * lcur - n * lprev) / (n + 1.0);
      lprev = lcur;
      lcur = lnext;
      sgn = -sgn;
    }
  }
  cxd beta_pow = 1.0;
  double r0 = 1.0;  // 1/sqrt(d!)
  for (Eigen::Index d = 1; d < nmax; ++d) {
    beta_pow *= beta;
    r0 /= std::sqrt(double(d));
    double lprev = 0.0, lcur = 1.0;
    double rnd = r0;  // sqrt(n!/(n+d)!)
    double sgn = 1.0;
    cxd band = 0.0;
    for (Eigen::Index n = 0; n + d < nmax; ++n) {
      band += sgn * std::conj(psi.coeffs(n + d)) * psi.coeffs(n) * rnd * lcur;
      const double lnext =
          ((2.0 * n + 1.0 + d - t) * lcur - (n + d) * lprev) / (n + 1.0);
      lprev = lcur;
      lcur = lnext;
      rnd *= std::sqrt((n + 1.0) / (n + 1.0 + d));
      sgn = -sgn;
    }
    acc += 2.0 * (beta_pow * band).real();
  }
  return (2.0 / kPi) * std::exp(-0.5 * t) * acc;
}

double WignerGrid::cell_area() const {
  if (x.size() < 2 || p.size() < 2) throw InvalidState("grid too small");
  return (x(1) - x(0)) * (p(1) - p(0));
}

WignerGrid cv_wigner(const FockState& psi, double half_width, int n_points,
                     Exec exec) {
  if (n_points < 2) throw InvalidState("need at least two grid points");
  WignerGrid g;
  g.x = RVec::LinSpaced(n_points, -half_width, half_width);
  g.p = g.x;
  g.w.resize(n_points, n_points);
  const std::size_t total = std::size_t(n_points) * std::size_t(n_points);
  run_indexed(
      total,
      [&](std::size_t idx) {
        const Eigen::Index i = static_cast<Eigen::Index>(idx / n_points);
        const Eigen::Index j = static_cast<Eigen::Index>(idx % n_points);
        g.w(i, j) = cv_wigner_point(psi, g.x(i), g.p(j));
      },
      exec);
  return g;
}

double grid_integral(const WignerGrid& g) { return g.w.sum() * g.cell_area(); }

double negativity_volume(const WignerGrid& g) {
  return 0.5 * (g.w.cwiseAbs().sum() - g.w.sum()) * g.cell_area();
}

}  // namespace qi
