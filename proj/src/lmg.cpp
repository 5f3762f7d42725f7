#include "qi/lmg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "qi/qstate.hpp"

namespace qi {

namespace {

void check_params(const LMGParams& p) {
  if (p.n_spins < 2) throw InvalidState("need at least two spins");
  if (p.h < 0.0) throw InvalidState("field must be non-negative");
}

double diag_element(int nt, int n, double h) {
  const double a = static_cast<double>(nt);
  const double r = static_cast<double>(n - nt);
  return h * a - ((a + 1.0) * r + a * (r + 1.0)) / (4.0 * n);
}

double skip_element(int nt, int n) {
  const double a = static_cast<double>(nt);
  const double r = static_cast<double>(n - nt);
  return -std::sqrt((a + 1.0) * r * (a + 2.0) * (r - 1.0)) / (4.0 * n);
}

double sx_element(int nt, int n) {
  // <n_t+1|S_x|n_t>
  const double a = static_cast<double>(nt);
  const double r = static_cast<double>(n - nt);
  return 0.5 * std::sqrt(r * (a + 1.0));
}

void fix_column_signs(RMat& vecs) {
  for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
    Eigen::Index imax = 0;
    vecs.col(c).cwiseAbs().maxCoeff(&imax);
    if (vecs(imax, c) < 0.0) vecs.col(c) = -vecs.col(c);
  }
}

}  // namespace

RMat lmg_hamiltonian(const LMGParams& p) {
  check_params(p);
  const int n = p.n_spins;
  RMat h = RMat::Zero(n + 1, n + 1);
  for (int nt = 0; nt <= n; ++nt) {
    h(nt, nt) = diag_element(nt, n, p.h);
    if (nt + 2 <= n) {
      const double v = skip_element(nt, n);
      h(nt, nt + 2) = v;
      h(nt + 2, nt) = v;
    }
    if (p.epsilon != 0.0 && nt + 1 <= n) {
      const double v = p.epsilon * sx_element(nt, n);
      h(nt, nt + 1) = v;
      h(nt + 1, nt) = v;
    }
  }
  return h;
}

RMat lmg_sx(int n_spins) {
  if (n_spins < 2) throw InvalidState("need at least two spins");
  RMat sx = RMat::Zero(n_spins + 1, n_spins + 1);
  for (int nt = 0; nt < n_spins; ++nt) {
    const double v = sx_element(nt, n_spins);
    sx(nt, nt + 1) = v;
    sx(nt + 1, nt) = v;
  }
  return sx;
}

ParityBlocks parity_split(const LMGParams& p) {
  check_params(p);
  if (p.epsilon != 0.0)
    throw InvalidState("parity split requires the symmetric Hamiltonian");
  const int n = p.n_spins;
  const int n_plus = n / 2 + 1;       // even n_t count for even N
  const int n_minus = (n + 1) / 2;    // odd n_t count
  ParityBlocks b;
  b.diag_plus.resize(n_plus);
  b.off_plus.resize(std::max(0, n_plus - 1));
  b.diag_minus.resize(n_minus);
  b.off_minus.resize(std::max(0, n_minus - 1));
  for (int j = 0; j < n_plus; ++j) {
    const int nt = 2 * j;
    b.diag_plus(j) = diag_element(nt, n, p.h);
    if (nt + 2 <= n) b.off_plus(j) = skip_element(nt, n);
  }
  for (int j = 0; j < n_minus; ++j) {
    const int nt = 2 * j + 1;
    b.diag_minus(j) = diag_element(nt, n, p.h);
    if (nt + 2 <= n) b.off_minus(j) = skip_element(nt, n);
  }
  return b;
}

LMGSpectrum lmg_spectrum(const LMGParams& p) {
  check_params(p);
  const int n = p.n_spins;
  const Eigen::Index dim = n + 1;
  LMGSpectrum s;
  s.params = p;

  if (p.epsilon != 0.0) {
    Eigen::SelfAdjointEigenSolver<RMat> es(lmg_hamiltonian(p));
    if (es.info() != Eigen::Success) throw InvalidState("eigensolve failed");
    s.eigenvalues = es.eigenvalues();
    s.eigenvectors = es.eigenvectors();
    fix_column_signs(s.eigenvectors);
    return s;
  }

  const ParityBlocks b = parity_split(p);
  Eigen::SelfAdjointEigenSolver<RMat> ep, em;
  ep.computeFromTridiagonal(b.diag_plus, b.off_plus,
                            Eigen::ComputeEigenvectors);
  em.computeFromTridiagonal(b.diag_minus, b.off_minus,
                            Eigen::ComputeEigenvectors);
  if (ep.info() != Eigen::Success || em.info() != Eigen::Success)
    throw InvalidState("tridiagonal eigensolve failed");

  struct Entry {
    double e;
    int parity;
    Eigen::Index col;
  };
  std::vector<Entry> order;
  order.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index c = 0; c < b.diag_plus.size(); ++c)
    order.push_back({ep.eigenvalues()(c), +1, c});
  for (Eigen::Index c = 0; c < b.diag_minus.size(); ++c)
    order.push_back({em.eigenvalues()(c), -1, c});
  std::stable_sort(order.begin(), order.end(),
                   [](const Entry& a, const Entry& b2) { return a.e < b2.e; });

  s.eigenvalues.resize(dim);
  s.eigenvectors = RMat::Zero(dim, dim);
  s.parity.resize(static_cast<std::size_t>(dim));
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Entry& e = order[static_cast<std::size_t>(c)];
    s.eigenvalues(c) = e.e;
    s.parity[static_cast<std::size_t>(c)] = e.parity;
    const auto& es = e.parity > 0 ? ep : em;
    const int offset = e.parity > 0 ? 0 : 1;
    for (Eigen::Index j = 0; j < es.eigenvectors().rows(); ++j)
      s.eigenvectors(2 * j + offset, c) = es.eigenvectors()(j, e.col);
  }
  fix_column_signs(s.eigenvectors);
  return s;
}

RVec prepare_initial(const InitialSpec& spec, double h_i, int n_spins) {
  const LMGParams p{n_spins, h_i, 0.0};
  const LMGSpectrum s = lmg_spectrum(p);
  const Eigen::Index dim = s.eigenvalues.size();

  auto lowest_of_parity = [&](int want) -> Eigen::Index {
    for (Eigen::Index c = 0; c < dim; ++c)
      if (s.parity[static_cast<std::size_t>(c)] == want) return c;
    throw InvalidState("parity block missing");
  };

  switch (spec.kind) {
    case InitialKind::ground:
      return s.eigenvectors.col(0);
    case InitialKind::excited: {
      if (spec.k < 0 || spec.k >= dim)
        throw InvalidState("excited-state index out of range");
      return s.eigenvectors.col(spec.k);
    }
    case InitialKind::fsb_plus:
    case InitialKind::fsb_minus:
    case InitialKind::superposition: {
      if (h_i >= 1.0)
        throw InvalidState(
            "symmetry-broken combinations need the degenerate regime h < 1");
      const RVec phi_p = s.eigenvectors.col(lowest_of_parity(+1));
      const RVec phi_m = s.eigenvectors.col(lowest_of_parity(-1));
      double cp = 1.0, cm = 1.0;
      if (spec.kind == InitialKind::fsb_minus) cm = -1.0;
      if (spec.kind == InitialKind::superposition) {
        cp = spec.c_plus;
        cm = spec.c_minus;
      }
      RVec psi = cp * phi_p + cm * phi_m;
      const double norm = psi.norm();
      if (norm <= 0.0) throw InvalidState("zero superposition");
      return psi / norm;
    }
  }
  throw InvalidState("unknown initial-state kind");
}

QuenchResult lmg_quench(const RVec& psi0, double h_i, double h_f, int n_spins,
                        double eps_final, std::string label) {
  if (psi0.size() != n_spins + 1)
    throw InvalidState("state dimension does not match spin count");
  if (std::abs(psi0.norm() - 1.0) > kNormTol * 10)
    throw InvalidState("initial state is not normalized");

  QuenchResult q;
  q.h_i = h_i;
  q.h_f = h_f;
  q.label = std::move(label);
  q.e_initial = psi0.dot(lmg_hamiltonian({n_spins, h_i, 0.0}) * psi0);

  const LMGSpectrum fin = lmg_spectrum({n_spins, h_f, eps_final});
  q.final_energies = fin.eigenvalues;
  q.overlaps = (fin.eigenvectors.transpose() * psi0).array().square().matrix();
  const double total = q.overlaps.sum();
  q.overlaps /= total;  // unit-norm input makes this a 1e-15 cleanup
  return q;
}

RVec survival_probability(const QuenchResult& q, const RVec& times) {
  RVec out(times.size());
  run_indexed(static_cast<std::size_t>(times.size()), [&](std::size_t i) {
    const double t = times(static_cast<Eigen::Index>(i));
    cxd chi = 0.0;
    for (Eigen::Index m = 0; m < q.overlaps.size(); ++m)
      chi += q.overlaps(m) *
             std::exp(cxd(0.0, -q.final_energies(m) * t));
    out(static_cast<Eigen::Index>(i)) = std::norm(chi);
  });
  return out;
}

RVec default_time_grid() { return RVec::LinSpaced(2000, 0.0, 200.0); }

WorkDistribution work_distribution(const QuenchResult& q, double merge_tol) {
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(static_cast<std::size_t>(q.overlaps.size()));
  for (Eigen::Index m = 0; m < q.overlaps.size(); ++m)
    atoms.emplace_back(q.final_energies(m) - q.e_initial, q.overlaps(m));
  std::sort(atoms.begin(), atoms.end());

  std::vector<double> w, prob;
  for (const auto& [wi, pi] : atoms) {
    if (!w.empty() && wi - w.back() < merge_tol) {
      // weighted-mean position keeps the merged atom where the weight is
      const double pt = prob.back() + pi;
      if (pt > 0.0) w.back() = (w.back() * prob.back() + wi * pi) / pt;
      prob.back() = pt;
    } else {
      w.push_back(wi);
      prob.push_back(pi);
    }
  }
  WorkDistribution d;
  d.w = Eigen::Map<const RVec>(w.data(), static_cast<Eigen::Index>(w.size()));
  d.prob = Eigen::Map<const RVec>(prob.data(),
                                  static_cast<Eigen::Index>(prob.size()));
  return d;
}

double work_moment(const QuenchResult& q, int l) {
  if (l < 0) throw InvalidState("moment order must be non-negative");
  double acc = 0.0;
  for (Eigen::Index m = 0; m < q.overlaps.size(); ++m)
    acc += q.overlaps(m) *
           std::pow(q.final_energies(m) - q.e_initial, double(l));
  return acc;
}

double diagonal_entropy(const WorkDistribution& d) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < d.prob.size(); ++i) s -= xlog2x(d.prob(i));
  return s;
}

WorkDistribution binned_work_distribution(const WorkDistribution& d,
                                          double bin_width) {
  if (d.w.size() == 0) return d;
  const double lo = d.w.minCoeff();
  const double hi = d.w.maxCoeff();
  if (bin_width <= 0.0) {
    // Population-weighted mean spacing, so that the default resolution
    // follows the part of the spectrum the distribution actually lives
    // on instead of the empty high-energy wing.
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i + 1 < d.w.size(); ++i) {
      num += d.prob(i) * (d.w(i + 1) - d.w(i));
      den += d.prob(i);
    }
    const double spacing = den > 0.0 && num > 0.0 ? num / den : 1.0;
    bin_width = 4.0 * spacing;
  }
  const int n_bins =
      std::max(1, static_cast<int>(std::ceil((hi - lo) / bin_width)) + 1);
  RVec sum = RVec::Zero(n_bins);
  RVec sum2 = RVec::Zero(n_bins);
  for (Eigen::Index i = 0; i < d.w.size(); ++i) {
    int b = static_cast<int>((d.w(i) - lo) / bin_width);
    b = std::clamp(b, 0, n_bins - 1);
    sum(b) += d.prob(i);
    sum2(b) += d.prob(i) * d.prob(i);
  }
  // The plotted curve tracks the typical per-level weight, not the bin
  // mass: near a separatrix the level density and the overlaps vary in
  // opposite directions and a mass histogram would cancel the structure.
  // The weighted mean sum(p^2)/sum(p) ignores interleaved levels that
  // carry no population (the opposite-parity ladder, say).
  std::vector<double> cw, cp;
  cw.reserve(static_cast<std::size_t>(n_bins));
  cp.reserve(static_cast<std::size_t>(n_bins));
  for (int b = 0; b < n_bins; ++b) {
    if (sum(b) <= 0.0) continue;
    cw.push_back(lo + (b + 0.5) * bin_width);
    cp.push_back(sum2(b) / sum(b));
  }
  WorkDistribution out;
  out.w = Eigen::Map<const RVec>(cw.data(), static_cast<Eigen::Index>(cw.size()));
  out.prob = Eigen::Map<const RVec>(cp.data(), static_cast<Eigen::Index>(cp.size()));
  return out;
}

Histogram dos_histogram(const RVec& eigenvalues, int n_bins) {
  if (n_bins < 1) throw InvalidState("need at least one bin");
  if (eigenvalues.size() < 2) throw InvalidState("need at least two levels");
  Histogram h;
  const double lo = eigenvalues.minCoeff();
  const double hi = eigenvalues.maxCoeff();
  const double width = (hi - lo) / n_bins;
  if (width <= 0.0) throw InvalidState("degenerate spectrum range");
  h.edges = RVec::LinSpaced(n_bins + 1, lo, hi);
  h.counts.assign(static_cast<std::size_t>(n_bins), 0);
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    int b = static_cast<int>((eigenvalues(i) - lo) / width);
    b = std::clamp(b, 0, n_bins - 1);
    ++h.counts[static_cast<std::size_t>(b)];
  }
  return h;
}

double semiclassical_energy(double alpha, double h) {
  const double a2 = alpha * alpha;
  const double d = 1.0 + a2;
  return ((a2 * a2 - 1.0) * h - 2.0 * a2) / (d * d);
}

std::vector<double> alpha_gs(double h) {
  if (h < 0.0) throw InvalidState("field must be non-negative");
  if (h > 1.0) return {0.0};
  const double a = std::sqrt((1.0 - h) / (1.0 + h));
  if (a == 0.0) return {0.0};
  return {a, -a};
}

double critical_quench(double h_i) {
  if (h_i < 0.0 || h_i > 1.0)
    throw InvalidState("critical quench defined for fields in [0, 1]");
  return 0.5 * (1.0 + h_i);
}

}  // namespace qi
