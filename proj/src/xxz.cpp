#include "qi/xxz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace qi {

namespace {

constexpr double kTieTol = 1e-9;

std::vector<std::uint32_t> sector_basis(int n_sites, int n_up) {
  std::vector<std::uint32_t> basis;
  const std::uint32_t top = std::uint32_t{1} << n_sites;
  for (std::uint32_t m = 0; m < top; ++m)
    if (std::popcount(m) == n_up) basis.push_back(m);
  return basis;
}

std::size_t basis_index(const std::vector<std::uint32_t>& basis,
                        std::uint32_t mask) {
  return static_cast<std::size_t>(
      std::lower_bound(basis.begin(), basis.end(), mask) - basis.begin());
}

double bond_diagonal(std::uint32_t mask, int n_sites, double delta) {
  double zz = 0.0;
  for (int i = 0; i < n_sites; ++i) {
    const int j = (i + 1) % n_sites;
    const double zi = (mask >> i) & 1u ? 1.0 : -1.0;
    const double zj = (mask >> j) & 1u ? 1.0 : -1.0;
    zz += zi * zj;
  }
  return 0.25 * delta * zz;
}

// y += H x within one magnetization sector.
void apply_sector(const std::vector<std::uint32_t>& basis, int n_sites,
                  double delta, const RVec& x, RVec& y) {
  const std::size_t dim = basis.size();
  y.setZero(static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    const std::uint32_t m = basis[a];
    const double xa = x(static_cast<Eigen::Index>(a));
    y(static_cast<Eigen::Index>(a)) += bond_diagonal(m, n_sites, delta) * xa;
    for (int i = 0; i < n_sites; ++i) {
      const int j = (i + 1) % n_sites;
      const bool bi = (m >> i) & 1u;
      const bool bj = (m >> j) & 1u;
      if (bi == bj) continue;
      const std::uint32_t flipped =
          m ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
      y(static_cast<Eigen::Index>(basis_index(basis, flipped))) += 0.5 * xa;
    }
  }
}

SectorState solve_sector(int n_sites, int n_up, double delta) {
  SectorState s;
  s.n_up = n_up;
  s.basis = sector_basis(n_sites, n_up);
  const std::size_t dim = s.basis.size();
  if (dim == 1) {
    s.energy = bond_diagonal(s.basis[0], n_sites, delta);
    s.amplitudes = RVec::Ones(1);
    return s;
  }
  if (dim <= kDenseSectorLimit) {
    RMat h = RMat::Zero(static_cast<Eigen::Index>(dim),
                        static_cast<Eigen::Index>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
      const std::uint32_t m = s.basis[a];
      h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) =
          bond_diagonal(m, n_sites, delta);
      for (int i = 0; i < n_sites; ++i) {
        const int j = (i + 1) % n_sites;
        if (((m >> i) & 1u) == ((m >> j) & 1u)) continue;
        const std::uint32_t flipped =
            m ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
        h(static_cast<Eigen::Index>(basis_index(s.basis, flipped)),
          static_cast<Eigen::Index>(a)) += 0.5;
      }
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(h);
    s.energy = es.eigenvalues()(0);
    s.amplitudes = es.eigenvectors().col(0);
    return s;
  }
  auto apply = [&](const RVec& x, RVec& y) {
    apply_sector(s.basis, n_sites, delta, x, y);
  };
  const LanczosResult r =
      lanczos_lowest(apply, static_cast<Eigen::Index>(dim));
  s.energy = r.eigenvalue;
  s.amplitudes = r.eigenvector;
  return s;
}

SectorState mirror_state(const SectorState& s, int n_sites) {
  SectorState t;
  t.n_up = n_sites - s.n_up;
  t.energy = s.energy;
  const std::uint32_t all = (std::uint32_t{1} << n_sites) - 1u;
  std::vector<std::pair<std::uint32_t, double>> entries(s.basis.size());
  for (std::size_t a = 0; a < s.basis.size(); ++a)
    entries[a] = {s.basis[a] ^ all,
                  s.amplitudes(static_cast<Eigen::Index>(a))};
  std::sort(entries.begin(), entries.end());
  t.basis.resize(entries.size());
  t.amplitudes.resize(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t a = 0; a < entries.size(); ++a) {
    t.basis[a] = entries[a].first;
    t.amplitudes(static_cast<Eigen::Index>(a)) = entries[a].second;
  }
  return t;
}

}  // namespace

LanczosResult lanczos_lowest(
    const std::function<void(const RVec&, RVec&)>& apply, Eigen::Index dim,
    double tol, int max_iter, unsigned seed) {
  if (dim < 1) throw InvalidState("empty operator");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RVec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = gauss(rng);
  v /= v.norm();

  const int m_cap = static_cast<int>(std::min<Eigen::Index>(dim, max_iter));
  std::vector<RVec> lanczos_basis;
  lanczos_basis.reserve(static_cast<std::size_t>(m_cap));
  std::vector<double> alpha, beta;  // beta[j] couples vector j-1 to j
  RVec w(dim);
  double previous = std::numeric_limits<double>::max();
  Eigen::SelfAdjointEigenSolver<RMat> es;

  for (int j = 0; j < m_cap; ++j) {
    lanczos_basis.push_back(v);
    apply(v, w);
    const double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (j > 0) w -= beta.back() * lanczos_basis[static_cast<std::size_t>(j - 1)];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const RVec& q : lanczos_basis) w -= q.dot(w) * q;

    const int k = j + 1;
    RVec ad = Eigen::Map<const RVec>(alpha.data(), k);
    RVec bd = beta.empty() ? RVec() : Eigen::Map<const RVec>(beta.data(), k - 1);
    es.computeFromTridiagonal(ad, bd, Eigen::ComputeEigenvectors);
    const double theta = es.eigenvalues()(0);
    const double b_next = w.norm();
    const double resid =
        b_next * std::abs(es.eigenvectors()(k - 1, 0));
    const double scale = std::max(1.0, std::abs(theta));
    if ((resid < tol * scale && std::abs(theta - previous) < tol * scale) ||
        b_next < 1e-14 * scale || k == m_cap) {
      RVec y = RVec::Zero(dim);
      for (int i = 0; i < k; ++i)
        y += es.eigenvectors()(i, 0) * lanczos_basis[static_cast<std::size_t>(i)];
      y /= y.norm();
      return LanczosResult{theta, std::move(y), k};
    }
    previous = theta;
    beta.push_back(b_next);
    v = w / b_next;
  }
  throw InvalidState("Lanczos failed to converge");
}

XxzGroundState xxz_ground_state(int n_sites, double delta) {
  if (n_sites < 4 || n_sites > 18 || n_sites % 2 != 0)
    throw InvalidState("site count must be even, between 4 and 18");
  XxzGroundState gs;
  gs.n_sites = n_sites;
  gs.delta = delta;

  std::vector<SectorState> lower;  // n_up = 0..N/2
  for (int k = 0; k <= n_sites / 2; ++k)
    lower.push_back(solve_sector(n_sites, k, delta));

  gs.sectors.resize(static_cast<std::size_t>(n_sites) + 1);
  for (int k = 0; k <= n_sites; ++k) {
    const SectorState& src =
        lower[static_cast<std::size_t>(std::min(k, n_sites - k))];
    gs.sectors[static_cast<std::size_t>(k)] =
        SectorSummary{k, src.basis.size(), src.energy};
  }
  gs.energy = lower[0].energy;
  for (const SectorState& s : lower) gs.energy = std::min(gs.energy, s.energy);

  for (const SectorState& s : lower) {
    if (s.energy > gs.energy + kTieTol) continue;
    gs.ground_states.push_back(s);
    if (s.n_up != n_sites - s.n_up)
      gs.ground_states.push_back(mirror_state(s, n_sites));
  }
  return gs;
}

std::vector<SpinCorrelators> xxz_bond_correlators(const XxzGroundState& gs) {
  const int n = gs.n_sites;
  std::vector<SpinCorrelators> bonds(static_cast<std::size_t>(n));
  for (auto& b : bonds) b.m = 1;
  const double weight = 1.0 / static_cast<double>(gs.ground_states.size());
  for (const SectorState& s : gs.ground_states) {
    for (std::size_t a = 0; a < s.basis.size(); ++a) {
      const std::uint32_t m = s.basis[a];
      const double pa = s.amplitudes(static_cast<Eigen::Index>(a));
      const double w2 = weight * pa * pa;
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const double zi = (m >> i) & 1u ? 1.0 : -1.0;
        const double zj = (m >> j) & 1u ? 1.0 : -1.0;
        auto& b = bonds[static_cast<std::size_t>(i)];
        b.sz += w2 * zi;
        b.zz += w2 * zi * zj;
        if (zi * zj < 0.0) {
          const std::uint32_t flipped =
              m ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
          const double pb = s.amplitudes(
              static_cast<Eigen::Index>(basis_index(s.basis, flipped)));
          const double cross = weight * pa * pb;
          b.xx += cross;
          b.yy += cross;
        }
      }
    }
  }
  return bonds;
}

SpinCorrelators xxz_nn_correlators(const XxzGroundState& gs) {
  const auto bonds = xxz_bond_correlators(gs);
  SpinCorrelators avg;
  avg.m = 1;
  for (const auto& b : bonds) {
    avg.sz += b.sz;
    avg.xx += b.xx;
    avg.yy += b.yy;
    avg.zz += b.zz;
  }
  const double n = static_cast<double>(bonds.size());
  avg.sz /= n;
  avg.xx /= n;
  avg.yy /= n;
  avg.zz /= n;
  return avg;
}

RMat xxz_dense_hamiltonian(int n_sites, double delta) {
  if (n_sites < 2 || n_sites > 12)
    throw InvalidState("dense matrix intended for small chains");
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  RMat h = RMat::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto m = static_cast<std::uint32_t>(c);
    h(c, c) = bond_diagonal(m, n_sites, delta);
    for (int i = 0; i < n_sites; ++i) {
      const int j = (i + 1) % n_sites;
      if (((m >> i) & 1u) == ((m >> j) & 1u)) continue;
      const std::uint32_t flipped =
          m ^ ((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
      h(static_cast<Eigen::Index>(flipped), c) += 0.5;
    }
  }
  return h;
}

}  // namespace qi
