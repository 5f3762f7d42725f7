#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qi/core.hpp"
#include "qi/fermion.hpp"

// Exact diagonalization of the periodic spin-1/2 chain
//   H = 1/4 sum_i [ sx_i sx_{i+1} + sy_i sy_{i+1} + Delta sz_i sz_{i+1} ]
// resolved into magnetization sectors.  Even site counts up to 18.

namespace qi {

struct SectorSummary {
  int n_up = 0;
  std::size_t dim = 0;
  double energy = 0.0;  // lowest eigenvalue in the sector
};

struct SectorState {
  int n_up = 0;
  double energy = 0.0;
  std::vector<std::uint32_t> basis;  // sorted bit masks, bit i = site i up
  RVec amplitudes;
};

struct XxzGroundState {
  int n_sites = 0;
  double delta = 0.0;
  double energy = 0.0;                    // global minimum over sectors
  std::vector<SectorSummary> sectors;     // one entry per n_up = 0..N
  // Every sector-minimal state tied with the global minimum (within 1e-9).
  // For Delta < -1 this holds the two polarized states; reduced quantities
  // treat the set as an equal-weight mixture.
  std::vector<SectorState> ground_states;
};

XxzGroundState xxz_ground_state(int n_sites, double delta);

// Site-averaged <sz> and bond-averaged nearest-neighbour correlators of the
// (possibly mixed) ground manifold, as an m = 1 correlator set.
SpinCorrelators xxz_nn_correlators(const XxzGroundState& gs);

// Per-bond values before averaging, for translation-invariance checks.
std::vector<SpinCorrelators> xxz_bond_correlators(const XxzGroundState& gs);

// Full 2^N x 2^N matrix of the same Hamiltonian, for small-N cross-checks.
RMat xxz_dense_hamiltonian(int n_sites, double delta);

// Lowest eigenpair of a real symmetric operator given through its action,
// Lanczos with full reorthogonalization.  Deterministic start vector.
struct LanczosResult {
  double eigenvalue = 0.0;
  RVec eigenvector;
  int iterations = 0;
};

LanczosResult lanczos_lowest(
    const std::function<void(const RVec&, RVec&)>& apply, Eigen::Index dim,
    double tol = 1e-10, int max_iter = 500, unsigned seed = 7u);

// Sector dimensions at or below this solve densely; larger ones use Lanczos.
inline constexpr std::size_t kDenseSectorLimit = 3000;

}  // namespace qi
