#pragma once

#include <string>
#include <vector>

#include "qi/core.hpp"

// Fully connected transverse-field spin model in its two-boson form:
// H = h n_t - (t^dag s + s^dag t)^2 / (4N) on the (N+1)-dimensional basis
// |N, n_t>.  Nonzero matrix elements:
//   <n_t|H|n_t>   = h n_t - [(n_t+1)(N-n_t) + n_t(N-n_t+1)] / (4N)
//   <n_t|H|n_t+2> = -sqrt((n_t+1)(N-n_t)(n_t+2)(N-n_t-1)) / (4N)
// plus, when a symmetry-breaking field eps is on (H -> H + eps S_x),
//   <n_t|H|n_t+1> = (eps/2) sqrt((N-n_t)(n_t+1)).
// The parity Pi = e^{i pi n_t} commutes with the eps = 0 Hamiltonian, whose
// excited-state critical energy sits at E_c = 0 in this convention.

namespace qi {

struct LMGParams {
  int n_spins = 2;       // N; matrix dimension N+1
  double h = 0.0;        // field strength, >= 0
  double epsilon = 0.0;  // symmetry-breaking strength, |eps| << 1
};

RMat lmg_hamiltonian(const LMGParams& p);

// S_x in the same basis (tridiagonal, used for order-parameter checks).
RMat lmg_sx(int n_spins);

// Tridiagonal parity blocks of the eps = 0 Hamiltonian.  "plus" collects
// even n_t (parity +1, dimension N/2+1 for even N), "minus" odd n_t.
struct ParityBlocks {
  RVec diag_plus, off_plus;
  RVec diag_minus, off_minus;
};

ParityBlocks parity_split(const LMGParams& p);  // rejects epsilon != 0

struct LMGSpectrum {
  LMGParams params;
  RVec eigenvalues;          // ascending
  RMat eigenvectors;         // columns, in the full |N, n_t> basis
  std::vector<int> parity;   // +1/-1 per column; empty when eps != 0
};

// Per-parity tridiagonal solve when eps = 0, dense solve otherwise.
// Eigenvector signs are fixed so each column's largest-magnitude entry is
// positive.
LMGSpectrum lmg_spectrum(const LMGParams& p);

enum class InitialKind { ground, excited, fsb_plus, fsb_minus, superposition };

struct InitialSpec {
  InitialKind kind = InitialKind::ground;
  int k = 0;             // excited-state index (0 = ground)
  double c_plus = 1.0;   // superposition weights on the parity pair
  double c_minus = 1.0;
};

// State preparation at field h_i under the symmetric (eps = 0) Hamiltonian.
// fsb/superposition combine the lowest states of the two parity blocks and
// require h_i < 1, where that pair is quasi-degenerate.
RVec prepare_initial(const InitialSpec& spec, double h_i, int n_spins);

struct QuenchResult {
  double h_i = 0.0, h_f = 0.0;
  double e_initial = 0.0;   // <psi0|H(h_i, 0)|psi0>
  std::string label;
  RVec overlaps;            // p_m = |<m_f|psi0>|^2, sum 1
  RVec final_energies;      // E_m ascending
};

QuenchResult lmg_quench(const RVec& psi0, double h_i, double h_f, int n_spins,
                        double eps_final = 0.0, std::string label = "");

// L(t) = |sum_m p_m e^{-i E_m t}|^2.
RVec survival_probability(const QuenchResult& q, const RVec& times);
RVec default_time_grid();  // 2000 points on [0, 200]

struct WorkDistribution {
  RVec w;     // sorted support W_m = E_m - E_n
  RVec prob;  // matching weights, sum 1
};

// Atoms closer than merge_tol coalesce (weighted-mean position).
WorkDistribution work_distribution(const QuenchResult& q,
                                   double merge_tol = 1e-9);

// <W^l> straight from the overlaps (no merging).
double work_moment(const QuenchResult& q, int l);

// Shannon entropy of the work distribution, in bits.
double diagonal_entropy(const WorkDistribution& d);

// Smooth an atomic distribution for plotting: each bin carries the
// probability-weighted mean weight sum(p^2)/sum(p) of its atoms (bins
// with no population are dropped), so the result traces the envelope of
// the populated weights rather than a mass histogram.  Zero width picks
// 4 x the population-weighted mean level spacing of the support.
WorkDistribution binned_work_distribution(const WorkDistribution& d,
                                          double bin_width = 0.0);

struct Histogram {
  RVec edges;               // n_bins + 1 edges
  std::vector<int> counts;  // n_bins
};

Histogram dos_histogram(const RVec& eigenvalues, int n_bins);

// Large-N energy surface per spin pair in the coherent-state parameter:
// E(a, h) = [(a^4 - 1) h - 2 a^2] / (1 + a^2)^2.
double semiclassical_energy(double alpha, double h);
std::vector<double> alpha_gs(double h);   // minimizers; {0} for h > 1
double critical_quench(double h_i);       // (1 + h_i)/2 on 0 <= h_i <= 1

}  // namespace qi
