#pragma once

#include <utility>

#include "qi/fermion.hpp"
#include "qi/qstate.hpp"

// Discrete and spin (SU(2)) phase-space representations.
//
// The discrete side uses the 2x2-per-qubit phase-point operator basis
//   A(x,p) = 1/2 [ I + (-1)^x sz + (-1)^p sx + (-1)^{x+p} sy ],
// tensored over qubits, with W(x,p) = Tr[rho A(x,p)] / 2^n.  The continuous
// side uses the rank-based spin kernel Delta(theta,phi) = U Pi U^dag with
// Pi = (I - sqrt(3) sz)/2.  Both assign quasi-probabilities that reproduce
// all operator averages; the discrete grid embeds into the sphere at four
// special angle pairs (see wootters_map_angles).

namespace qi {

// n-qubit phase-point operator.  Bit i of x_bits/p_bits (counting from the
// most significant of the n used bits) addresses qubit i, so site 0 is the
// leftmost factor of the Kronecker product.
Mat wootters_point_operator(unsigned x_bits, unsigned p_bits, int n_qubits);

// Raw phase-space table of an arbitrary Hermitian operator: entry
// ((x<<n)|p) holds Tr[op A(x,p)] / 2^n.  The point operators sum to
// 2^n I over the grid, so the entries sum to Tr(op); for a density
// matrix that is 1.
RVec phase_space_table(const Mat& op, int n_qubits);

// Discrete Wigner function of a state, indexed as ((x<<n)|p).
RVec dwf(const DensityMatrix& rho);

// Inverse transform: rho = sum_{x,p} W(x,p) A(x,p).
Mat dwf_reconstruct(const RVec& table, int n_qubits);

// Two-site discrete Wigner function from translation-invariant correlators
// (uniform <sz>, plus <sx sx>, <sy sy>, <sz sz> at the given separation).
// Closed form of Tr[rho_2 A(x1,p1) (x) A(x2,p2)] / 4 for the symmetric
// two-site reduced state.
double dwf_two_site_symmetric(const SpinCorrelators& c, int x1, int p1,
                              int x2, int p2);

// Spin kernel Delta(theta,phi) = U Pi U^dag, U = exp(i sz phi/2) exp(i sy theta/2),
// Pi = (I - sqrt(3) sz)/2.  Equivalently (I - sqrt(3) n.sigma)/2 with
// n = (-sin t cos f, sin t sin f, cos t).  Eigenvalues (1 +- sqrt(3))/2 for
// every angle pair; theta = 0 returns Pi itself.
Mat stratonovich_kernel(double theta, double phi);

// Displaced parity point A'(x,p) = D A(0,0) D^dag with the discrete
// displacement D(x,p) = e^{i pi x p / 2} sx^p sz^x.  A' relabels the
// off-diagonal points of the A set: A'(0,1) = A(1,0) and vice versa.
Mat displaced_parity_point(int x, int p);

// Kernel angles at which Delta reproduces A'(x,p) exactly:
//   theta = theta0 + p pi,  phi = phi0 + (2x - p) pi/2,
// with theta0 = arccos(-1/sqrt(3)) and phi0 = -pi/4.  The sign of the base
// cosine is fixed by requiring the match to hold at all four points at once.
std::pair<double, double> wootters_map_angles(int x, int p);

// Pointwise spin Wigner functions in the doubled-angle parameterization the
// closed forms below use: each equals the kernel trace at (2 theta, 2 phi),
// e.g. gwf_single(sz, t) = Tr[rho_1 Delta(2t, anything)].

// Single site, field direction only: 1/2 [1 - sqrt(3) cos(2 theta) <sz>].
double gwf_single(double sz, double theta);

struct KernelAngles {
  double theta = 0.0;
  double phi = 0.0;
};

// Two sites with uniform magnetization and xx/yy/zz correlations.
double gwf_two(const SpinCorrelators& c, const KernelAngles& a,
               const KernelAngles& b);

// Two sites, zero field, axially symmetric (xx = yy) exchange form:
// 1/4 [1 + 3 ct_i ct_j <szsz> + 3 st_i st_j cos 2(phi_i - phi_j) <sxsx>]
// with ct = cos 2 theta, st = sin 2 theta.
double gwf_xxz(const SpinCorrelators& c, const KernelAngles& a,
               const KernelAngles& b);

// Nearest and next-nearest correlators around a central site j for the
// three-site function below: sites (i, j, k) = (j-1, j, j+1) of a
// translation-invariant chain, so both nn pairs share one value.
struct ThreeSiteCorrelators {
  double sz = 0.0;
  double xx_nn = 0.0;  // <sx_i sx_j> = <sx_j sx_k>
  double yy_nn = 0.0;
  double zz_nn = 0.0;
  double xx_nnn = 0.0;  // <sx_i sx_k>
  double yy_nnn = 0.0;
  double zz_nnn = 0.0;
};

// Three adjacent sites.  Transcribed closed form; it drops the three-body
// <sx sx sz>-type contributions of the exact kernel trace and repeats the
// yy_nnn weight in one cross term, so it is exact only when those terms
// vanish (tests pin the exact residual for product states).
double gwf_three(const ThreeSiteCorrelators& c, const KernelAngles& a,
                 const KernelAngles& b, const KernelAngles& k);

// Named values of the two-site table at three representative points; for a
// state with zero magnetization and xx = yy these exhaust the 16-point grid
// (finite <sz> adds the sign-flipped x = (1,1) partners of corner and edge).
// The extremes always scan the full grid.
struct DwfClassValues {
  double corner = 0.0;  // x = (0,0), p = (0,0)
  double edge = 0.0;    // x = (0,0), p = (0,1)
  double rest = 0.0;    // x = (0,1), any p
  double w_max = 0.0;
  double w_min = 0.0;
};

DwfClassValues dwf_extremes(const SpinCorrelators& c);

// Phase-space table of sqrt(rho) (principal PSD root), same indexing as
// dwf().  Not renormalized: entries sum to Tr[sqrt(rho)], which exceeds 1
// for mixed states.  Pure states reproduce dwf() exactly.
RVec sqrt_rho_dwf(const DensityMatrix& rho);

}  // namespace qi
