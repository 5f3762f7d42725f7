#pragma once

#include <string>

#include "qi/core.hpp"

// Continuous-variable Wigner functions for single-mode states given by
// Fock-basis coefficients.  Conventions: the phase-space coordinate is the
// displacement amplitude itself, alpha = x + i p, and
// W(alpha) = (2/pi) Tr[rho D(alpha) P D(-alpha)] with P the photon-number
// parity, so the integral of W over dx dp is 1 and the vacuum peaks at 2/pi.
// Evaluation goes through the number-basis matrix elements of the
// displacement operator (associated Laguerre polynomials).

namespace qi {

struct FockState {
  Vec coeffs;  // unit norm, index = photon number
  std::string label;
};

// Build a state from raw coefficients; normalizes and rejects a zero vector.
FockState fock_state(Vec coeffs, std::string label = "");

FockState fock_vacuum(int cutoff = 16);
FockState fock_number(int n, int cutoff = 0);  // cutoff 0: smallest that fits

// The named families below are generated from closed-form coefficients at
// the requested cutoff; if the truncated norm is short of 1 by more than
// 1e-8 the cutoff doubles until the tail is negligible.
FockState coherent_state(cxd alpha, int cutoff = 32);
FockState squeezed_vacuum(double r, int cutoff = 64);
FockState cat_state(double beta, int cutoff = 64);  // even cat ~ |b> + |-b>

// W at a single phase-space point.
double cv_wigner_point(const FockState& psi, double x, double p);

struct WignerGrid {
  RVec x;   // sample positions, shared by both axes unless stated
  RVec p;
  RMat w;   // w(i, j) = W(x(i), p(j))
  double cell_area() const;
};

// Uniform square grid, default [-6, 6]^2 with 241 points per axis.
WignerGrid cv_wigner(const FockState& psi, double half_width = 6.0,
                     int n_points = 241, Exec exec = Exec::parallel);

// Riemann-sum integral of W over the grid.
double grid_integral(const WignerGrid& g);

// Negativity volume (integral of |W| minus integral of W, halved).
double negativity_volume(const WignerGrid& g);

}  // namespace qi
