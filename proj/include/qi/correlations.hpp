#pragma once

#include "qi/core.hpp"
#include "qi/qstate.hpp"

namespace qi {

// Two-qubit state whose only nonzero entries sit on the diagonal and the
// anti-diagonal:
//
//   [ xp  0   0   w  ]
//   [ 0   yp  z*  0  ]
//   [ 0   z   ym  0  ]
//   [ w*  0   0   xm ]
//
// Construction from a generic DensityMatrix rejects anything with more than
// 1e-12 of off-pattern weight.
class XState {
 public:
  static XState from(const DensityMatrix& rho);
  static XState from_elements(double xp, double yp, double ym, double xm,
                              cxd z, cxd w);

  double xp() const { return xp_; }
  double yp() const { return yp_; }
  double ym() const { return ym_; }
  double xm() const { return xm_; }
  cxd z() const { return z_; }   // |01><10| coherence
  cxd w() const { return w_; }   // |00><11| coherence
  DensityMatrix to_density() const;

 private:
  XState(double xp, double yp, double ym, double xm, cxd z, cxd w)
      : xp_(xp), yp_(yp), ym_(ym), xm_(xm), z_(z), w_(w) {}
  double xp_, yp_, ym_, xm_;
  cxd z_, w_;
};

double binary_entropy(double x);  // bits

// Wootters concurrence of an arbitrary two-qubit state.
double concurrence(const DensityMatrix& rho);
double concurrence(const XState& rho);

// h((1 + sqrt(1 - C^2))/2) with h the binary entropy.
double entanglement_of_formation(const DensityMatrix& rho);

// Coherence of formation of a single qubit: h((1 + sqrt(1-4|r01|^2))/2).
double single_qubit_coherence_of_formation(const DensityMatrix& rho);

struct DiscordCC {
  double discord;
  double classical;
};

// Quantum discord and classical correlations of an X state, with the
// measurement on qubit B optimized over the sigma_x / sigma_z branches:
// classical = max(CC1, CC2), discord = min(QD1, QD2), and
// discord + classical equals the mutual information on the attained branch.
DiscordCC xstate_discord_cc(const XState& rho);

// sqrt of the Jensen-Shannon divergence between rho and its dephased
// counterpart (computational basis).
double coherence_qjsd(const DensityMatrix& rho);

// S(dephase(rho)) - S(rho).
double relative_entropy_coherence(const DensityMatrix& rho);

}  // namespace qi
