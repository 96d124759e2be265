#pragma once

#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/ensemble.hpp"

namespace qwalk {

enum class ResourceKind {
  Signalling,  // qutrit (x) qubit: (|0,0> + |1,psi> + |2,1>)/sqrt(3)
  LoccPsi,     // qubit (x) qubit (x) qubit: singlet block with psi embedded
  LoccPsiBar,  // same with the orthogonal complement embedded
};

// Shared Alice/Bob state expanded in the computational product basis,
// Alice-first row-major indexing.
struct ResourceState {
  ResourceKind kind;
  std::vector<int> dims;
  std::vector<cplx> amplitudes;
  cplx a, b;  // the embedded qubit
};

ResourceState build_resource(ResourceKind kind, cplx a, cplx b);

// Compares Alice's reduced density matrix before and after Bob applies the
// coin transformation on his side (with the hypothesized action on psi).
// The deviation vanishes exactly on the coin's ensemble; the spectra stay
// (0, 1/3, 2/3) either way.
struct SignallingReport {
  Matrix rho_before;
  Matrix rho_after;
  double max_deviation;
  std::vector<double> eigenvalues_before;
  std::vector<double> eigenvalues_after;
};
SignallingReport signalling_test(const BalancedCoin& coin, cplx a, cplx b);

enum class LoccBranch { Psi, PsiBar };

// Quantities describing Alice's 2x2 reduced matrix for one branch:
// rho' = (1/n)[|0><0| + (n-1)|1><1| + d|1><0| + d*|0><1|] with
// n = norm_factor and |d|^2 = offdiag_abs_sq. Eigenvalues are {0, 1} iff
// offdiag_abs_sq = norm_factor - 1 iff compact_residual = 0.
struct LoccBranchQuantities {
  double norm_factor;
  double offdiag_abs_sq;
  double lambda_minus;
  double lambda_plus;
  double compact_residual;
};

// Closed forms for both branches from the coin parameters and (a, b). Defined
// everywhere, including at a = 0 or b = 0 where the explicit resource states
// degenerate.
LoccBranchQuantities locc_branch_closed_form(const BalancedCoin& coin, cplx a, cplx b,
                                             LoccBranch branch);

struct LoccReport {
  LoccBranch branch;              // branch built explicitly from the resource state
  LoccBranchQuantities psi;       // built branch from the state, other from closed form
  LoccBranchQuantities psibar;
  Matrix rho_after;               // Alice's reduced matrix of the built branch
  std::vector<double> eigenvalues;  // eigensolver route on rho_after
  double entropy_before;          // A:B entanglement of the resource (always 0)
  double entropy_after;
};

// Builds the branch resource, applies Bob's operation on his second particle
// by substituting the transformation rules for {|0>, |1>, psi-or-complement},
// renormalizes, and reduces to Alice.
LoccReport locc_test(const BalancedCoin& coin, cplx a, cplx b, LoccBranch branch);

struct SweepPoint {
  double x, y, u, v;  // a = x + iy, b = u + iv
  double residual_b, residual_a;
  double entropy_psi, entropy_psibar;
  bool satisfies;
};

// Grid scan over the normalized (a, b) sphere: three hyperspherical angles
// t1, t2 in [0, pi), t3 in [0, 2 pi), each sampled `resolution` times, with
// (x, y, u, v) = (cos t1, sin t1 cos t2, sin t1 sin t2 cos t3,
// sin t1 sin t2 sin t3). Entropies come from the closed-form branch
// quantities.
struct SweepReport {
  int resolution;
  std::vector<SweepPoint> points;   // index = (i1 * resolution + i2) * resolution + i3
  std::vector<int> set_psi;         // entropy_psi < kDerivedTol
  std::vector<int> set_psibar;      // entropy_psibar < kDerivedTol
  std::vector<int> intersection;
  std::vector<int> constraint_set;  // satisfies_constraint
  bool intersection_within_constraint;
  bool constraint_within_both;
  // headroom for solutions beyond the constraint set: smallest psi-branch
  // entropy over grid points that fail the constraint
  double min_entropy_psi_off_constraint;
};
SweepReport uniqueness_sweep(const BalancedCoin& coin, int resolution);

}  // namespace qwalk
