#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qwalk/coins.hpp"

namespace qwalk {

// Residual tolerance for the ensemble membership constraint. Looser than the
// construction tolerance to absorb the two-sided arithmetic of the
// verification routes.
inline constexpr double kConstraintTol = 1e-10;

// Qubit |psi> = a|0> + b|1> together with the fixed complement convention
// |psi_bar> = b*|0> - a*|1>. The convention matters: membership below is not
// invariant under a global phase of the pair.
class EnsembleState {
 public:
  EnsembleState(cplx a, cplx b);  // requires |a|^2 + |b|^2 = 1

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  double x() const { return a_.real(); }
  double y() const { return a_.imag(); }
  double u() const { return b_.real(); }
  double v() const { return b_.imag(); }

  std::array<cplx, 2> psi() const { return {a_, b_}; }
  std::array<cplx, 2> psi_bar() const { return {std::conj(b_), -std::conj(a_)}; }

 private:
  cplx a_;
  cplx b_;
};

struct ConstraintCheck {
  bool satisfied;     // both residuals below kConstraintTol
  double residual_b;  // |b - e^{i theta} (alpha/gamma) b*|
  double residual_a;  // |(a + a*) - (e^{-i theta} b + e^{i theta} b*)|
};

// Membership in the coin's equal-superposition ensemble. The second residual
// uses the symmetric form e^{-i theta} b + e^{i theta} b*; the asymmetric
// variant (e^{-i theta} + gamma/alpha) b coincides with it whenever the first
// residual vanishes, so it is not tested separately.
ConstraintCheck satisfies_constraint(const EnsembleState& state, const BalancedCoin& coin);

// Deterministic ensemble members for the coin. Draws (u, v, y), keeps the
// component of u+iv along the phase ray the first constraint allows for b,
// rebuilds a from it, and rescales to unit norm. Zero-b draws are rejected
// and redrawn. Every output satisfies the constraint.
std::vector<EnsembleState> sample_ensemble(const BalancedCoin& coin, std::uint64_t seed,
                                           int count);

struct TransformCheck {
  double deviation_psi;      // |U psi - (alpha psi + e^{i theta} alpha psi_bar)|
  double deviation_psi_bar;  // |U psi_bar - (gamma psi - e^{i theta} gamma psi_bar)|
};

// Applies the coin matrix to psi and psi_bar and compares against the target
// superposition forms. Both deviations fall below kConstraintTol exactly on
// the ensemble.
TransformCheck apply_and_verify(const BalancedCoin& coin, const EnsembleState& state);

// Checks that the coin action preserves <psi1|psi2>, <psi1_bar|psi2_bar> and
// <psi1|psi2_bar>, expanding the transformed inner products through the target
// superposition forms. Both states must satisfy the constraint.
bool verify_inner_products(const BalancedCoin& coin, const EnsembleState& s1,
                           const EnsembleState& s2);

}  // namespace qwalk
