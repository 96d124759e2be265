#pragma once

#include <vector>

#include "qwalk/coins.hpp"

namespace qwalk {

// Tolerance for probability-level checks (normalization, symmetry,
// distribution comparisons).
inline constexpr double kProbabilityTol = 1e-12;

// Coin register state the walk starts from at the origin.
class InitialCoinState {
 public:
  InitialCoinState(cplx up, cplx down);  // requires |up|^2 + |down|^2 = 1

  cplx up() const { return up_; }
  cplx down() const { return down_; }

 private:
  cplx up_;
  cplx down_;
};

// Position distribution after `steps` iterations. Support lies on z in
// [-steps, steps] with z = steps (mod 2); storage is a flat array over the
// full window, indexed by z + steps.
class Distribution {
 public:
  Distribution(int steps, std::vector<double> prob);

  int steps() const { return steps_; }
  double at(int z) const;  // 0 outside the window
  double total() const;
  double max_asymmetry() const;  // max_z |P_z - P_{-z}|
  const std::vector<double>& raw() const { return prob_; }

 private:
  int steps_ = 0;
  std::vector<double> prob_;
};

double max_distribution_diff(const Distribution& a, const Distribution& b);

// Coin (x) position amplitude table over the window [-t, t]; one step applies
// the coin to every position's (up, down) pair, then shifts up-amplitudes to
// z+1 and down-amplitudes to z-1.
class WalkState {
 public:
  explicit WalkState(const InitialCoinState& coin_state);  // t = 0, at the origin

  int steps() const { return t_; }
  cplx amp_up(int z) const;
  cplx amp_down(int z) const;
  double total_probability() const;

  Distribution distribution() const;
  // Distribution after rotating the coin register into the orthonormal basis
  // given by the columns of `basis` before measuring the position.
  Distribution distribution_in_basis(const Matrix& basis) const;

  friend WalkState step(const WalkState& state, const Matrix& coin);

 private:
  WalkState() = default;

  int t_ = 0;
  std::vector<cplx> up_;    // index z + t_
  std::vector<cplx> down_;  // index z + t_
};

WalkState step(const WalkState& state, const Matrix& coin);

// `steps` applications of the walk operator from (up, down) (x) |0>, then the
// position distribution. Accepts any 2x2 unitary, so balanced and unbalanced
// coins share this path.
Distribution run(const InitialCoinState& initial, const Matrix& coin, int steps);

// Distributions from |up> (x) |0> agree across all listed theta values for
// fixed alpha, gamma.
bool theta_independence_check(cplx alpha, cplx gamma, const std::vector<double>& thetas,
                              int steps);

// True iff Re(up down* alpha gamma*) = 0 and |up|^2 = 1/2: the initial coin
// superposition that cancels the walk's intrinsic drift.
bool balanced_symmetry_condition(const InitialCoinState& initial, const BalancedCoin& coin);

// Unbalanced analogue: r s* p q + r* s p* q* = 0 and |r|^2 = |s|^2.
bool unbalanced_symmetry_condition(const InitialCoinState& initial, const UnbalancedCoin& coin);

// P_1 - P_{-1} after three steps from |up> (x) |0>; equals 1/2 for every
// balanced coin, so no balanced coin walks symmetrically from a basis state.
struct AsymmetryReport {
  Distribution distribution;
  double p1_minus_pm1;
};
AsymmetryReport asymmetry_witness(const BalancedCoin& coin);

// Binomial reference: P_z = C(T, (T+z)/2) / 2^T on the support lattice.
Distribution classical_reference(int steps);

}  // namespace qwalk
