#pragma once

#include "qwalk/linalg.hpp"

namespace qwalk {

// Balanced coin: both computational-basis states are sent to superpositions
// whose component moduli are all 1/sqrt(2),
//
//   U = [[alpha,              gamma            ],
//        [e^{i theta} alpha, -e^{i theta} gamma]],
//
// with |alpha|^2 = |gamma|^2 = 1/2. The second-column phase is theta + pi by
// construction (orthogonality of the images), so only theta is stored. alpha
// and gamma keep their full complex values; canonicalizing their phases would
// shrink the family.
class BalancedCoin {
 public:
  BalancedCoin(cplx alpha, cplx gamma, double theta);

  cplx alpha() const { return alpha_; }
  cplx gamma() const { return gamma_; }
  double theta() const { return theta_; }  // normalized into [0, 2 pi)
  cplx phase() const;                      // e^{i theta}

  Matrix matrix() const;

  static BalancedCoin hadamard();   // alpha = gamma = 1/sqrt(2), theta = 0
  static BalancedCoin invariant();  // alpha = 1/sqrt(2), gamma = i/sqrt(2), theta = pi/2
  static BalancedCoin hybrid();     // alpha = gamma = (1+i)/2, theta = 3 pi/2

 private:
  cplx alpha_;
  cplx gamma_;
  double theta_;
};

// True iff the coin's transformation maps into itself under interchanging the
// basis labels |0> <-> |1|, i.e. sigma_x U sigma_x = U. Equivalently
// gamma = +-i alpha with theta = pi/2 (resp. 3 pi/2).
bool is_invariant_family(const BalancedCoin& coin);

struct CoinProperties {
  bool squares_to_identity;  // U^2 = I
  bool squares_to_inot;      // U^2 = i sigma_x
  bool pauli_sum_form;       // U = (sigma_x + sigma_z)/sqrt(2)
};
CoinProperties special_property_checks(const BalancedCoin& coin);

// Unbalanced coin [[p, q*], [q, -p*]] with |p|^2 + |q|^2 = 1; the two columns
// generally carry unequal component moduli, biasing a single step.
class UnbalancedCoin {
 public:
  UnbalancedCoin(cplx p, cplx q);

  cplx p() const { return p_; }
  cplx q() const { return q_; }

  Matrix matrix() const;

 private:
  cplx p_;
  cplx q_;
};

}  // namespace qwalk
