#include "qwalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // tiny negatives round up to the excluded endpoint
  return t;
}

}  // namespace

BalancedCoin::BalancedCoin(cplx alpha, cplx gamma, double theta)
    : alpha_(alpha), gamma_(gamma), theta_(normalize_angle(theta)) {
  if (std::abs(std::norm(alpha) - 0.5) >= kConstructTol)
    throw std::invalid_argument("balanced coin: |alpha|^2 must equal 1/2, got " +
                                std::to_string(std::norm(alpha)));
  if (std::abs(std::norm(gamma) - 0.5) >= kConstructTol)
    throw std::invalid_argument("balanced coin: |gamma|^2 must equal 1/2, got " +
                                std::to_string(std::norm(gamma)));
}

cplx BalancedCoin::phase() const { return std::polar(1.0, theta_); }

Matrix BalancedCoin::matrix() const {
  const cplx e = phase();
  return Matrix(2, 2, {alpha_, gamma_, e * alpha_, -e * gamma_});
}

BalancedCoin BalancedCoin::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return BalancedCoin(s, s, 0.0);
}

BalancedCoin BalancedCoin::invariant() {
  const double s = 1.0 / std::sqrt(2.0);
  return BalancedCoin(s, cplx(0.0, s), std::numbers::pi / 2.0);
}

BalancedCoin BalancedCoin::hybrid() {
  const cplx a(0.5, 0.5);
  return BalancedCoin(a, a, 3.0 * std::numbers::pi / 2.0);
}

bool is_invariant_family(const BalancedCoin& coin) {
  const Matrix u = coin.matrix();
  return max_abs_diff(pauli_x() * u * pauli_x(), u) < kConstructTol;
}

CoinProperties special_property_checks(const BalancedCoin& coin) {
  const Matrix u = coin.matrix();
  const Matrix u2 = u * u;
  const double s = 1.0 / std::sqrt(2.0);
  return CoinProperties{
      .squares_to_identity = max_abs_diff(u2, Matrix::identity(2)) < kConstructTol,
      .squares_to_inot = max_abs_diff(u2, cplx(0.0, 1.0) * pauli_x()) < kConstructTol,
      .pauli_sum_form = max_abs_diff(u, s * (pauli_x() + pauli_z())) < kConstructTol,
  };
}

UnbalancedCoin::UnbalancedCoin(cplx p, cplx q) : p_(p), q_(q) {
  const double n = std::norm(p) + std::norm(q);
  if (std::abs(n - 1.0) >= kConstructTol)
    throw std::invalid_argument("unbalanced coin: |p|^2 + |q|^2 must equal 1, got " +
                                std::to_string(n));
}

Matrix UnbalancedCoin::matrix() const {
  return Matrix(2, 2, {p_, std::conj(q_), q_, -std::conj(p_)});
}

}  // namespace qwalk
