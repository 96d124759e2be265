#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

InitialCoinState::InitialCoinState(cplx up, cplx down) : up_(up), down_(down) {
  const double n = std::norm(up) + std::norm(down);
  if (std::abs(n - 1.0) >= kConstructTol)
    throw std::invalid_argument("initial coin state: |up|^2 + |down|^2 must equal 1, got " +
                                std::to_string(n));
}

Distribution::Distribution(int steps, std::vector<double> prob)
    : steps_(steps), prob_(std::move(prob)) {
  if (steps < 0 || prob_.size() != static_cast<std::size_t>(2 * steps + 1))
    throw std::invalid_argument("distribution: window must cover [-steps, steps]");
}

double Distribution::at(int z) const {
  if (z < -steps_ || z > steps_) return 0.0;
  return prob_[static_cast<std::size_t>(z + steps_)];
}

double Distribution::total() const {
  double s = 0.0;
  for (double p : prob_) s += p;
  return s;
}

double Distribution::max_asymmetry() const {
  double worst = 0.0;
  for (int z = 1; z <= steps_; ++z) worst = std::max(worst, std::abs(at(z) - at(-z)));
  return worst;
}

double max_distribution_diff(const Distribution& a, const Distribution& b) {
  const int t = std::max(a.steps(), b.steps());
  double worst = 0.0;
  for (int z = -t; z <= t; ++z) worst = std::max(worst, std::abs(a.at(z) - b.at(z)));
  return worst;
}

WalkState::WalkState(const InitialCoinState& coin_state)
    : t_(0), up_{coin_state.up()}, down_{coin_state.down()} {}

cplx WalkState::amp_up(int z) const {
  if (z < -t_ || z > t_) return 0.0;
  return up_[static_cast<std::size_t>(z + t_)];
}

cplx WalkState::amp_down(int z) const {
  if (z < -t_ || z > t_) return 0.0;
  return down_[static_cast<std::size_t>(z + t_)];
}

double WalkState::total_probability() const {
  double s = 0.0;
  for (const cplx& c : up_) s += std::norm(c);
  for (const cplx& c : down_) s += std::norm(c);
  return s;
}

Distribution WalkState::distribution() const {
  std::vector<double> p(up_.size());
  for (std::size_t k = 0; k < up_.size(); ++k) p[k] = std::norm(up_[k]) + std::norm(down_[k]);
  return Distribution(t_, std::move(p));
}

Distribution WalkState::distribution_in_basis(const Matrix& basis) const {
  if (basis.rows() != 2 || basis.cols() != 2 || !is_unitary(basis))
    throw std::invalid_argument("measurement basis must be a 2x2 unitary");
  // amplitude along column k of the basis is <basis_k | (up, down)>
  const Matrix b = basis.adjoint();
  std::vector<double> p(up_.size());
  for (std::size_t k = 0; k < up_.size(); ++k) {
    const cplx c0 = b(0, 0) * up_[k] + b(0, 1) * down_[k];
    const cplx c1 = b(1, 0) * up_[k] + b(1, 1) * down_[k];
    p[k] = std::norm(c0) + std::norm(c1);
  }
  return Distribution(t_, std::move(p));
}

WalkState step(const WalkState& state, const Matrix& coin) {
  if (coin.rows() != 2 || coin.cols() != 2 || !is_unitary(coin))
    throw std::invalid_argument("walk step requires a 2x2 unitary coin");

  // complex products written out by hand; the operator form lowers to the
  // NaN-propagating __muldc3 and dominates long runs
  const double c00r = coin(0, 0).real(), c00i = coin(0, 0).imag();
  const double c01r = coin(0, 1).real(), c01i = coin(0, 1).imag();
  const double c10r = coin(1, 0).real(), c10i = coin(1, 0).imag();
  const double c11r = coin(1, 1).real(), c11i = coin(1, 1).imag();

  const std::size_t w = state.up_.size();
  WalkState next;
  next.t_ = state.t_ + 1;
  next.up_.assign(w + 2, 0.0);
  next.down_.assign(w + 2, 0.0);
  for (std::size_t k = 0; k < w; ++k) {
    const double ur = state.up_[k].real(), ui = state.up_[k].imag();
    const double dr = state.down_[k].real(), di = state.down_[k].imag();
    next.up_[k + 2] = cplx(c00r * ur - c00i * ui + c01r * dr - c01i * di,    // to z + 1
                           c00r * ui + c00i * ur + c01r * di + c01i * dr);
    next.down_[k] = cplx(c10r * ur - c10i * ui + c11r * dr - c11i * di,      // to z - 1
                         c10r * ui + c10i * ur + c11r * di + c11i * dr);
  }
  return next;
}

Distribution run(const InitialCoinState& initial, const Matrix& coin, int steps) {
  if (steps < 0) throw std::invalid_argument("run: steps must be >= 0");
  WalkState state(initial);
  for (int t = 0; t < steps; ++t) state = step(state, coin);
  return state.distribution();
}

bool theta_independence_check(cplx alpha, cplx gamma, const std::vector<double>& thetas,
                              int steps) {
  const InitialCoinState up(1.0, 0.0);
  std::vector<Distribution> dists;
  dists.reserve(thetas.size());
  for (double theta : thetas)
    dists.push_back(run(up, BalancedCoin(alpha, gamma, theta).matrix(), steps));
  for (std::size_t i = 0; i < dists.size(); ++i)
    for (std::size_t j = i + 1; j < dists.size(); ++j)
      if (max_distribution_diff(dists[i], dists[j]) >= kProbabilityTol) return false;
  return true;
}

bool balanced_symmetry_condition(const InitialCoinState& initial, const BalancedCoin& coin) {
  const cplx cross =
      initial.up() * std::conj(initial.down()) * coin.alpha() * std::conj(coin.gamma());
  return std::abs(cross.real()) < kProbabilityTol &&
         std::abs(std::norm(initial.up()) - 0.5) < kProbabilityTol;
}

bool unbalanced_symmetry_condition(const InitialCoinState& initial, const UnbalancedCoin& coin) {
  const cplx r = initial.up();
  const cplx s = initial.down();
  const cplx term = r * std::conj(s) * coin.p() * coin.q();
  return std::abs(term + std::conj(term)) < kProbabilityTol &&
         std::abs(std::norm(r) - std::norm(s)) < kProbabilityTol;
}

AsymmetryReport asymmetry_witness(const BalancedCoin& coin) {
  Distribution d = run(InitialCoinState(1.0, 0.0), coin.matrix(), 3);
  const double diff = d.at(1) - d.at(-1);
  return AsymmetryReport{std::move(d), diff};
}

Distribution classical_reference(int steps) {
  if (steps < 0) throw std::invalid_argument("classical_reference: steps must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(2 * steps + 1), 0.0);
  // C(T, k) / 2^T via the multiplicative recurrence
  double coeff = std::pow(0.5, steps);
  for (int k = 0; k <= steps; ++k) {
    p[static_cast<std::size_t>(2 * k)] = coeff;  // z = 2k - T
    coeff *= static_cast<double>(steps - k) / static_cast<double>(k + 1);
  }
  return Distribution(steps, std::move(p));
}

}  // namespace qwalk
