#include "qwalk/ensemble.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

// uniform double in [-1, 1) built from the top 53 bits, so sequences are
// identical on every platform for a given seed
double uniform_pm1(std::mt19937_64& rng) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

double vec2_norm(const std::array<cplx, 2>& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

}  // namespace

EnsembleState::EnsembleState(cplx a, cplx b) : a_(a), b_(b) {
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) >= kConstructTol)
    throw std::invalid_argument("ensemble state: |a|^2 + |b|^2 must equal 1, got " +
                                std::to_string(n));
}

ConstraintCheck satisfies_constraint(const EnsembleState& state, const BalancedCoin& coin) {
  const cplx a = state.a();
  const cplx b = state.b();
  const cplx e = coin.phase();
  const double res_b = std::abs(b - e * (coin.alpha() / coin.gamma()) * std::conj(b));
  const double res_a =
      std::abs((a + std::conj(a)) - (std::conj(e) * b + e * std::conj(b)));
  return ConstraintCheck{res_b < kConstraintTol && res_a < kConstraintTol, res_b, res_a};
}

std::vector<EnsembleState> sample_ensemble(const BalancedCoin& coin, std::uint64_t seed,
                                           int count) {
  if (count < 1) throw std::invalid_argument("sample_ensemble: count must be >= 1");
  std::mt19937_64 rng(seed);
  const cplx ray = coin.phase() * coin.alpha() / coin.gamma();  // b = ray * b* on members
  const cplx rebuild = 0.5 * (std::conj(coin.phase()) + coin.gamma() / coin.alpha());

  std::vector<EnsembleState> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const double u = uniform_pm1(rng);
    const double v = uniform_pm1(rng);
    const double y = uniform_pm1(rng);
    const cplx braw(u, v);
    const cplx b = 0.5 * (braw + ray * std::conj(braw));
    if (std::abs(b) < 1e-6) continue;  // draw fell on the rejected ray; b must stay nonzero
    const cplx a = rebuild * b + cplx(0.0, y);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n < 1e-6) continue;
    out.emplace_back(a / n, b / n);
  }
  return out;
}

TransformCheck apply_and_verify(const BalancedCoin& coin, const EnsembleState& state) {
  const Matrix u = coin.matrix();
  const cplx e = coin.phase();
  const auto psi = state.psi();
  const auto bar = state.psi_bar();

  std::array<cplx, 2> lhs_psi{u(0, 0) * psi[0] + u(0, 1) * psi[1],
                              u(1, 0) * psi[0] + u(1, 1) * psi[1]};
  std::array<cplx, 2> lhs_bar{u(0, 0) * bar[0] + u(0, 1) * bar[1],
                              u(1, 0) * bar[0] + u(1, 1) * bar[1]};
  std::array<cplx, 2> rhs_psi{coin.alpha() * psi[0] + e * coin.alpha() * bar[0],
                              coin.alpha() * psi[1] + e * coin.alpha() * bar[1]};
  std::array<cplx, 2> rhs_bar{coin.gamma() * psi[0] - e * coin.gamma() * bar[0],
                              coin.gamma() * psi[1] - e * coin.gamma() * bar[1]};

  return TransformCheck{
      vec2_norm({lhs_psi[0] - rhs_psi[0], lhs_psi[1] - rhs_psi[1]}),
      vec2_norm({lhs_bar[0] - rhs_bar[0], lhs_bar[1] - rhs_bar[1]}),
  };
}

bool verify_inner_products(const BalancedCoin& coin, const EnsembleState& s1,
                           const EnsembleState& s2) {
  if (!satisfies_constraint(s1, coin).satisfied || !satisfies_constraint(s2, coin).satisfied)
    throw std::invalid_argument("verify_inner_products: both states must satisfy the constraint");

  auto ip = [](const std::array<cplx, 2>& x, const std::array<cplx, 2>& y) {
    return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
  };
  const cplx e = coin.phase();
  const cplx p12 = ip(s1.psi(), s2.psi());
  const cplx p1b2 = ip(s1.psi(), s2.psi_bar());
  const cplx pb12 = ip(s1.psi_bar(), s2.psi());
  const cplx pb1b2 = ip(s1.psi_bar(), s2.psi_bar());

  // transformed inner products, expanded through the target superposition forms
  const double aa = std::norm(coin.alpha());
  const double gg = std::norm(coin.gamma());
  const cplx t12 = aa * (p12 + e * p1b2 + std::conj(e) * pb12 + pb1b2);
  const cplx tb1b2 = gg * (p12 - e * p1b2 - std::conj(e) * pb12 + pb1b2);
  const cplx t1b2 =
      std::conj(coin.alpha()) * coin.gamma() * (p12 - e * p1b2 + std::conj(e) * pb12 - pb1b2);

  return std::abs(t12 - p12) < kConstraintTol && std::abs(tb1b2 - pb1b2) < kConstraintTol &&
         std::abs(t1b2 - p1b2) < kConstraintTol;
}

}  // namespace qwalk
