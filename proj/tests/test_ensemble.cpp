#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qwalk/ensemble.hpp"

using namespace qwalk;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kPi = std::numbers::pi;

BalancedCoin random_coin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return BalancedCoin(std::polar(kInvSqrt2, angle(rng)), std::polar(kInvSqrt2, angle(rng)),
                      angle(rng));
}

EnsembleState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double c[4];
  double n = 0.0;
  for (double& e : c) {
    e = g(rng);
    n += e * e;
  }
  n = std::sqrt(n);
  return EnsembleState(cplx(c[0], c[1]) / n, cplx(c[2], c[3]) / n);
}

cplx ip2(const std::array<cplx, 2>& x, const std::array<cplx, 2>& y) {
  return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

}  // namespace

TEST_CASE("state construction and the complement convention") {
  const EnsembleState s(cplx(0.6, 0.0), cplx(0.0, 0.8));
  CHECK(s.x() == 0.6);
  CHECK(s.v() == 0.8);
  const auto bar = s.psi_bar();
  CHECK(bar[0] == cplx(0.0, -0.8));
  CHECK(bar[1] == cplx(-0.6, 0.0));
  CHECK(std::abs(ip2(s.psi(), s.psi_bar())) < kConstructTol);
  CHECK_THROWS_AS(EnsembleState(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("constraint membership on the fixed examples") {
  // equal real amplitudes belong to the Hadamard ensemble
  const auto h = satisfies_constraint(EnsembleState(kInvSqrt2, kInvSqrt2),
                                      BalancedCoin::hadamard());
  CHECK(h.satisfied);
  CHECK(h.residual_b < 1e-10);
  CHECK(h.residual_a < 1e-10);

  // a = 1, b = 0 fails for any coin: the a-residual is |a + a*| = 2
  for (const auto& coin : {BalancedCoin::hadamard(), BalancedCoin::invariant(),
                           BalancedCoin::hybrid()}) {
    const auto r = satisfies_constraint(EnsembleState(1.0, 0.0), coin);
    CHECK(!r.satisfied);
    CHECK(r.residual_a == doctest::Approx(2.0));
  }

  // a = i/sqrt(2), b = 1/sqrt(2) belongs to the invariant ensemble
  const auto i = satisfies_constraint(EnsembleState(cplx(0.0, kInvSqrt2), kInvSqrt2),
                                      BalancedCoin::invariant());
  CHECK(i.satisfied);
}

TEST_CASE("characterization of the Hadamard and invariant ensembles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const EnsembleState s = random_state(rng);
    const bool sat_h =
        satisfies_constraint(s, BalancedCoin::hadamard()).satisfied;
    const bool char_h = std::abs(s.v()) < 1e-10 && std::abs(s.u() - s.x()) < 1e-10;
    CHECK(sat_h == char_h);
    const bool sat_i =
        satisfies_constraint(s, BalancedCoin::invariant()).satisfied;
    const bool char_i = std::abs(s.v()) < 1e-10 && std::abs(s.x()) < 1e-10;
    CHECK(sat_i == char_i);
  }
  // members built on the characterized sets are accepted
  const EnsembleState h(cplx(0.6, std::sqrt(0.28)), 0.6);
  CHECK(satisfies_constraint(h, BalancedCoin::hadamard()).satisfied);
  const EnsembleState i(cplx(0.0, 0.8), 0.6);
  CHECK(satisfies_constraint(i, BalancedCoin::invariant()).satisfied);
}

TEST_CASE("sampler output lands in the ensemble") {
  const auto hadamard_samples = sample_ensemble(BalancedCoin::hadamard(), 42, 50);
  REQUIRE(hadamard_samples.size() == 50);
  for (const auto& s : hadamard_samples) {
    CHECK(satisfies_constraint(s, BalancedCoin::hadamard()).satisfied);
    CHECK(std::abs(s.v()) < 1e-12);
    CHECK(std::abs(s.u() - s.x()) < 1e-12);
    CHECK(std::abs(s.b()) > 0.0);
  }
  const auto invariant_samples = sample_ensemble(BalancedCoin::invariant(), 42, 50);
  for (const auto& s : invariant_samples) {
    CHECK(satisfies_constraint(s, BalancedCoin::invariant()).satisfied);
    CHECK(std::abs(s.v()) < 1e-12);
    CHECK(std::abs(s.x()) < 1e-12);
  }

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const BalancedCoin coin = random_coin(rng);
    for (const auto& s : sample_ensemble(coin, 1000 + static_cast<std::uint64_t>(trial), 25))
      CHECK(satisfies_constraint(s, coin).satisfied);
  }
}

TEST_CASE("sampler is deterministic per seed") {
  const auto a = sample_ensemble(BalancedCoin::hybrid(), 9, 10);
  const auto b = sample_ensemble(BalancedCoin::hybrid(), 9, 10);
  const auto c = sample_ensemble(BalancedCoin::hybrid(), 10, 10);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].a() == b[k].a());
    CHECK(a[k].b() == b[k].b());
  }
  CHECK(a[0].a() != c[0].a());
  CHECK_THROWS_AS(sample_ensemble(BalancedCoin::hadamard(), 1, 0), std::invalid_argument);
}

TEST_CASE("transformation check on and off the ensemble") {
  // Hadamard-ensemble member with x = 0.6, y = sqrt(0.28)
  const EnsembleState member(cplx(0.6, std::sqrt(0.28)), 0.6);
  const auto ok = apply_and_verify(BalancedCoin::hadamard(), member);
  CHECK(ok.deviation_psi < 1e-10);
  CHECK(ok.deviation_psi_bar < 1e-10);

  // a = 1, b = 0: the psi-branch deviation is 2|alpha| = sqrt(2)
  const auto bad = apply_and_verify(BalancedCoin::hadamard(), EnsembleState(1.0, 0.0));
  CHECK(bad.deviation_psi > 0.9);
  CHECK(bad.deviation_psi == doctest::Approx(std::sqrt(2.0)));

  const EnsembleState inv(cplx(0.0, 0.28), std::sqrt(1.0 - 0.28 * 0.28));
  const auto inv_ok = apply_and_verify(BalancedCoin::invariant(), inv);
  CHECK(inv_ok.deviation_psi < 1e-10);
  CHECK(inv_ok.deviation_psi_bar < 1e-10);
}

TEST_CASE("constraint holds exactly when the transformation deviations vanish") {
  std::mt19937_64 rng(17);
  int members = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const BalancedCoin coin = random_coin(rng);
    const bool from_sampler = (trial % 2) == 0;
    const EnsembleState s = from_sampler
                                ? sample_ensemble(coin, static_cast<std::uint64_t>(trial), 1)[0]
                                : random_state(rng);
    const bool sat = satisfies_constraint(s, coin).satisfied;
    const auto dev = apply_and_verify(coin, s);
    const bool small = dev.deviation_psi < 1e-10 && dev.deviation_psi_bar < 1e-10;
    CHECK(sat == small);
    members += sat;
  }
  CHECK(members >= 250);  // every sampled state is a member
}

TEST_CASE("every invariant-family member defines the same ensemble as the representative") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const BalancedCoin representative = BalancedCoin::invariant();
  for (int trial = 0; trial < 120; ++trial) {
    const cplx alpha = std::polar(kInvSqrt2, angle(rng));
    const bool plus = (rng() & 1) != 0;
    const BalancedCoin member(alpha, (plus ? cplx(0.0, 1.0) : cplx(0.0, -1.0)) * alpha,
                              plus ? kPi / 2.0 : 3.0 * kPi / 2.0);
    REQUIRE(is_invariant_family(member));
    const EnsembleState s =
        (trial % 2) ? sample_ensemble(representative, static_cast<std::uint64_t>(trial), 1)[0]
                    : random_state(rng);
    CHECK(satisfies_constraint(s, member).satisfied ==
          satisfies_constraint(s, representative).satisfied);
  }
}

TEST_CASE("verdicts are invariant under a common phase on alpha and gamma") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const BalancedCoin coin = random_coin(rng);
    const cplx phase = std::polar(1.0, angle(rng));
    const BalancedCoin rotated(phase * coin.alpha(), phase * coin.gamma(), coin.theta());
    const EnsembleState s =
        (trial % 2) ? sample_ensemble(coin, static_cast<std::uint64_t>(trial), 1)[0]
                    : random_state(rng);
    CHECK(satisfies_constraint(s, coin).satisfied ==
          satisfies_constraint(s, rotated).satisfied);
  }
}

TEST_CASE("inner products are preserved on the ensemble") {
  // identical states: norms and orthogonality
  const EnsembleState s(cplx(0.6, std::sqrt(0.28)), 0.6);
  CHECK(verify_inner_products(BalancedCoin::hadamard(), s, s));
  CHECK(std::abs(ip2(s.psi(), s.psi()) - cplx(1.0)) < kConstructTol);
  CHECK(std::abs(ip2(s.psi(), s.psi_bar())) < kConstructTol);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const BalancedCoin coin = random_coin(rng);
    const auto pair = sample_ensemble(coin, static_cast<std::uint64_t>(trial) + 500, 2);
    CHECK(verify_inner_products(coin, pair[0], pair[1]));

    // independent oracle: direct matrix action on both states
    const Matrix u = coin.matrix();
    auto act = [&u](const std::array<cplx, 2>& w) {
      return std::array<cplx, 2>{u(0, 0) * w[0] + u(0, 1) * w[1],
                                 u(1, 0) * w[0] + u(1, 1) * w[1]};
    };
    const auto& s1 = pair[0];
    const auto& s2 = pair[1];
    CHECK(std::abs(ip2(act(s1.psi()), act(s2.psi())) - ip2(s1.psi(), s2.psi())) < 1e-10);
    CHECK(std::abs(ip2(act(s1.psi_bar()), act(s2.psi_bar())) -
                   ip2(s1.psi_bar(), s2.psi_bar())) < 1e-10);
    CHECK(std::abs(ip2(act(s1.psi()), act(s2.psi_bar())) - ip2(s1.psi(), s2.psi_bar())) <
          1e-10);

    // second oracle: the (u, v, y) closed form of the member inner products
    const cplx e = coin.phase();
    const cplx goa = coin.gamma() / coin.alpha();
    const cplx b1 = s1.b();
    const cplx b2 = s2.b();
    const cplx closed12 =
        0.25 * (6.0 + e * goa + std::conj(e * goa)) * std::conj(e) * goa * b1 * b2 +
        s1.y() * s2.y() +
        cplx(0.0, 0.5) * (std::conj(e) + goa) * (b1 * s2.y() - b2 * s1.y());
    const cplx closed1b2 =
        cplx(0.0, 1.0) * std::conj(e) * goa * (b1 * s2.y() - b2 * s1.y());
    CHECK(std::abs(closed12 - ip2(s1.psi(), s2.psi())) < 1e-10);
    CHECK(std::abs(closed1b2 - ip2(s1.psi(), s2.psi_bar())) < 1e-10);
    CHECK(std::abs(std::conj(closed12) - ip2(s1.psi_bar(), s2.psi_bar())) < 1e-10);
    CHECK(std::abs(-std::conj(closed1b2) - ip2(s1.psi_bar(), s2.psi())) < 1e-10);
  }

  // non-members are rejected up front
  CHECK_THROWS_AS(
      verify_inner_products(BalancedCoin::hadamard(), EnsembleState(1.0, 0.0), s),
      std::invalid_argument);
}
