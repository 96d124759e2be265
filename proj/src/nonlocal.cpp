#include "qwalk/nonlocal.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

void check_qubit(cplx a, cplx b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) >= kConstructTol)
    throw std::invalid_argument("resource state: |a|^2 + |b|^2 must equal 1");
}

// index helpers, Alice-first row-major
int idx32(int alice, int bob) { return alice * 2 + bob; }
int idx222(int alice, int b1, int b2) { return alice * 4 + b1 * 2 + b2; }

double entropy_of_lambda_pair(double lambda_minus) {
  const double lm = std::min(std::max(lambda_minus, 0.0), 1.0);
  const double lp = 1.0 - lm;
  double h = 0.0;
  if (lm > 0.0) h -= lm * std::log2(lm);
  if (lp > 0.0) h -= lp * std::log2(lp);
  return h;
}

LoccBranchQuantities quantities_from(double norm_factor, double offdiag_abs_sq,
                                     double compact_residual) {
  const double disc =
      std::max(norm_factor * norm_factor - 4.0 * (norm_factor - 1.0 - offdiag_abs_sq), 0.0);
  const double half_spread = std::sqrt(disc) / (2.0 * norm_factor);
  return LoccBranchQuantities{norm_factor, offdiag_abs_sq, 0.5 - half_spread,
                              0.5 + half_spread, compact_residual};
}

// Factored form of the zero-entanglement condition for either branch. The
// first factor is shared; the second differs between branches; the right-hand
// side is the squared bracket, nonpositive by construction.
double compact_residual(const BalancedCoin& coin, cplx a, cplx b, LoccBranch branch) {
  const cplx e = coin.phase();
  const cplx em = std::conj(e);
  const cplx goa = coin.gamma() / coin.alpha();
  const cplx aog = coin.alpha() / coin.gamma();
  const double a2 = (a + std::conj(a)).real();
  const double b2 = (em * b + e * std::conj(b)).real();
  const double g = (goa * b + aog * std::conj(b)).real();
  const double factor = branch == LoccBranch::Psi ? (-0.75 * a2 + 0.25 * b2 + 0.5 * g)
                                                  : (-0.375 * a2 - 0.125 * b2 + 0.5 * g);
  const cplx half_phase = std::polar(1.0, coin.theta() / 2.0);
  const cplx root = std::sqrt(goa);  // its reciprocal must be the matching branch
  const cplx bracket =
      std::conj(half_phase) * root * b - half_phase * (1.0 / root) * std::conj(b);
  return std::abs((a2 - b2) * factor + bracket * bracket);
}

}  // namespace

ResourceState build_resource(ResourceKind kind, cplx a, cplx b) {
  check_qubit(a, b);
  switch (kind) {
    case ResourceKind::Signalling: {
      std::vector<cplx> v(6, 0.0);
      const double n = 1.0 / std::sqrt(3.0);
      v[static_cast<std::size_t>(idx32(0, 0))] = n;
      v[static_cast<std::size_t>(idx32(1, 0))] = n * a;
      v[static_cast<std::size_t>(idx32(1, 1))] = n * b;
      v[static_cast<std::size_t>(idx32(2, 1))] = n;
      return ResourceState{kind, {3, 2}, std::move(v), a, b};
    }
    case ResourceKind::LoccPsi: {
      if (std::abs(b) < kConstructTol)
        throw std::invalid_argument("resource state: embedded psi requires b != 0");
      const double n = 1.0 / std::sqrt((1.0 + std::norm(b)) * 2.0);
      std::vector<cplx> v(8, 0.0);
      // |0>_A (|01> - |10>) + |1>_A (|0 psi> - |psi 0>), all over sqrt(2(1+b*b))
      v[static_cast<std::size_t>(idx222(0, 0, 1))] += n;
      v[static_cast<std::size_t>(idx222(0, 1, 0))] -= n;
      v[static_cast<std::size_t>(idx222(1, 0, 0))] += n * a;
      v[static_cast<std::size_t>(idx222(1, 0, 1))] += n * b;
      v[static_cast<std::size_t>(idx222(1, 0, 0))] -= n * a;
      v[static_cast<std::size_t>(idx222(1, 1, 0))] -= n * b;
      return ResourceState{kind, {2, 2, 2}, std::move(v), a, b};
    }
    case ResourceKind::LoccPsiBar: {
      if (std::abs(a) < kConstructTol)
        throw std::invalid_argument("resource state: embedded complement requires a != 0");
      const double n = 1.0 / std::sqrt((1.0 + std::norm(a)) * 2.0);
      const cplx bs = std::conj(b);
      const cplx as = std::conj(a);
      std::vector<cplx> v(8, 0.0);
      v[static_cast<std::size_t>(idx222(0, 0, 1))] += n;
      v[static_cast<std::size_t>(idx222(0, 1, 0))] -= n;
      // psi_bar = b*|0> - a*|1>
      v[static_cast<std::size_t>(idx222(1, 0, 0))] += n * bs;
      v[static_cast<std::size_t>(idx222(1, 0, 1))] -= n * as;
      v[static_cast<std::size_t>(idx222(1, 0, 0))] -= n * bs;
      v[static_cast<std::size_t>(idx222(1, 1, 0))] += n * as;
      return ResourceState{kind, {2, 2, 2}, std::move(v), a, b};
    }
  }
  throw std::invalid_argument("unknown resource kind");
}

SignallingReport signalling_test(const BalancedCoin& coin, cplx a, cplx b) {
  const ResourceState before = build_resource(ResourceKind::Signalling, a, b);
  const Matrix rho_before = partial_trace(projector(before.amplitudes), before.dims, 0);

  // Bob's operation sends |0>, |1>, psi to their target superpositions; the
  // psi slot expands through (a, b) and the complement convention.
  const cplx e = coin.phase();
  const cplx al = coin.alpha();
  const cplx ga = coin.gamma();
  const double n = 1.0 / std::sqrt(3.0);
  std::vector<cplx> after(6, 0.0);
  after[static_cast<std::size_t>(idx32(0, 0))] = n * al;
  after[static_cast<std::size_t>(idx32(0, 1))] = n * e * al;
  after[static_cast<std::size_t>(idx32(1, 0))] = n * (al * a + e * al * std::conj(b));
  after[static_cast<std::size_t>(idx32(1, 1))] = n * (al * b - e * al * std::conj(a));
  after[static_cast<std::size_t>(idx32(2, 0))] = n * ga;
  after[static_cast<std::size_t>(idx32(2, 1))] = n * (-e * ga);
  const Matrix rho_after = partial_trace(projector(after), before.dims, 0);

  return SignallingReport{rho_before, rho_after, max_abs_diff(rho_before, rho_after),
                          hermitian_eigenvalues(rho_before), hermitian_eigenvalues(rho_after)};
}

LoccBranchQuantities locc_branch_closed_form(const BalancedCoin& coin, cplx a, cplx b,
                                             LoccBranch branch) {
  const cplx e = coin.phase();
  const cplx em = std::conj(e);
  const cplx as = std::conj(a);
  const cplx bs = std::conj(b);
  const cplx al = coin.alpha();
  const cplx ga = coin.gamma();
  double norm_factor;
  cplx offdiag;
  if (branch == LoccBranch::Psi) {
    norm_factor = (2.0 + 0.25 * ((a - as) * (a - as) - (em * b + e * bs) * (a + as))).real();
    offdiag = 0.5 * (al * std::conj(ga) * (a + as - em * b + e * bs) + b);
  } else {
    norm_factor = (2.0 - 0.5 * (ga * std::conj(al) * b * (a + as + em * b - e * bs) +
                                al * std::conj(ga) * bs * (a + as - em * b + e * bs)))
                      .real();
    offdiag = 0.25 * (a - as - em * b - e * bs) - 0.5 * as;
  }
  return quantities_from(norm_factor, std::norm(offdiag),
                         compact_residual(coin, a, b, branch));
}

LoccReport locc_test(const BalancedCoin& coin, cplx a, cplx b, LoccBranch branch) {
  const ResourceKind kind =
      branch == LoccBranch::Psi ? ResourceKind::LoccPsi : ResourceKind::LoccPsiBar;
  const ResourceState resource = build_resource(kind, a, b);
  const double entropy_before =
      von_neumann_entropy(partial_trace(projector(resource.amplitudes), resource.dims, 0));

  // Bob applies the coin to his second particle. Substitute the
  // transformation targets for the three symbols appearing there and expand
  // psi / psi_bar through (a, b).
  const cplx e = coin.phase();
  const cplx al = coin.alpha();
  const cplx ga = coin.gamma();
  const std::array<cplx, 2> psi{a, b};
  const std::array<cplx, 2> bar{std::conj(b), -std::conj(a)};

  std::vector<cplx> raw(8, 0.0);
  auto add = [&raw](int alice, const std::array<cplx, 2>& b1, const std::array<cplx, 2>& b2,
                    cplx coeff) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        raw[static_cast<std::size_t>(idx222(alice, i, j))] +=
            coeff * b1[static_cast<std::size_t>(i)] * b2[static_cast<std::size_t>(j)];
  };
  const std::array<cplx, 2> k0{1.0, 0.0};
  const std::array<cplx, 2> k1{0.0, 1.0};
  // shared block from the singlet: |0>_A (|0> U|1> - |1> U|0>)
  add(0, k0, k0, ga);
  add(0, k0, k1, -e * ga);
  add(0, k1, k0, -al);
  add(0, k1, k1, -e * al);
  if (branch == LoccBranch::Psi) {
    // |1>_A (|0> U|psi> - |psi> U|0>)
    add(1, k0, psi, al);
    add(1, k0, bar, e * al);
    add(1, psi, k0, -al);
    add(1, psi, k1, -e * al);
  } else {
    // |1>_A (|0> U|psi_bar> - |psi_bar> U|0>)
    add(1, k0, psi, ga);
    add(1, k0, bar, -e * ga);
    add(1, bar, k0, -al);
    add(1, bar, k1, -e * al);
  }

  double raw_norm_sq = 0.0;
  for (const cplx& c : raw) raw_norm_sq += std::norm(c);
  const double norm_factor = raw_norm_sq / 2.0;
  const double scale = 1.0 / std::sqrt(raw_norm_sq);
  for (cplx& c : raw) c *= scale;

  const Matrix rho_after = partial_trace(projector(raw), resource.dims, 0);
  const double offdiag_abs_sq = std::norm(rho_after(1, 0) * norm_factor);

  LoccBranchQuantities built = quantities_from(norm_factor, offdiag_abs_sq,
                                               compact_residual(coin, a, b, branch));
  LoccBranchQuantities other = locc_branch_closed_form(
      coin, a, b, branch == LoccBranch::Psi ? LoccBranch::PsiBar : LoccBranch::Psi);

  LoccReport report{
      branch,
      branch == LoccBranch::Psi ? built : other,
      branch == LoccBranch::Psi ? other : built,
      rho_after,
      hermitian_eigenvalues(rho_after),
      entropy_before,
      von_neumann_entropy(rho_after),
  };
  return report;
}

SweepReport uniqueness_sweep(const BalancedCoin& coin, int resolution) {
  if (resolution < 10) throw std::invalid_argument("uniqueness_sweep: resolution must be >= 10");
  const int r = resolution;
  SweepReport report;
  report.resolution = r;
  report.points.reserve(static_cast<std::size_t>(r) * r * r);
  report.min_entropy_psi_off_constraint = std::numeric_limits<double>::infinity();

  for (int i1 = 0; i1 < r; ++i1) {
    const double t1 = std::numbers::pi * i1 / r;
    const double x = std::cos(t1);
    const double s1 = std::sin(t1);
    for (int i2 = 0; i2 < r; ++i2) {
      const double t2 = std::numbers::pi * i2 / r;
      const double y = s1 * std::cos(t2);
      const double s2 = s1 * std::sin(t2);
      for (int i3 = 0; i3 < r; ++i3) {
        const double t3 = 2.0 * std::numbers::pi * i3 / r;
        const double u = s2 * std::cos(t3);
        const double v = s2 * std::sin(t3);
        const cplx a(x, y);
        const cplx b(u, v);

        // same residuals as satisfies_constraint, without the normalized-state
        // wrapper (grid points carry O(eps) normalization dust)
        const cplx e = coin.phase();
        const double res_b =
            std::abs(b - e * (coin.alpha() / coin.gamma()) * std::conj(b));
        const double res_a =
            std::abs((a + std::conj(a)) - (std::conj(e) * b + e * std::conj(b)));
        const bool sat = res_b < kConstraintTol && res_a < kConstraintTol;

        const LoccBranchQuantities qp = locc_branch_closed_form(coin, a, b, LoccBranch::Psi);
        const LoccBranchQuantities qb = locc_branch_closed_form(coin, a, b, LoccBranch::PsiBar);
        const double hp = entropy_of_lambda_pair(qp.lambda_minus);
        const double hb = entropy_of_lambda_pair(qb.lambda_minus);

        const int index = static_cast<int>(report.points.size());
        report.points.push_back(SweepPoint{x, y, u, v, res_b, res_a, hp, hb, sat});
        if (hp < kDerivedTol) report.set_psi.push_back(index);
        if (hb < kDerivedTol) report.set_psibar.push_back(index);
        if (hp < kDerivedTol && hb < kDerivedTol) report.intersection.push_back(index);
        if (sat) report.constraint_set.push_back(index);
        if (!sat)
          report.min_entropy_psi_off_constraint =
              std::min(report.min_entropy_psi_off_constraint, hp);
      }
    }
  }

  report.intersection_within_constraint = true;
  for (int idx : report.intersection)
    if (!report.points[static_cast<std::size_t>(idx)].satisfies)
      report.intersection_within_constraint = false;
  report.constraint_within_both = true;
  for (int idx : report.constraint_set) {
    const SweepPoint& p = report.points[static_cast<std::size_t>(idx)];
    if (p.entropy_psi >= kDerivedTol || p.entropy_psibar >= kDerivedTol)
      report.constraint_within_both = false;
  }
  return report;
}

}  // namespace qwalk
