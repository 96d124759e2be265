#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "qwalk/ensemble.hpp"
#include "qwalk/nonlocal.hpp"
#include "qwalk/walk.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

using PyMatrix = std::vector<std::vector<cplx>>;

PyMatrix to_pylist(const Matrix& m) {
  PyMatrix out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return out;
}

Matrix from_pylist(const PyMatrix& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("matrix must be non-empty");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

py::dict distribution_dict(const Distribution& d) {
  py::dict out;
  for (int z = -d.steps(); z <= d.steps(); z += 2) out[py::int_(z)] = d.at(z);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "equal-superposition coins, their qubit ensembles, and discrete-time walks "
            "on the integer line";

  py::class_<BalancedCoin>(m, "BalancedCoin")
      .def(py::init<cplx, cplx, double>(), py::arg("alpha"), py::arg("gamma"), py::arg("theta"))
      .def_property_readonly("alpha", &BalancedCoin::alpha)
      .def_property_readonly("gamma", &BalancedCoin::gamma)
      .def_property_readonly("theta", &BalancedCoin::theta)
      .def("matrix", [](const BalancedCoin& c) { return to_pylist(c.matrix()); })
      .def("__repr__", [](const BalancedCoin& c) {
        return "BalancedCoin(alpha=" + std::to_string(c.alpha().real()) + "+" +
               std::to_string(c.alpha().imag()) + "j, ...)";
      });
  m.def("hadamard", &BalancedCoin::hadamard);
  m.def("invariant", &BalancedCoin::invariant);
  m.def("hybrid", &BalancedCoin::hybrid);
  m.def("is_invariant_family", &is_invariant_family, py::arg("coin"));

  py::class_<CoinProperties>(m, "CoinProperties")
      .def_readonly("squares_to_identity", &CoinProperties::squares_to_identity)
      .def_readonly("squares_to_inot", &CoinProperties::squares_to_inot)
      .def_readonly("pauli_sum_form", &CoinProperties::pauli_sum_form);
  m.def("special_property_checks", &special_property_checks, py::arg("coin"));

  py::class_<UnbalancedCoin>(m, "UnbalancedCoin")
      .def(py::init<cplx, cplx>(), py::arg("p"), py::arg("q"))
      .def_property_readonly("p", &UnbalancedCoin::p)
      .def_property_readonly("q", &UnbalancedCoin::q)
      .def("matrix", [](const UnbalancedCoin& c) { return to_pylist(c.matrix()); });

  py::class_<EnsembleState>(m, "EnsembleState")
      .def(py::init<cplx, cplx>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &EnsembleState::a)
      .def_property_readonly("b", &EnsembleState::b)
      .def_property_readonly("x", &EnsembleState::x)
      .def_property_readonly("y", &EnsembleState::y)
      .def_property_readonly("u", &EnsembleState::u)
      .def_property_readonly("v", &EnsembleState::v);

  py::class_<ConstraintCheck>(m, "ConstraintCheck")
      .def_readonly("satisfied", &ConstraintCheck::satisfied)
      .def_readonly("residual_b", &ConstraintCheck::residual_b)
      .def_readonly("residual_a", &ConstraintCheck::residual_a);
  m.def("satisfies_constraint", &satisfies_constraint, py::arg("state"), py::arg("coin"));
  m.def("sample_ensemble", &sample_ensemble, py::arg("coin"), py::arg("seed"), py::arg("count"));

  py::class_<TransformCheck>(m, "TransformCheck")
      .def_readonly("deviation_psi", &TransformCheck::deviation_psi)
      .def_readonly("deviation_psi_bar", &TransformCheck::deviation_psi_bar);
  m.def("apply_and_verify", &apply_and_verify, py::arg("coin"), py::arg("state"));
  m.def("verify_inner_products", &verify_inner_products, py::arg("coin"), py::arg("state1"),
        py::arg("state2"));

  py::class_<InitialCoinState>(m, "InitialCoinState")
      .def(py::init<cplx, cplx>(), py::arg("up"), py::arg("down"))
      .def_property_readonly("up", &InitialCoinState::up)
      .def_property_readonly("down", &InitialCoinState::down);

  py::class_<Distribution>(m, "Distribution")
      .def_property_readonly("steps", &Distribution::steps)
      .def("at", &Distribution::at, py::arg("z"))
      .def("total", &Distribution::total)
      .def("max_asymmetry", &Distribution::max_asymmetry)
      .def("as_dict", &distribution_dict);

  m.def(
      "run",
      [](const InitialCoinState& initial, const PyMatrix& coin, int steps) {
        return run(initial, from_pylist(coin), steps);
      },
      py::arg("initial"), py::arg("coin"), py::arg("steps"));
  m.def(
      "run",
      [](const InitialCoinState& initial, const BalancedCoin& coin, int steps) {
        return run(initial, coin.matrix(), steps);
      },
      py::arg("initial"), py::arg("coin"), py::arg("steps"));
  m.def(
      "run",
      [](const InitialCoinState& initial, const UnbalancedCoin& coin, int steps) {
        return run(initial, coin.matrix(), steps);
      },
      py::arg("initial"), py::arg("coin"), py::arg("steps"));
  m.def("classical_reference", &classical_reference, py::arg("steps"));
  m.def("theta_independence_check", &theta_independence_check, py::arg("alpha"), py::arg("gamma"),
        py::arg("thetas"), py::arg("steps"));
  m.def("balanced_symmetry_condition", &balanced_symmetry_condition, py::arg("initial"),
        py::arg("coin"));
  m.def("unbalanced_symmetry_condition", &unbalanced_symmetry_condition, py::arg("initial"),
        py::arg("coin"));
  m.def(
      "asymmetry_witness",
      [](const BalancedCoin& coin) { return asymmetry_witness(coin).p1_minus_pm1; },
      py::arg("coin"));

  py::enum_<LoccBranch>(m, "LoccBranch")
      .value("PSI", LoccBranch::Psi)
      .value("PSI_BAR", LoccBranch::PsiBar);

  py::class_<SignallingReport>(m, "SignallingReport")
      .def_readonly("max_deviation", &SignallingReport::max_deviation)
      .def_readonly("eigenvalues_before", &SignallingReport::eigenvalues_before)
      .def_readonly("eigenvalues_after", &SignallingReport::eigenvalues_after)
      .def_property_readonly(
          "rho_before", [](const SignallingReport& r) { return to_pylist(r.rho_before); })
      .def_property_readonly(
          "rho_after", [](const SignallingReport& r) { return to_pylist(r.rho_after); });
  m.def("signalling_test", &signalling_test, py::arg("coin"), py::arg("a"), py::arg("b"));

  py::class_<LoccBranchQuantities>(m, "LoccBranchQuantities")
      .def_readonly("norm_factor", &LoccBranchQuantities::norm_factor)
      .def_readonly("offdiag_abs_sq", &LoccBranchQuantities::offdiag_abs_sq)
      .def_readonly("lambda_minus", &LoccBranchQuantities::lambda_minus)
      .def_readonly("lambda_plus", &LoccBranchQuantities::lambda_plus)
      .def_readonly("compact_residual", &LoccBranchQuantities::compact_residual);

  py::class_<LoccReport>(m, "LoccReport")
      .def_readonly("branch", &LoccReport::branch)
      .def_readonly("psi", &LoccReport::psi)
      .def_readonly("psibar", &LoccReport::psibar)
      .def_readonly("eigenvalues", &LoccReport::eigenvalues)
      .def_readonly("entropy_before", &LoccReport::entropy_before)
      .def_readonly("entropy_after", &LoccReport::entropy_after)
      .def_property_readonly("rho_after",
                             [](const LoccReport& r) { return to_pylist(r.rho_after); });
  m.def("locc_test", &locc_test, py::arg("coin"), py::arg("a"), py::arg("b"), py::arg("branch"));

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("resolution", &SweepReport::resolution)
      .def_readonly("intersection_within_constraint", &SweepReport::intersection_within_constraint)
      .def_readonly("constraint_within_both", &SweepReport::constraint_within_both)
      .def_readonly("min_entropy_psi_off_constraint",
                    &SweepReport::min_entropy_psi_off_constraint)
      .def_property_readonly("counts", [](const SweepReport& r) {
        py::dict out;
        out["grid_points"] = r.points.size();
        out["constraint"] = r.constraint_set.size();
        out["low_entropy_psi"] = r.set_psi.size();
        out["low_entropy_psibar"] = r.set_psibar.size();
        out["low_entropy_both"] = r.intersection.size();
        return out;
      });
  m.def("uniqueness_sweep", &uniqueness_sweep, py::arg("coin"), py::arg("resolution"));

  // dense linear-algebra helpers on nested complex lists
  m.def(
      "kron",
      [](const PyMatrix& a, const PyMatrix& b) {
        return to_pylist(kron(from_pylist(a), from_pylist(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const PyMatrix& rho, const std::vector<int>& dims, int keep) {
        return to_pylist(partial_trace(from_pylist(rho), dims, keep));
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def(
      "hermitian_eigenvalues",
      [](const PyMatrix& matrix) { return hermitian_eigenvalues(from_pylist(matrix)); },
      py::arg("matrix"));
  m.def(
      "von_neumann_entropy",
      [](const PyMatrix& rho) { return von_neumann_entropy(from_pylist(rho)); },
      py::arg("rho"));

#ifdef VERSION_INFO
#define QWALK_STR2(x) #x
#define QWALK_STR(x) QWALK_STR2(x)
  m.attr("__version__") = QWALK_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
