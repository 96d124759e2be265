"""Equal-superposition qubit coins, their state ensembles, and the associated
discrete-time quantum walks on the integer line."""

from qwalk._core import (
    BalancedCoin,
    CoinProperties,
    ConstraintCheck,
    Distribution,
    EnsembleState,
    InitialCoinState,
    LoccBranch,
    LoccBranchQuantities,
    LoccReport,
    SignallingReport,
    SweepReport,
    TransformCheck,
    UnbalancedCoin,
    __version__,
    apply_and_verify,
    asymmetry_witness,
    balanced_symmetry_condition,
    classical_reference,
    hadamard,
    hermitian_eigenvalues,
    hybrid,
    invariant,
    is_invariant_family,
    kron,
    locc_test,
    partial_trace,
    run,
    sample_ensemble,
    satisfies_constraint,
    signalling_test,
    special_property_checks,
    theta_independence_check,
    unbalanced_symmetry_condition,
    uniqueness_sweep,
    verify_inner_products,
    von_neumann_entropy,
)

__all__ = [
    "BalancedCoin",
    "CoinProperties",
    "ConstraintCheck",
    "Distribution",
    "EnsembleState",
    "InitialCoinState",
    "LoccBranch",
    "LoccBranchQuantities",
    "LoccReport",
    "SignallingReport",
    "SweepReport",
    "TransformCheck",
    "UnbalancedCoin",
    "__version__",
    "apply_and_verify",
    "asymmetry_witness",
    "balanced_symmetry_condition",
    "classical_reference",
    "hadamard",
    "hermitian_eigenvalues",
    "hybrid",
    "invariant",
    "is_invariant_family",
    "kron",
    "locc_test",
    "partial_trace",
    "run",
    "sample_ensemble",
    "satisfies_constraint",
    "signalling_test",
    "special_property_checks",
    "theta_independence_check",
    "unbalanced_symmetry_condition",
    "uniqueness_sweep",
    "verify_inner_products",
    "von_neumann_entropy",
]
