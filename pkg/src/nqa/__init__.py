"""Symbolic calculus for real m-qubit operators over the alphabet I, X, Z, W.

Operators live as sparse real combinations of signed tensor words; products,
transposes, and graded brackets stay exact on the word level, while a dense
bridge (to_dense / from_dense / apply) connects to ordinary matrices for
small m.  Complex gates are carried as explicit real + imaginary pairs and
realified onto one extra slot when a genuinely real matrix is needed.
"""

from .errors import (
    DenseCapError,
    DimensionError,
    EvaluationError,
    ExponentialFormError,
    HomogeneityError,
    NqaError,
    NumericError,
    ParseError,
)
from .words import (
    BlockIndex,
    NqaWord,
    SignedWord,
    degree,
    epsilon,
    omega,
    packed_mul,
    packed_transpose_parity,
    parity,
    word_mul,
    word_transpose,
)
from .operators import (
    DENSE_CAP,
    PRUNE_TOL,
    FactoredOperator,
    NqaOperator,
    ProductReflection,
    anticommutator,
    basis_state,
    commutator,
    epsilon_commutator,
    frobenius,
    from_dense,
    is_orthogonal,
    op_mul,
    op_transpose,
    supercommutator,
    tensor,
    to_dense,
    uniform_state,
    word_to_dense,
)
from .linalg import determinant, mat_mul, mat_transpose, mat_vec, max_norm, sym_eigenvalues
from .realify import ComplexNqaOperator, complex_dagger, complex_mul, phi
from .gates import (
    LIFTED_GATE_NAMES,
    SINGLE_GATE_NAMES,
    TWO_GATE_NAMES,
    bell_transform,
    cartan_factors,
    cphase_complex,
    iswap_complex,
    lifted_gate,
    mcz,
    real_exponential,
    single_gate,
    sqrtswap_complex,
    two_gate,
    word_pair,
)
from .clifford22 import (
    CliffordMonomial,
    canonicalize,
    dictionary,
    generator,
    grade,
    monomial_mul,
    monomial_to_word,
    pauli_label,
    pseudoscalar,
    word_to_monomial,
)
from .algorithms import (
    BvOracleSpec,
    BvRecovery,
    DiffusionReflection,
    GroverRun,
    GroverSpec,
    OracleReflection,
    bv_circuit,
    bv_oracle,
    bv_recover,
    eigenphases,
    grover_auto_iterations,
    grover_diffusion,
    grover_iterate_dense,
    grover_oracle,
    grover_run,
    grover_success_formula,
    grover_theta,
    is_clifford_spectrum,
)
from .chsh import (
    ClassicalModel,
    NonembeddabilityReport,
    chsh_from_settings,
    chsh_quantum_matrix,
    chsh_quantum_spectrum,
    classical_value_set,
    classical_values,
    nonembeddability_report,
    sigma,
    standard_settings,
)
from .checks import (
    CHECK_NAMES,
    CheckResult,
    epsilon_jacobi_residual,
    run_checks,
    super_jacobi_residual,
)
from .expr import evaluate, format_expr, parse

__version__ = "0.1.0"

__all__ = [
    "BlockIndex",
    "BvOracleSpec",
    "BvRecovery",
    "CHECK_NAMES",
    "CheckResult",
    "ClassicalModel",
    "CliffordMonomial",
    "ComplexNqaOperator",
    "DENSE_CAP",
    "DenseCapError",
    "DiffusionReflection",
    "DimensionError",
    "EvaluationError",
    "ExponentialFormError",
    "FactoredOperator",
    "GroverRun",
    "GroverSpec",
    "HomogeneityError",
    "LIFTED_GATE_NAMES",
    "NonembeddabilityReport",
    "NqaError",
    "NqaOperator",
    "NqaWord",
    "NumericError",
    "OracleReflection",
    "PRUNE_TOL",
    "ParseError",
    "ProductReflection",
    "SINGLE_GATE_NAMES",
    "SignedWord",
    "TWO_GATE_NAMES",
    "anticommutator",
    "basis_state",
    "bell_transform",
    "bv_circuit",
    "bv_oracle",
    "bv_recover",
    "canonicalize",
    "cartan_factors",
    "chsh_from_settings",
    "chsh_quantum_matrix",
    "chsh_quantum_spectrum",
    "classical_value_set",
    "classical_values",
    "commutator",
    "complex_dagger",
    "complex_mul",
    "cphase_complex",
    "degree",
    "determinant",
    "dictionary",
    "eigenphases",
    "epsilon",
    "epsilon_commutator",
    "epsilon_jacobi_residual",
    "evaluate",
    "format_expr",
    "frobenius",
    "from_dense",
    "generator",
    "grade",
    "grover_auto_iterations",
    "grover_diffusion",
    "grover_iterate_dense",
    "grover_oracle",
    "grover_run",
    "grover_success_formula",
    "grover_theta",
    "is_clifford_spectrum",
    "is_orthogonal",
    "iswap_complex",
    "lifted_gate",
    "mat_mul",
    "mat_transpose",
    "mat_vec",
    "max_norm",
    "mcz",
    "monomial_mul",
    "monomial_to_word",
    "nonembeddability_report",
    "omega",
    "op_mul",
    "op_transpose",
    "packed_mul",
    "packed_transpose_parity",
    "parity",
    "parse",
    "pauli_label",
    "phi",
    "pseudoscalar",
    "real_exponential",
    "run_checks",
    "sigma",
    "single_gate",
    "sqrtswap_complex",
    "standard_settings",
    "super_jacobi_residual",
    "supercommutator",
    "sym_eigenvalues",
    "tensor",
    "to_dense",
    "two_gate",
    "uniform_state",
    "word_mul",
    "word_pair",
    "word_to_dense",
    "word_to_monomial",
    "word_transpose",
]
