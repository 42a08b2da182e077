"""Structured-oracle algorithms: parity recovery and amplitude amplification.

The parity oracle for a secret s is the product of Z words on the support
wires, so conjugating by Hadamard layers turns |0...0> into |s> exactly;
recovery reads the secret off the factor list in a number of elementary
steps linear in m plus the factor count, never touching a vector.  A wire
appearing an even number of times cancels (Z^2 = 1): the recovered secret
is the XOR of the factor list.

Grover's oracle and diffusion are kept as rank-one-update reflections with
O(2^m) application cost and linear-size structured descriptions; the
expanded diffusion would have 2^m block terms.  Spectral analysis reduces
an orthogonal iterate to its symmetric part, whose eigenvalues are the
cosines of the rotation phases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import DimensionError, NumericError
from .gates import single_gate
from .operators import (
    FactoredOperator,
    NqaOperator,
    ProductReflection,
    basis_state,
    to_dense,
    is_orthogonal,
    uniform_state,
)

__all__ = [
    "BvOracleSpec",
    "BvRecovery",
    "bv_oracle",
    "bv_recover",
    "bv_circuit",
    "GroverSpec",
    "OracleReflection",
    "DiffusionReflection",
    "grover_oracle",
    "grover_diffusion",
    "grover_iterate_dense",
    "grover_run",
    "GroverRun",
    "grover_theta",
    "grover_auto_iterations",
    "grover_success_formula",
    "eigenphases",
    "is_clifford_spectrum",
]


# ---------------------------------------------------------------------------
# parity oracle


@dataclass(frozen=True, slots=True)
class BvOracleSpec:
    """Oracle description: slot count and the ordered factor list (may repeat)."""

    m: int
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for k in self.factors:
            if not 1 <= k <= self.m:
                raise DimensionError(f"factor wire {k} outside 1..{self.m}")

    @classmethod
    def from_support(cls, m: int, support: Iterable[int]) -> "BvOracleSpec":
        wires = sorted(set(support))
        return cls(m, tuple(wires))

    @classmethod
    def from_factors(cls, m: int, factors: Iterable[int]) -> "BvOracleSpec":
        return cls(m, tuple(factors))

    @property
    def secret_mask(self) -> int:
        """XOR of the factor list: wires with odd multiplicity."""
        mask = 0
        for k in self.factors:
            mask ^= 1 << (self.m - k)
        return mask

    @property
    def secret(self) -> str:
        return format(self.secret_mask, f"0{self.m}b")


@dataclass(frozen=True, slots=True)
class BvRecovery:
    secret: str
    steps: int
    factored_size: int


def bv_oracle(spec: BvOracleSpec) -> FactoredOperator:
    """The oracle as a product of single-Z factors, one per list entry."""
    return FactoredOperator(spec.m, tuple(single_gate("Z", k, spec.m) for k in spec.factors))


def bv_recover(spec: BvOracleSpec) -> BvRecovery:
    """Read the secret from the factor list in O(m + L) counted steps."""
    steps = 0
    flags = []
    for _ in range(spec.m):
        flags.append(0)
        steps += 1
    for k in spec.factors:
        flags[k - 1] ^= 1
        steps += 1
    chars = []
    for bit in flags:
        chars.append("1" if bit else "0")
        steps += 1
    return BvRecovery("".join(chars), steps, len(spec.factors))


def bv_circuit(spec: BvOracleSpec) -> np.ndarray:
    """Final state of H-layer, oracle, H-layer on |0...0>, applied factored."""
    h_layer = [single_gate("H", k, spec.m) for k in range(1, spec.m + 1)]
    circuit = FactoredOperator(
        spec.m,
        tuple(h_layer) + tuple(bv_oracle(spec).factors) + tuple(h_layer),
    )
    return circuit.apply(basis_state(spec.m, 0))


# ---------------------------------------------------------------------------
# amplitude amplification


@dataclass(frozen=True, slots=True)
class GroverSpec:
    """Search description: slot count, marked bit string, iteration budget.

    iterations None means the closed-form budget round(pi/(4 theta) - 1/2)
    with theta = arcsin(2^(-m/2)).
    """

    m: int
    marked: str
    iterations: int | None = None

    def __post_init__(self):
        if len(self.marked) != self.m or any(ch not in "01" for ch in self.marked):
            raise DimensionError(
                f"marked pattern must be {self.m} characters of 0/1, got {self.marked!r}"
            )
        if self.iterations is not None and self.iterations < 0:
            raise DimensionError("iteration budget cannot be negative")

    @property
    def marked_index(self) -> int:
        return int(self.marked, 2)


@dataclass(frozen=True, slots=True)
class OracleReflection:
    """Sign flip on one marked basis state: v -> v - 2 v[marked] e_marked."""

    m: int
    marked_index: int

    def apply(self, vec) -> np.ndarray:
        v = np.asarray(vec, dtype=np.float64).copy()
        _check_len(v, self.m)
        v[self.marked_index] = -v[self.marked_index]
        return v

    def to_dense(self) -> np.ndarray:
        n = 1 << self.m
        out = np.eye(n)
        out[self.marked_index, self.marked_index] = -1.0
        return out

    def as_projector_reflection(self) -> ProductReflection:
        """identity - 2 * product of per-slot basis projectors."""
        bits = format(self.marked_index, f"0{self.m}b")
        factors = tuple(
            single_gate("P1" if bit == "1" else "P0", k + 1, self.m)
            for k, bit in enumerate(bits)
        )
        return ProductReflection(self.m, factors, scale=1)


@dataclass(frozen=True, slots=True)
class DiffusionReflection:
    """Reflection about the uniform state: v -> 2 <s|v> |s> - v."""

    m: int

    def apply(self, vec) -> np.ndarray:
        v = np.asarray(vec, dtype=np.float64)
        _check_len(v, self.m)
        return 2.0 * v.mean() - v

    def to_dense(self) -> np.ndarray:
        n = 1 << self.m
        return np.full((n, n), 2.0 / n) - np.eye(n)

    def as_projector_reflection(self) -> ProductReflection:
        """-(identity - 2 * product of per-slot uniform projectors)."""
        half = 1.0 / 2.0
        factors = []
        for k in range(1, self.m + 1):
            plus = NqaOperator.identity(self.m) * half + single_gate("X", k, self.m) * half
            factors.append(plus)
        return ProductReflection(self.m, tuple(factors), scale=-1)


def _check_len(v: np.ndarray, m: int) -> None:
    if v.shape != (1 << m,):
        raise DimensionError(f"state vector must have length {1 << m}, got shape {v.shape}")


def grover_oracle(spec: GroverSpec) -> OracleReflection:
    return OracleReflection(spec.m, spec.marked_index)


def grover_diffusion(m: int) -> DiffusionReflection:
    return DiffusionReflection(m)


def grover_theta(m: int) -> float:
    return math.asin(2.0 ** (-m / 2.0))


def grover_auto_iterations(m: int) -> int:
    theta = grover_theta(m)
    return round(math.pi / (4.0 * theta) - 0.5)


def grover_success_formula(m: int, t: int) -> float:
    """Closed-form success probability sin^2((2t+1) theta)."""
    return math.sin((2 * t + 1) * grover_theta(m)) ** 2


@dataclass(frozen=True, slots=True)
class GroverRun:
    spec: GroverSpec
    iterations: int
    trace: tuple[float, ...]
    success: float
    theta: float
    oracle_factored_size: int
    diffusion_factored_size: int
    diffusion_expanded_terms: int


def grover_run(spec: GroverSpec) -> GroverRun:
    """Iterate diffusion after oracle, tracking the marked amplitude squared.

    trace[t] is the success probability after t full iterations; the
    structured reflections keep every step at O(2^m) work.
    """
    iterations = spec.iterations if spec.iterations is not None else grover_auto_iterations(spec.m)
    oracle = grover_oracle(spec)
    diffusion = grover_diffusion(spec.m)
    v = uniform_state(spec.m)
    trace = [float(v[oracle.marked_index] ** 2)]
    for _ in range(iterations):
        v = diffusion.apply(oracle.apply(v))
        trace.append(float(v[oracle.marked_index] ** 2))
    return GroverRun(
        spec=spec,
        iterations=iterations,
        trace=tuple(trace),
        success=trace[-1],
        theta=grover_theta(spec.m),
        oracle_factored_size=spec.m,
        diffusion_factored_size=spec.m,
        diffusion_expanded_terms=1 << spec.m,
    )


def grover_iterate_dense(spec: GroverSpec) -> np.ndarray:
    """Dense matrix of one Grover iteration (diffusion after oracle)."""
    return grover_diffusion(spec.m).to_dense() @ grover_oracle(spec).to_dense()


# ---------------------------------------------------------------------------
# spectra of orthogonal iterates


def eigenphases(q, tol: float = 1e-9) -> np.ndarray:
    """Rotation phases of an orthogonal matrix, ascending in [0, pi].

    Eigenvalues of (Q + Q^T)/2 are the cosines of the phases; the matrix
    is checked to be orthogonal first.
    """
    dense = to_dense(q)
    if not is_orthogonal(dense, tol):
        raise NumericError("eigenphases needs an orthogonal matrix")
    sym = (dense + dense.T) / 2.0
    cosines = np.clip(linalg.sym_eigenvalues(sym), -1.0, 1.0)
    return np.sort(np.arccos(cosines))


def is_clifford_spectrum(phases: Sequence[float], tol: float = 1e-7) -> bool:
    """Whether every phase sits within tol of a multiple of pi/2.

    The default tolerance is loose on purpose: phases produced by
    eigenphases() go through arccos, which turns an eigenvalue error of
    1e-16 near +/-1 into a phase error around 1e-8.  Anything tighter
    than ~1e-7 would misclassify exact Clifford gates on rounding noise.
    """
    quarter = math.pi / 2.0
    for phase in np.asarray(phases, dtype=np.float64):
        nearest = round(phase / quarter) * quarter
        if abs(phase - nearest) > tol:
            return False
    return True
