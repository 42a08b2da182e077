"""Bell-type correlation: quantum spectra against dispersion-free models.

A spin observable along a unit direction n is the complex combination
n_x X + n_y (iW) + n_z Z, held as a ComplexNqaOperator with real part
n_x X + n_z Z and imaginary part n_y W; it squares to the identity for
every unit n.  The four-term correlation sum over settings (a0, a1) and
(b0, b1) is built with complex tensor products and realified over one
shared phase lane when an imaginary part survives; for the standard
planar settings every observable is real and the result is the 4x4 matrix
whose spectrum is {2 sqrt 2, -2 sqrt 2, 0, 0}.  Any assignment of fixed
signs to the four observables yields exactly +/-2, so the quantum
spectrum cannot be embedded in a commutative model; the gap is
2 sqrt 2 - 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from . import linalg
from .errors import DimensionError
from .operators import NqaOperator
from .realify import ComplexNqaOperator, phi
from .words import NqaWord

__all__ = [
    "sigma",
    "standard_settings",
    "chsh_quantum_matrix",
    "chsh_quantum_spectrum",
    "chsh_from_settings",
    "ClassicalModel",
    "classical_values",
    "classical_value_set",
    "NonembeddabilityReport",
    "nonembeddability_report",
]

_SQRT2 = math.sqrt(2.0)


def _unit(n: Sequence[float]) -> tuple[float, float, float]:
    v = tuple(float(c) for c in n)
    if len(v) != 3:
        raise DimensionError(f"spin direction needs three components, got {len(v)}")
    norm = math.sqrt(sum(c * c for c in v))
    if abs(norm - 1.0) > 1e-9:
        raise DimensionError(f"spin direction must be unit length, |n| = {norm!r}")
    return v


def sigma(n: Sequence[float]) -> ComplexNqaOperator:
    """Spin observable along unit n: real part n_x X + n_z Z, imaginary n_y W."""
    nx, ny, nz = _unit(n)
    re = NqaOperator(1, [
        (NqaWord.from_label("X"), nx),
        (NqaWord.from_label("Z"), nz),
    ])
    im = NqaOperator(1, [(NqaWord.from_label("W"), ny)])
    return ComplexNqaOperator(1, re, im)


def standard_settings() -> tuple[tuple[float, float, float], ...]:
    """a0 = z, a1 = x, b0 = (z + x)/sqrt2, b1 = (z - x)/sqrt2."""
    h = 1.0 / _SQRT2
    return ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (h, 0.0, h), (-h, 0.0, h))


def chsh_quantum_matrix() -> np.ndarray:
    """The pinned 4x4 correlation operator sqrt2 * (ZZ + XX)."""
    r = _SQRT2
    return np.array(
        [
            [r, 0.0, 0.0, r],
            [0.0, -r, r, 0.0],
            [0.0, r, -r, 0.0],
            [r, 0.0, 0.0, r],
        ]
    )


def chsh_quantum_spectrum() -> np.ndarray:
    return linalg.sym_eigenvalues(chsh_quantum_matrix())


def chsh_from_settings(a0, a1, b0, b1) -> np.ndarray:
    """Dense correlation operator a0 b0 + a0 b1 + a1 b0 - a1 b1.

    Tensor products are taken complex; if the imaginary part prunes away
    (all four observables real) the bare 4x4 matrix is returned, otherwise
    the 8x8 realification over one shared phase lane.
    """
    sa0, sa1, sb0, sb1 = (sigma(n) for n in (a0, a1, b0, b1))
    total = (
        sa0.tensor(sb0)
        + sa0.tensor(sb1)
        + sa1.tensor(sb0)
        - sa1.tensor(sb1)
    )
    if total.is_real():
        return total.re.to_dense()
    return phi(total).to_dense()


@dataclass(frozen=True, slots=True)
class ClassicalModel:
    """Fixed +/-1 assignments to the four observables per hidden state."""

    a0: tuple[int, ...]
    a1: tuple[int, ...]
    b0: tuple[int, ...]
    b1: tuple[int, ...]

    def __post_init__(self):
        n = len(self.a0)
        for name in ("a0", "a1", "b0", "b1"):
            column = tuple(getattr(self, name))
            object.__setattr__(self, name, column)
            if len(column) != n:
                raise DimensionError("all four assignment columns need the same length")
            if any(v not in (1, -1) for v in column):
                raise DimensionError(f"assignments must be +1 or -1, got {column}")

    @classmethod
    def random(cls, n: int, seed: int | None = None) -> "ClassicalModel":
        rng = np.random.default_rng(seed)
        cols = (1 - 2 * rng.integers(0, 2, size=(4, n))).tolist()
        return cls(*(tuple(int(v) for v in col) for col in cols))

    def __len__(self) -> int:
        return len(self.a0)


def classical_values(model: ClassicalModel) -> np.ndarray:
    """Diagonal values a0 b0 + a0 b1 + a1 b0 - a1 b1 per hidden state (all +/-2)."""
    a0 = np.asarray(model.a0)
    a1 = np.asarray(model.a1)
    b0 = np.asarray(model.b0)
    b1 = np.asarray(model.b1)
    return a0 * b0 + a0 * b1 + a1 * b0 - a1 * b1


def classical_value_set() -> set[int]:
    """Exhaustive sweep of all 16 sign assignments; always {-2, +2}."""
    values = set()
    for a0, a1, b0, b1 in product((1, -1), repeat=4):
        values.add(a0 * b0 + a0 * b1 + a1 * b0 - a1 * b1)
    return values


@dataclass(frozen=True, slots=True)
class NonembeddabilityReport:
    quantum_spectrum: tuple[float, ...]
    classical_values: tuple[int, ...]
    classical_bound: float
    quantum_norm: float
    gap: float


def nonembeddability_report() -> NonembeddabilityReport:
    spectrum = tuple(float(v) for v in chsh_quantum_spectrum())
    values = tuple(sorted(classical_value_set()))
    norm = max(abs(v) for v in spectrum)
    bound = float(max(abs(v) for v in values))
    return NonembeddabilityReport(
        quantum_spectrum=spectrum,
        classical_values=values,
        classical_bound=bound,
        quantum_norm=norm,
        gap=norm - bound,
    )
