"""Verification sweeps behind the `check` CLI subcommand.

Each check returns a CheckResult; sign identities are required to cancel
exactly (empty term dicts), numerical ones carry explicit tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gates
from .errors import DimensionError
from .clifford22 import (
    dictionary,
    generator,
    monomial_mul,
    monomial_to_word,
    pseudoscalar,
    word_to_monomial,
)
from .operators import (
    NqaOperator,
    anticommutator,
    epsilon_commutator,
    is_orthogonal,
    op_mul,
    supercommutator,
    to_dense,
)
from .realify import ComplexNqaOperator, phi
from .words import NqaWord, epsilon, word_mul

__all__ = [
    "CheckResult",
    "epsilon_jacobi_residual",
    "super_jacobi_residual",
    "check_jacobi",
    "check_phi",
    "check_dict",
    "run_checks",
    "CHECK_NAMES",
]


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_word(rng: np.random.Generator, m: int) -> NqaWord:
    return NqaWord(m, int(rng.integers(0, 1 << m)), int(rng.integers(0, 1 << m)))


def epsilon_jacobi_residual(x: NqaOperator, y: NqaOperator, z: NqaOperator) -> NqaOperator:
    """Color-bracket Jacobi combination; zero for homogeneous inputs."""
    wx = x.homogeneous_word()
    wy = y.homogeneous_word()
    wz = z.homogeneous_word()
    if wx is None or wy is None or wz is None:
        return NqaOperator.zero(x.m)
    t1 = epsilon(wz, wx) * epsilon_commutator(x, epsilon_commutator(y, z))
    t2 = epsilon(wx, wy) * epsilon_commutator(y, epsilon_commutator(z, x))
    t3 = epsilon(wy, wz) * epsilon_commutator(z, epsilon_commutator(x, y))
    return t1 + t2 + t3


def super_jacobi_residual(x: NqaOperator, y: NqaOperator, z: NqaOperator) -> NqaOperator:
    """Parity-bracket Jacobi combination; zero for parity-homogeneous inputs."""
    px = x.op_parity()
    py = y.op_parity()
    pz = z.op_parity()
    if px is None or py is None or pz is None:
        return NqaOperator.zero(x.m)
    s1 = -1.0 if px & pz else 1.0
    s2 = -1.0 if py & px else 1.0
    s3 = -1.0 if pz & py else 1.0
    t1 = s1 * supercommutator(x, supercommutator(y, z))
    t2 = s2 * supercommutator(y, supercommutator(z, x))
    t3 = s3 * supercommutator(z, supercommutator(x, y))
    return t1 + t2 + t3


def check_jacobi(m: int = 4, trials: int = 1000, seed: int = 0) -> CheckResult:
    """Both graded Jacobi identities on random word triples, sign-exact."""
    rng = np.random.default_rng(seed)
    failures = 0
    for _ in range(trials):
        mm = int(rng.integers(1, m + 1))
        ops = [NqaOperator.from_word(_random_word(rng, mm)) for _ in range(3)]
        if not epsilon_jacobi_residual(*ops).is_zero():
            failures += 1
        if not super_jacobi_residual(*ops).is_zero():
            failures += 1
    passed = failures == 0
    return CheckResult(
        "jacobi",
        passed,
        f"{trials} random word triples at m <= {m}, {failures} nonzero residuals",
    )


def _random_complex(rng: np.random.Generator, m: int, terms: int = 4) -> ComplexNqaOperator:
    def part():
        return NqaOperator(m, [(_random_word(rng, m), float(rng.normal())) for _ in range(terms)])

    return ComplexNqaOperator(m, part(), part())


def check_phi(m: int = 3, trials: int = 200, seed: int = 0, tol: float = 1e-12) -> CheckResult:
    """Star-homomorphism of the realification plus orthogonality transfer."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        mm = int(rng.integers(1, m + 1))
        u = _random_complex(rng, mm)
        v = _random_complex(rng, mm)
        lhs = phi(u @ v)
        rhs = op_mul(phi(u), phi(v))
        worst = max(worst, _max_coeff_diff(lhs, rhs))
        worst = max(worst, _max_coeff_diff(phi(u.dagger()), phi(u).transpose()))
        dense = np.max(np.abs(to_dense(lhs) - to_dense(phi(u)) @ to_dense(phi(v))))
        worst = max(worst, float(dense))
    unitaries = [
        phi(gates.single_gate("S", 1, 1)),
        phi(gates.single_gate("T", 1, 1)),
        phi(gates.single_gate("RZ", 1, 1, 0.37)),
        gates.single_gate("H", 1, 1),
        gates.single_gate("RY", 1, 1, 1.1),
        gates.two_gate("CZ", (1, 2), 2),
        gates.two_gate("SWAP", (1, 2), 2),
        gates.lifted_gate("ISWAP"),
        gates.lifted_gate("SQRTSWAP"),
        gates.lifted_gate("CPHASE", 0.81),
        gates.lifted_gate("CARTAN", 0.2, 0.3, 0.5),
        gates.bell_transform(),
    ]
    orth_ok = all(is_orthogonal(u, 1e-12) for u in unitaries)
    passed = worst <= tol and orth_ok
    return CheckResult(
        "phi",
        passed,
        f"{trials} random pairs at m <= {m}, worst error {worst:.3e}, "
        f"gate library orthogonal: {orth_ok}",
    )


def _max_coeff_diff(a: NqaOperator, b: NqaOperator) -> float:
    words = set(a.terms) | set(b.terms)
    return max((abs(a.coeff(w) - b.coeff(w)) for w in words), default=0.0)


def check_dict(seed: int = 0) -> CheckResult:
    """Dictionary, generator relations, pseudoscalar, and monomial products."""
    problems = []
    ident = NqaOperator.identity(2)
    for i in range(1, 5):
        e = generator(i)
        expect = ident if i <= 2 else -ident
        if op_mul(e, e) != expect:
            problems.append(f"e{i}^2")
    for i in range(1, 5):
        for j in range(i + 1, 5):
            if not anticommutator(generator(i), generator(j)).is_zero():
                problems.append(f"e{i}e{j}+e{j}e{i}")
    omega = pseudoscalar()
    if omega != NqaOperator.from_label("WW", -1.0):
        problems.append("pseudoscalar value")
    if op_mul(omega, omega) != ident:
        problems.append("pseudoscalar square")
    for label, _, _, _ in dictionary():
        word = NqaWord.from_label(label)
        mono = word_to_monomial(word)
        sign, back = monomial_to_word(mono)
        if back != word or sign != 1:
            problems.append(f"roundtrip {label}")
    # canonicalized monomial products agree with word-level products
    rng = np.random.default_rng(seed)
    for _ in range(200):
        u = _random_word(rng, 2)
        v = _random_word(rng, 2)
        sign_w, w = word_mul(u, v)
        mono = monomial_mul(word_to_monomial(u), word_to_monomial(v))
        sign_m, back = monomial_to_word(mono)
        if back != w or sign_m != sign_w:
            problems.append(f"product {u.label}*{v.label}")
    passed = not problems
    detail = "16 rows, relations, 200 random products" if passed else "; ".join(problems)
    return CheckResult("dict", passed, detail)


CHECK_NAMES = ("jacobi", "phi", "dict")


def run_checks(name: str, m: int | None = None, trials: int | None = None, seed: int = 0) -> list[CheckResult]:
    """Run one named check or all of them, with optional size overrides."""
    results = []
    wanted = CHECK_NAMES if name == "all" else (name,)
    for check in wanted:
        if check == "jacobi":
            results.append(check_jacobi(m or 4, trials or 1000, seed))
        elif check == "phi":
            results.append(check_phi(m or 3, trials or 200, seed))
        elif check == "dict":
            results.append(check_dict(seed))
        else:
            raise DimensionError(f"unknown check {check!r}")
    return results
