"""The two-slot word algebra as the real Clifford algebra Cl(2,2).

Generators e1 = X(x)I, e2 = Z(x)I, e3 = W(x)X, e4 = W(x)Z satisfy
e1^2 = e2^2 = +1, e3^2 = e4^2 = -1, and anticommute pairwise, so the 16
words are exactly the 16 signed Clifford monomials.  Monomials are kept
canonical: strictly ascending generator indices with the sign tracked
through anticommutation swaps and metric cancellations.  The pseudoscalar
omega = e1 e2 e3 e4 equals -W(x)W and squares to +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError
from .operators import NqaOperator
from .words import NqaWord, SignedWord, word_mul

__all__ = [
    "CliffordMonomial",
    "generator",
    "canonicalize",
    "monomial_mul",
    "monomial_to_word",
    "word_to_monomial",
    "pseudoscalar",
    "grade",
    "pauli_label",
    "dictionary",
]

_GENERATOR_LABELS = {1: "XI", 2: "ZI", 3: "WX", 4: "WZ"}
_METRIC = {1: 1, 2: 1, 3: -1, 4: -1}

# published row order: scalar, vectors, bivectors, trivectors, pseudoscalar
_ROW_ORDER = (
    "II", "XI", "ZI", "WX", "WZ",
    "WI", "ZX", "ZZ", "XX", "XZ", "IW",
    "IX", "IZ", "XW", "ZW",
    "WW",
)


@dataclass(frozen=True, slots=True)
class CliffordMonomial:
    """A signed product of distinct generators, indices strictly ascending."""

    sign: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DimensionError(f"monomial sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "factors", tuple(self.factors))
        if any(i not in _GENERATOR_LABELS for i in self.factors):
            raise DimensionError(f"generator indices must be in 1..4, got {self.factors}")
        if any(a >= b for a, b in zip(self.factors, self.factors[1:])):
            raise DimensionError(f"monomial indices must be strictly ascending, got {self.factors}")

    def __str__(self) -> str:
        body = "".join(f"e{i}" for i in self.factors) or "1"
        return ("+" if self.sign > 0 else "-") + body


def generator(i: int) -> NqaOperator:
    if i not in _GENERATOR_LABELS:
        raise DimensionError(f"generator index must be in 1..4, got {i}")
    return NqaOperator.from_label(_GENERATOR_LABELS[i])


def _generator_word(i: int) -> NqaWord:
    return NqaWord.from_label(_GENERATOR_LABELS[i])


def canonicalize(indices: Sequence[int]) -> CliffordMonomial:
    """Sort a generator sequence, tracking swap signs and e_i^2 = metric."""
    seq = list(indices)
    if any(i not in _GENERATOR_LABELS for i in seq):
        raise DimensionError(f"generator indices must be in 1..4, got {tuple(indices)}")
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    out: list[int] = []
    k = 0
    while k < len(seq):
        if k + 1 < len(seq) and seq[k] == seq[k + 1]:
            sign *= _METRIC[seq[k]]
            k += 2
        else:
            out.append(seq[k])
            k += 1
    return CliffordMonomial(sign, tuple(out))


def monomial_mul(a: CliffordMonomial, b: CliffordMonomial) -> CliffordMonomial:
    prod = canonicalize(a.factors + b.factors)
    return CliffordMonomial(a.sign * b.sign * prod.sign, prod.factors)


def monomial_to_word(mono: CliffordMonomial) -> SignedWord:
    """Multiply the generator words out; the result is a signed two-slot word."""
    sign = mono.sign
    word = NqaWord.identity(2)
    for i in mono.factors:
        s, word = word_mul(word, _generator_word(i))
        sign *= s
    return SignedWord(sign, word)


def _word_table() -> dict[str, CliffordMonomial]:
    table: dict[str, CliffordMonomial] = {}
    for bits in range(16):
        factors = tuple(i for i in (1, 2, 3, 4) if bits >> (i - 1) & 1)
        s, w = monomial_to_word(CliffordMonomial(1, factors))
        # product of generators = s * word, hence word = s * product
        table[w.label] = CliffordMonomial(s, factors)
    return table


_WORD_TO_MONOMIAL = _word_table()


def word_to_monomial(word: NqaWord) -> CliffordMonomial:
    """The signed monomial equal to the given two-slot word."""
    if word.m != 2:
        raise DimensionError(f"the dictionary covers two-slot words, got m={word.m}")
    return _WORD_TO_MONOMIAL[word.label]


def pseudoscalar() -> NqaOperator:
    """omega = e1 e2 e3 e4 as an operator; equals -W(x)W."""
    s, w = monomial_to_word(CliffordMonomial(1, (1, 2, 3, 4)))
    return NqaOperator.from_word(w, float(s))


def grade(mono: CliffordMonomial) -> int:
    return len(mono.factors)


def pauli_label(word: NqaWord) -> str:
    """Display-only complex Pauli name; each W carries one factor of -i."""
    if word.m != 2:
        raise DimensionError(f"the dictionary covers two-slot words, got m={word.m}")
    chars = [("Y" if b.name == "W" else b.name) for b in word.blocks()]
    w_count = word.label.count("W")
    prefix = {0: "", 1: "-i ", 2: "- "}[w_count]
    return f"{prefix}{chars[0]}(x){chars[1]}"


def dictionary() -> list[tuple[str, str, str, str]]:
    """All 16 rows as (word, Pauli label, monomial, sign), published order."""
    rows = []
    for label in _ROW_ORDER:
        word = NqaWord.from_label(label)
        mono = word_to_monomial(word)
        body = "".join(f"e{i}" for i in mono.factors) or "1"
        rows.append((label, pauli_label(word), body, "+" if mono.sign > 0 else "-"))
    return rows
