"""Exact arithmetic for proper fractions and their continued fraction expansions.

Everything runs on arbitrary-precision integers; no floating point is used
anywhere.  Expansions are kept in the canonical form whose final partial
quotient is at least 2, which makes the representation of each fraction
unique.  Fractions live strictly between 0 and 1, so the leading integer
part of every expansion is 0 and is never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "MalformedSequence",
    "ProperFraction",
    "ContinuedFraction",
    "ConvergentPair",
    "expand",
    "evaluate",
    "convergents",
    "canonicalize",
    "reverse_quotients",
]


class MalformedSequence(ValueError):
    """Raw quotient sequence that cannot be merged into a canonical expansion."""


def _parse_bignum(text: str) -> int:
    if not isinstance(text, str) or not text.isdigit():
        raise ValueError(f"expected a decimal digit string, got {text!r}")
    return int(text)


@dataclass(frozen=True)
class ProperFraction:
    """Reduced fraction in (0, 1): 0 < numerator < denominator and gcd 1."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        num, den = self.numerator, self.denominator
        if not isinstance(num, int) or not isinstance(den, int):
            raise ValueError("numerator and denominator must be integers")
        if den < 2:
            raise ValueError(f"denominator must be at least 2, got {den}")
        if not 0 < num < den:
            raise ValueError(f"{num}/{den} is not strictly between 0 and 1")
        if math.gcd(num, den) != 1:
            raise ValueError(f"{num}/{den} is not in lowest terms")

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def to_json_dict(self) -> dict[str, str]:
        return {"num": str(self.numerator), "den": str(self.denominator)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ProperFraction":
        return cls(_parse_bignum(data["num"]), _parse_bignum(data["den"]))


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical expansion [0; a_1, ..., a_n]: every a_j >= 1, final a_n >= 2."""

    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        qs = tuple(self.quotients)
        object.__setattr__(self, "quotients", qs)
        if not qs:
            raise ValueError("an expansion needs at least one quotient")
        for a in qs:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"partial quotients must be positive integers, got {a!r}")
        if qs[-1] < 2:
            raise ValueError("canonical expansions end with a quotient of at least 2")

    def __len__(self) -> int:
        return len(self.quotients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.quotients)

    def __str__(self) -> str:
        return "[0;" + ",".join(str(a) for a in self.quotients) + "]"

    def to_json_list(self) -> list[str]:
        return [str(a) for a in self.quotients]

    @classmethod
    def from_json_list(cls, data: Sequence[str]) -> "ContinuedFraction":
        if not isinstance(data, (list, tuple)):
            raise ValueError("quotient list must be a JSON array of digit strings")
        return cls(tuple(_parse_bignum(item) for item in data))


@dataclass(frozen=True)
class ConvergentPair:
    """Convergent p/q at position ``index`` together with its predecessor.

    Successive pairs obey p = a*p_prev + p_prevprev (same for q), seeded by
    p_0 = 0, p_(-1) = 1, q_0 = 1, q_(-1) = 0, so the pair matrix
    [[p, p_prev], [q, q_prev]] has determinant (-1)**(index + 1).
    """

    p: int
    q: int
    p_prev: int
    q_prev: int
    index: int

    def determinant(self) -> int:
        return self.p * self.q_prev - self.p_prev * self.q


def expand(fraction: ProperFraction) -> ContinuedFraction:
    """Canonical continued fraction of a proper fraction, by the Euclidean loop.

    The division chain always stops on a final quotient of at least 2, so the
    result is canonical without any rewriting.
    """
    x, y = fraction.denominator, fraction.numerator
    qs = []
    while y:
        a, r = divmod(x, y)
        qs.append(a)
        x, y = y, r
    return ContinuedFraction(tuple(qs))


def evaluate(cf: ContinuedFraction) -> ProperFraction:
    """Fraction represented by an expansion, reduced automatically."""
    qs = cf.quotients
    num, den = 1, qs[-1]
    for a in reversed(qs[:-1]):
        num, den = den, a * den + num
    return ProperFraction(num, den)


def convergents(cf: ContinuedFraction) -> list[ConvergentPair]:
    """All convergent pairs of an expansion, in order of position."""
    p_prevprev, p_prev = 1, 0
    q_prevprev, q_prev = 0, 1
    pairs = []
    for index, a in enumerate(cf.quotients, 1):
        p = a * p_prev + p_prevprev
        q = a * q_prev + q_prevprev
        pairs.append(ConvergentPair(p, q, p_prev, q_prev, index))
        p_prevprev, p_prev = p_prev, p
        q_prevprev, q_prev = q_prev, q
    return pairs


def canonicalize(raw: Sequence[int]) -> ContinuedFraction:
    """Merge a raw quotient sequence into canonical form.

    Applies the value-preserving rewrite [..., a, 0, a', ...] -> [..., a + a', ...]
    left to right, rescanning from the start after each merge, then folds a
    trailing quotient of 1 into its predecessor.  Zeros may only appear with a
    neighbour on both sides and never next to another zero.
    """
    entries = list(raw)
    if not entries:
        raise MalformedSequence("empty quotient sequence")
    for a in entries:
        if not isinstance(a, int) or a < 0:
            raise MalformedSequence(f"quotients must be non-negative integers, got {a!r}")
    if entries[0] == 0 or entries[-1] == 0:
        raise MalformedSequence("zero quotient at the boundary cannot be merged")
    for left, right in zip(entries, entries[1:]):
        if left == 0 and right == 0:
            raise MalformedSequence("adjacent zero quotients cannot be merged")
    while True:
        try:
            z = entries.index(0)
        except ValueError:
            break
        entries[z - 1 : z + 2] = [entries[z - 1] + entries[z + 1]]
    if len(entries) >= 2 and entries[-1] == 1:
        entries[-2] += 1
        entries.pop()
    if entries == [1]:
        raise MalformedSequence("sequence denotes the value 1, not a proper fraction")
    return ContinuedFraction(tuple(entries))


def reverse_quotients(cf: ContinuedFraction) -> list[int]:
    """Quotients in reverse order, as a plain list (possibly non-canonical)."""
    return list(reversed(cf.quotients))
