"""Folding: doubling a continued fraction while multiplying its denominator.

One z-fold sends a reduced b/d with expansion [0; a_1, ..., a_n] to the
fraction (z*b*d + (-1)**n) / (z*d*d), whose expansion is the original
quotient list, then z - 1, 1, a_n - 1, then the mirrored prefix
a_(n-1), ..., a_1, merged back into canonical form.  Both routes, the
quotient rewrite and the closed-form value, are exposed separately so that
they can be checked against each other.
"""

from __future__ import annotations

import math
from collections import Counter

from .cf import ContinuedFraction, ProperFraction, canonicalize

__all__ = [
    "FoldPreconditionViolated",
    "NotReduced",
    "z_fold",
    "folded_value",
    "fold_multiset_check",
]


class FoldPreconditionViolated(ValueError):
    """Expansion does not meet the entry requirements for folding."""


class NotReduced(ArithmeticError):
    """Folded numerator and denominator share a factor; indicates a bug."""


def _check_multiplier(z: int) -> None:
    if not isinstance(z, int) or z < 1:
        raise ValueError(f"fold multiplier must be a positive integer, got {z!r}")


def z_fold(cf: ContinuedFraction, z: int) -> ContinuedFraction:
    """Expansion after one z-fold.

    Requires a_1 >= 2.  A single-quotient expansion folded with z = 1 needs
    a_1 >= 3: for [a_1] the rewrite produces [a_1 + 1, a_1 - 1], and the
    trailing entry must stay at least 2.
    """
    _check_multiplier(z)
    qs = cf.quotients
    if qs[0] < 2:
        raise FoldPreconditionViolated("folding requires a leading quotient of at least 2")
    if len(qs) == 1 and z == 1 and qs[0] < 3:
        raise FoldPreconditionViolated(
            "a single-quotient expansion folded with z=1 requires a leading quotient of at least 3"
        )
    raw = [*qs, z - 1, 1, qs[-1] - 1, *reversed(qs[:-1])]
    return canonicalize(raw)


def folded_value(fraction: ProperFraction, quotient_count: int, z: int) -> ProperFraction:
    """Closed-form value after one z-fold of ``fraction``.

    ``quotient_count`` is the length of the canonical expansion of the input;
    only its parity matters, through the sign (-1)**quotient_count.
    """
    _check_multiplier(z)
    if not isinstance(quotient_count, int) or quotient_count < 1:
        raise ValueError(f"quotient count must be a positive integer, got {quotient_count!r}")
    sign = -1 if quotient_count % 2 else 1
    num = z * fraction.numerator * fraction.denominator + sign
    den = z * fraction.denominator * fraction.denominator
    if math.gcd(num, den) != 1:
        raise NotReduced(f"folded value {num}/{den} is not reduced")
    return ProperFraction(num, den)


def fold_multiset_check(cf: ContinuedFraction, z: int) -> bool:
    """Check the multiset of quotients a z-fold adds beyond the mirrored prefix.

    Relative to the mirror image of a_1, ..., a_(n-1), the fold contributes
    {a_1, ..., a_n, z - 1, 1, a_n - 1} when z > 1 and, after the zero merge,
    {a_1, ..., a_(n-1), a_n + 1, a_n - 1} when z = 1.
    """
    qs = cf.quotients
    if len(qs) < 2:
        raise FoldPreconditionViolated("multiset bookkeeping needs at least two quotients")
    folded = z_fold(cf, z)
    mirror = Counter(qs[:-1])
    if z == 1:
        added = Counter(qs[:-1]) + Counter((qs[-1] + 1, qs[-1] - 1))
    else:
        added = Counter(qs) + Counter((z - 1, 1, qs[-1] - 1))
    return Counter(folded.quotients) == mirror + added
