"""Independent oracles and generators shared by the test modules.

Everything here recomputes results through a different route than the
library: nested Fraction arithmetic instead of the continuant recurrence,
explicit 2x2 matrix products instead of the convergent loop.  Keeping the
routes separate is what gives the comparisons teeth.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from zarfold import ContinuedFraction, ProperFraction, evaluate, fold_multiset_check, z_fold


def cf_value(quotients) -> Fraction:
    """Value of [0; q_1, ..., q_n] by nested Fraction arithmetic.

    Tolerates zero entries anywhere except the final position, so it can
    price raw pre-merge sequences as well as canonical ones.
    """
    acc = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        acc = a + Fraction(1, 1) / acc
    return Fraction(1, 1) / acc


def mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def quotient_matrix(a):
    return ((a, 1), (1, 0))


def mat_product(quotients):
    prod = ((1, 0), (0, 1))
    for a in quotients:
        prod = mat_mul(prod, quotient_matrix(a))
    return prod


FLIP = ((0, 1), (1, 0))


def flip_product(quotients):
    """[[0,1],[1,0]] times the product of the quotient matrices."""
    return mat_mul(FLIP, mat_product(quotients))


def random_canonical(rng: random.Random, max_len: int = 12, max_q: int = 9,
                     min_first: int = 1) -> tuple[int, ...]:
    """Random canonical quotient tuple: interior >= 1, ends as constrained."""
    n = rng.randint(1, max_len)
    if n == 1:
        return (rng.randint(max(2, min_first), max_q),)
    first = rng.randint(min_first, max_q)
    middle = [rng.randint(1, max_q) for _ in range(n - 2)]
    last = rng.randint(2, max_q)
    return (first, *middle, last)


def run_fold_property_suite(cases: int, seed: int) -> int:
    """Drive ``cases`` random folds and re-check every claim independently.

    Each case draws a canonical expansion with quotients at most 9, length at
    most 12 and a leading quotient of at least 2, plus a multiplier z <= 9.
    The folded expansion must evaluate to b/d + (-1)**n / (z*d*d) computed
    with Fraction arithmetic, the new denominator must be exactly z*d*d, the
    pair must be reduced, and the added-quotient multiset must match.
    Returns the number of cases run; raises AssertionError on any failure.
    """
    rng = random.Random(seed)
    for _ in range(cases):
        qs = random_canonical(rng, max_len=12, max_q=9, min_first=2)
        z = rng.randint(1, 9)
        if len(qs) == 1 and z == 1 and qs[0] == 2:
            qs = (rng.randint(3, 9),)
        cf = ContinuedFraction(qs)
        before = evaluate(cf)
        folded = z_fold(cf, z)
        after = evaluate(folded)

        sign = -1 if len(qs) % 2 else 1
        expected = Fraction(before.numerator, before.denominator) + Fraction(
            sign, z * before.denominator**2
        )
        assert Fraction(after.numerator, after.denominator) == expected
        assert after.denominator == z * before.denominator**2
        assert math.gcd(after.numerator, after.denominator) == 1
        if len(qs) >= 2:
            assert fold_multiset_check(cf, z)
    return cases
