"""Certificates that whole geometric families stay within a quotient bound.

Write the base as d = x*x*y with x*y >= 4 and set the bound A = x*y - 1.
Starting from seed fractions for d and x*d whose expansions begin and end
inside [2, A - 1], a scheduled sequence of folds with multipliers drawn from
{1, x, y, x*y} reaches denominator d**k for any k while every partial
quotient stays at most A.  The schedule for k is built by recursion on the
binary structure of k.

A second engine works for a bare base d: halve the exponent with 1-folds,
step from m to 2m + 1 with d-folds, and resolve small exponents by
exhaustive search.  Certificates record the claim and the fold schedule and
are verified from scratch, without folding, by ``verify_certificate``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cf import ContinuedFraction, ProperFraction, _parse_bignum, evaluate
from .folding import FoldPreconditionViolated, folded_value, z_fold
from .oracle import ZarembaWitness, _bounded_quotients

__all__ = [
    "BadParameters",
    "EvenInput",
    "NoBaseWitness",
    "ScheduleMismatch",
    "SeedPair",
    "FoldSchedule",
    "Certificate",
    "VerificationResult",
    "conditioned_witness",
    "check_seed",
    "trailing_form",
    "fold_schedule",
    "certify_from_seeds",
    "certify_by_halving",
    "one_fold_chain",
    "verify_certificate",
]


class BadParameters(ValueError):
    """Engine parameters outside the supported domain."""


class EvenInput(ValueError):
    """Odd-only decomposition applied to an even integer."""


class NoBaseWitness(LookupError):
    """A required exhaustive base case has no conditioned witness."""


class ScheduleMismatch(RuntimeError):
    """Fold chain deviated from its planned invariants; indicates a bug."""


def _conditioned(qs: tuple[int, ...], bound: int) -> bool:
    return (
        max(qs) <= bound
        and 2 <= qs[0] <= bound - 1
        and 2 <= qs[-1] <= bound - 1
    )


def conditioned_witness(denominator: int, bound: int) -> ZarembaWitness | None:
    """Smallest-numerator witness whose expansion also starts and ends in [2, bound - 1]."""
    if not isinstance(denominator, int) or denominator < 2:
        raise BadParameters(f"denominator must be an integer >= 2, got {denominator!r}")
    if not isinstance(bound, int) or bound < 2:
        raise BadParameters(f"quotient bound must be an integer >= 2, got {bound!r}")
    gcd = math.gcd
    for b in range(1, denominator):
        if gcd(b, denominator) != 1:
            continue
        qs = _bounded_quotients(b, denominator, bound)
        if qs is not None and _conditioned(qs, bound):
            return ZarembaWitness(denominator, bound, b, ContinuedFraction(qs))
    return None


@dataclass(frozen=True)
class SeedPair:
    """Conditioned witnesses for d = x*x*y and for x*d, at bound x*y - 1."""

    x: int
    y: int
    witness_d: ZarembaWitness
    witness_xd: ZarembaWitness

    def __post_init__(self) -> None:
        _validate_decomposition(self.x, self.y)
        d = self.x * self.x * self.y
        bound = self.x * self.y - 1
        for witness, target in ((self.witness_d, d), (self.witness_xd, self.x * d)):
            if witness.d != target:
                raise BadParameters(f"seed witness is for {witness.d}, expected {target}")
            if witness.bound != bound:
                raise BadParameters(f"seed witness bound {witness.bound}, expected {bound}")
            if not _conditioned(witness.cf.quotients, bound):
                raise BadParameters(f"seed expansion {witness.cf} is not conditioned")

    @property
    def d(self) -> int:
        return self.x * self.x * self.y


@dataclass(frozen=True)
class FoldSchedule:
    """Planned fold chain: seed selector plus ordered multipliers.

    ``seed`` is "d" or "xd".  ``steps`` holds the resolved integer
    multipliers and ``symbols`` the matching display tags ("1", "x", "y",
    "xy" or "d").  ``base_exponent`` is the exponent of the seed denominator;
    it is 1 except for halving chains that bottom out at an exhaustive base
    case d**e with e > 1.
    """

    x: int
    y: int
    k: int
    seed: str
    steps: tuple[int, ...]
    symbols: tuple[str, ...]
    base_exponent: int = 1

    def __post_init__(self) -> None:
        if self.seed not in ("d", "xd"):
            raise BadParameters(f"seed selector must be 'd' or 'xd', got {self.seed!r}")
        if len(self.steps) != len(self.symbols):
            raise BadParameters("steps and symbols must have equal length")
        allowed = {1, self.x, self.y, self.x * self.y}
        for z in self.steps:
            if z not in allowed:
                raise BadParameters(f"fold multiplier {z} is not one of {sorted(allowed)}")
        if self.seed == "xd" and self.base_exponent != 1:
            raise BadParameters("an 'xd' seed always has base exponent 1")

    def seed_denominator(self) -> int:
        d = self.x * self.x * self.y
        if self.seed == "xd":
            return self.x * d
        return d ** self.base_exponent

    def replay_denominator(self) -> int:
        """Final denominator implied by the schedule, by pure bookkeeping."""
        den = self.seed_denominator()
        for z in self.steps:
            den = z * den * den
        return den


@dataclass(frozen=True)
class Certificate:
    """Checkable claim: cf equals numerator/denominator with denominator (x*x*y)**k.

    Construction does not validate the claim; ``verify_certificate`` does.
    """

    x: int
    y: int
    k: int
    bound: int
    cf: ContinuedFraction
    numerator: int
    denominator: int
    schedule: FoldSchedule

    def to_json_dict(self) -> dict:
        schedule: dict = {"seed": self.schedule.seed, "steps": list(self.schedule.steps)}
        if self.schedule.base_exponent != 1:
            schedule["base_exponent"] = self.schedule.base_exponent
        return {
            "x": self.x,
            "y": self.y,
            "k": self.k,
            "A": self.bound,
            "quotients": self.cf.to_json_list(),
            "numerator": str(self.numerator),
            "denominator": str(self.denominator),
            "schedule": schedule,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        x, y, k, bound = (int(data[key]) for key in ("x", "y", "k", "A"))
        raw_schedule = data["schedule"]
        steps = tuple(int(z) for z in raw_schedule["steps"])
        schedule = FoldSchedule(
            x=x,
            y=y,
            k=k,
            seed=raw_schedule["seed"],
            steps=steps,
            symbols=tuple(_symbol_for(z, x, y) for z in steps),
            base_exponent=int(raw_schedule.get("base_exponent", 1)),
        )
        cf = ContinuedFraction.from_json_list(data["quotients"])
        return cls(
            x=x,
            y=y,
            k=k,
            bound=bound,
            cf=cf,
            numerator=_parse_bignum(data["numerator"]),
            denominator=_parse_bignum(data["denominator"]),
            schedule=schedule,
        )


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _symbol_for(z: int, x: int, y: int) -> str:
    if z == 1:
        return "1"
    if z == x * y:
        return "xy"
    if z == y:
        return "y"
    if z == x:
        return "x"
    return str(z)


def _validate_decomposition(x: int, y: int) -> None:
    if not isinstance(x, int) or not isinstance(y, int) or x < 1 or y < 1:
        raise BadParameters(f"decomposition parts must be positive integers, got {x!r}, {y!r}")
    if x * y < 4:
        raise BadParameters(f"x*y must be at least 4, got {x * y}")


def check_seed(x: int, y: int) -> SeedPair | None:
    """Conditioned seed witnesses for d = x*x*y and x*d, or None if either is missing.

    For x = 1 the two targets coincide, so the search runs once and the
    witness is shared.
    """
    _validate_decomposition(x, y)
    d = x * x * y
    bound = x * y - 1
    witness_d = conditioned_witness(d, bound)
    if witness_d is None:
        return None
    if x == 1:
        witness_xd = witness_d
    else:
        witness_xd = conditioned_witness(x * d, bound)
        if witness_xd is None:
            return None
    return SeedPair(x, y, witness_d, witness_xd)


def trailing_form(k: int) -> tuple[int, int]:
    """Write odd k as 2**(j+1) * m + 2**j - 1 with j = number of trailing one bits."""
    if not isinstance(k, int) or k < 1:
        raise BadParameters(f"k must be a positive integer, got {k!r}")
    if k % 2 == 0:
        raise EvenInput(f"k must be odd, got {k}")
    j = ((k + 1) & -(k + 1)).bit_length() - 1
    m = (k - (2**j - 1)) >> (j + 1)
    return j, m


def fold_schedule(x: int, y: int, k: int) -> FoldSchedule:
    """Fold plan reaching denominator (x*x*y)**k from one of the two seeds.

    Recursion on k: k = 1 is the bare d seed; even k halves and appends a
    1-fold; k = 2**j - 1 with j >= 2 starts from the x*d seed and applies
    j - 2 xy-folds then one y-fold; any other odd k reduces to its trailing
    form m and appends an x-fold, j - 1 xy-folds and one y-fold.
    """
    _validate_decomposition(x, y)
    if not isinstance(k, int) or k < 1:
        raise BadParameters(f"k must be a positive integer, got {k!r}")
    d = x * x * y
    steps: list[int] = []
    symbols: list[str] = []

    def build(e: int) -> str:
        if e == 1:
            return "d"
        if e % 2 == 0:
            seed = build(e // 2)
            steps.append(1)
            symbols.append("1")
            return seed
        j, m = trailing_form(e)
        if m == 0:
            for _ in range(j - 2):
                steps.append(x * y)
                symbols.append("xy")
            steps.append(y)
            symbols.append("y")
            return "xd"
        seed = build(m)
        steps.append(x)
        symbols.append("x")
        for _ in range(j - 1):
            steps.append(x * y)
            symbols.append("xy")
        steps.append(y)
        symbols.append("y")
        return seed

    seed = build(k)
    schedule = FoldSchedule(x, y, k, seed, tuple(steps), tuple(symbols))
    if schedule.replay_denominator() != d**k:
        raise ScheduleMismatch(
            f"schedule for k={k} replays to {schedule.replay_denominator()}, expected {d}**{k}"
        )
    return schedule


def _fold_checked(
    cf: ContinuedFraction, num: int, den: int, z: int, bound: int
) -> tuple[ContinuedFraction, int, int]:
    """One fold with every invariant rechecked on both routes."""
    folded = z_fold(cf, z)
    value = folded_value(ProperFraction(num, den), len(cf.quotients), z)
    if value.denominator != z * den * den:
        raise ScheduleMismatch(
            f"fold multiplier {z} produced denominator {value.denominator}, expected {z * den * den}"
        )
    direct = evaluate(folded)
    if (direct.numerator, direct.denominator) != (value.numerator, value.denominator):
        raise ScheduleMismatch(
            f"folded expansion evaluates to {direct}, closed form gives {value}"
        )
    if not _conditioned(folded.quotients, bound):
        raise ScheduleMismatch(f"fold broke the conditioned-quotient invariant: {folded}")
    return folded, value.numerator, value.denominator


def certify_from_seeds(seeds: SeedPair, k: int) -> Certificate:
    """Certificate for (x*x*y)**k built by running the fold schedule on a seed."""
    schedule = fold_schedule(seeds.x, seeds.y, k)
    bound = seeds.x * seeds.y - 1
    witness = seeds.witness_d if schedule.seed == "d" else seeds.witness_xd
    cf = witness.cf
    num, den = witness.numerator, witness.d
    for z in schedule.steps:
        cf, num, den = _fold_checked(cf, num, den, z, bound)
    if den != seeds.d**k:
        raise ScheduleMismatch(f"chain ended at denominator {den}, expected {seeds.d}**{k}")
    return Certificate(seeds.x, seeds.y, k, bound, cf, num, den, schedule)


def certify_by_halving(
    d: int, k: int, base_depth: int = 3, bound: int | None = None
) -> Certificate:
    """Certificate for d**k from 1-folds, d-folds and exhaustive base cases.

    Even exponents come from a 1-fold of the half exponent, odd ones from a
    d-fold of the floor half; exponents up to ``base_depth`` are settled by
    searching d**k directly for a conditioned witness.  The default bound is
    d - 1, the largest quotient a d-fold inserts; smaller bases need the bound
    raised explicitly (and d must stay at most bound + 1).
    """
    if not isinstance(d, int) or d < 2:
        raise BadParameters(f"base must be an integer >= 2, got {d!r}")
    if not isinstance(k, int) or k < 1:
        raise BadParameters(f"k must be a positive integer, got {k!r}")
    if not isinstance(base_depth, int) or base_depth < 1:
        raise BadParameters(f"base depth must be an integer >= 1, got {base_depth!r}")
    if bound is None:
        bound = d - 1
    if not isinstance(bound, int) or bound < 2:
        raise BadParameters(f"quotient bound must be an integer >= 2, got {bound!r}")
    if d > bound + 1:
        raise BadParameters(
            f"d-folds insert a quotient of d - 1 = {d - 1}, above the bound {bound}"
        )
    steps: list[int] = []
    symbols: list[str] = []

    def build(e: int) -> tuple[ContinuedFraction, int, int, int]:
        if e <= base_depth:
            witness = conditioned_witness(d**e, bound)
            if witness is None:
                raise NoBaseWitness(
                    f"no fraction */{d}**{e} has quotients <= {bound} "
                    f"with both ends in [2, {bound - 1}]"
                )
            return witness.cf, witness.numerator, witness.d, e
        if e % 2 == 0:
            m, z, symbol = e // 2, 1, "1"
        else:
            m, z, symbol = (e - 1) // 2, d, "d"
        cf, num, den, base_e = build(m)
        cf, num, den = _fold_checked(cf, num, den, z, bound)
        steps.append(z)
        symbols.append(symbol)
        return cf, num, den, base_e

    cf, num, den, base_exponent = build(k)
    if den != d**k:
        raise ScheduleMismatch(f"chain ended at denominator {den}, expected {d}**{k}")
    schedule = FoldSchedule(
        x=1,
        y=d,
        k=k,
        seed="d",
        steps=tuple(steps),
        symbols=tuple(symbols),
        base_exponent=base_exponent,
    )
    return Certificate(1, d, k, bound, cf, num, den, schedule)


def one_fold_chain(seed: ZarembaWitness, t: int) -> Certificate:
    """Certificate for d**(2**t) built by t repeated 1-folds of a witness."""
    if not isinstance(t, int) or t < 0:
        raise BadParameters(f"fold count must be a non-negative integer, got {t!r}")
    qs = seed.cf.quotients
    if not _conditioned(qs, seed.bound):
        raise FoldPreconditionViolated(
            f"seed expansion {seed.cf} must start and end in [2, {seed.bound - 1}]"
        )
    cf = seed.cf
    num, den = seed.numerator, seed.d
    for _ in range(t):
        cf, num, den = _fold_checked(cf, num, den, 1, seed.bound)
    schedule = FoldSchedule(
        x=1, y=seed.d, k=2**t, seed="d", steps=(1,) * t, symbols=("1",) * t
    )
    return Certificate(1, seed.d, 2**t, seed.bound, cf, num, den, schedule)


def verify_certificate(certificate: Certificate) -> VerificationResult:
    """Check a certificate from scratch; no folding is performed.

    The denominator is recomputed by independent exponentiation, the quotient
    bound and the end conditions are checked directly, and the expansion is
    re-evaluated to confirm it names exactly numerator/denominator.
    """
    c = certificate
    if c.x < 1 or c.y < 1 or c.k < 1 or c.bound < 1:
        return VerificationResult(False, "BadFields")
    if c.denominator != (c.x * c.x * c.y) ** c.k:
        return VerificationResult(False, "DenominatorMismatch")
    qs = c.cf.quotients
    if max(qs) > c.bound:
        return VerificationResult(False, "BoundExceeded")
    if not (2 <= qs[0] <= c.bound - 1 and 2 <= qs[-1] <= c.bound - 1):
        return VerificationResult(False, "ConditionViolated")
    if not 0 < c.numerator < c.denominator:
        return VerificationResult(False, "ValueMismatch")
    if math.gcd(c.numerator, c.denominator) != 1:
        return VerificationResult(False, "NotReduced")
    value = evaluate(c.cf)
    if (value.numerator, value.denominator) != (c.numerator, c.denominator):
        return VerificationResult(False, "ValueMismatch")
    return VerificationResult(True, "ok")
