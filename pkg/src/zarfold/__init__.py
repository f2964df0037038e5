"""Exact continued fraction folding and bounded-quotient certificates."""

from .cf import (
    ContinuedFraction,
    ConvergentPair,
    MalformedSequence,
    ProperFraction,
    canonicalize,
    convergents,
    evaluate,
    expand,
    reverse_quotients,
)
from .certify import (
    BadParameters,
    Certificate,
    EvenInput,
    FoldSchedule,
    NoBaseWitness,
    ScheduleMismatch,
    SeedPair,
    VerificationResult,
    certify_by_halving,
    certify_from_seeds,
    check_seed,
    conditioned_witness,
    fold_schedule,
    one_fold_chain,
    trailing_form,
    verify_certificate,
)
from .folding import (
    FoldPreconditionViolated,
    NotReduced,
    fold_multiset_check,
    folded_value,
    z_fold,
)
from .oracle import (
    ScanReport,
    ZarembaWitness,
    enumerate_bounded_denominators,
    is_zaremba,
    scan_range,
    witnesses,
)

__version__ = "0.1.0"

__all__ = [
    "ContinuedFraction",
    "ConvergentPair",
    "MalformedSequence",
    "ProperFraction",
    "canonicalize",
    "convergents",
    "evaluate",
    "expand",
    "reverse_quotients",
    "FoldPreconditionViolated",
    "NotReduced",
    "fold_multiset_check",
    "folded_value",
    "z_fold",
    "ScanReport",
    "ZarembaWitness",
    "enumerate_bounded_denominators",
    "is_zaremba",
    "scan_range",
    "witnesses",
    "BadParameters",
    "Certificate",
    "EvenInput",
    "FoldSchedule",
    "NoBaseWitness",
    "ScheduleMismatch",
    "SeedPair",
    "VerificationResult",
    "certify_by_halving",
    "certify_from_seeds",
    "check_seed",
    "conditioned_witness",
    "fold_schedule",
    "one_fold_chain",
    "trailing_form",
    "verify_certificate",
    "__version__",
]
