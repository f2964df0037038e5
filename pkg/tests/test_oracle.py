from __future__ import annotations

import json
import math

import pytest

from helpers import cf_value
from zarfold import (
    ContinuedFraction,
    ScanReport,
    ZarembaWitness,
    enumerate_bounded_denominators,
    is_zaremba,
    scan_range,
    witnesses,
)


def _full_euclid(b: int, d: int) -> list[int]:
    # independent expansion used to cross-check the early-abort search
    x, y = d, b
    qs = []
    while y:
        a, r = divmod(x, y)
        qs.append(a)
        x, y = y, r
    return qs


def test_counterexamples_at_bound_four():
    assert is_zaremba(6, 4) is None
    assert is_zaremba(54, 4) is None
    assert is_zaremba(150, 4) is None


def test_first_witnesses_at_bound_five():
    w6 = is_zaremba(6, 5)
    assert (w6.numerator, w6.cf.quotients) == (5, (1, 5))
    w54 = is_zaremba(54, 5)
    assert (w54.numerator, w54.cf.quotients) == (17, (3, 5, 1, 2))
    w150 = is_zaremba(150, 5)
    assert (w150.numerator, w150.cf.quotients) == (29, (5, 5, 1, 4))
    w12 = is_zaremba(12, 5)
    assert (w12.numerator, w12.cf.quotients) == (5, (2, 2, 2))
    w2 = is_zaremba(2, 5)
    assert (w2.numerator, w2.cf.quotients) == (1, (2,))


def test_witnesses_exhaustive_for_small_denominators():
    for d in (12, 18, 24, 54, 97):
        for bound in (3, 4, 5):
            expected = [
                b
                for b in range(1, d)
                if math.gcd(b, d) == 1 and max(_full_euclid(b, d)) <= bound
            ]
            got = list(witnesses(d, bound))
            assert [w.numerator for w in got] == expected
            for w in got:
                assert cf_value(w.cf.quotients).denominator == d
                assert max(w.cf.quotients) <= bound
            if expected:
                assert is_zaremba(d, bound).numerator == expected[0]
            else:
                assert is_zaremba(d, bound) is None


def test_scan_examples():
    report = scan_range(2, 300, 4)
    assert report.exceptions == (6, 54, 150)
    assert (report.bound, report.lo, report.hi) == (4, 2, 300)
    assert scan_range(2, 10, 5).exceptions == ()
    assert scan_range(6, 6, 4).exceptions == (6,)


def test_scan_agrees_with_point_queries():
    report = scan_range(2, 120, 3)
    expected = tuple(d for d in range(2, 121) if is_zaremba(d, 3) is None)
    assert report.exceptions == expected


def test_scan_parallel_determinism():
    seq = scan_range(2, 400, 4, jobs=1)
    par = scan_range(2, 400, 4, jobs=3)
    assert seq == par
    assert json.dumps(seq.to_json_dict(), sort_keys=True) == json.dumps(
        par.to_json_dict(), sort_keys=True
    )


def test_scan_validation():
    with pytest.raises(ValueError):
        scan_range(1, 10, 4)
    with pytest.raises(ValueError):
        scan_range(10, 5, 4)
    with pytest.raises(ValueError):
        scan_range(2, 10, 0)
    with pytest.raises(ValueError):
        scan_range(2, 10, 4, jobs=0)


def test_enumerate_fibonacci_at_bound_one():
    # with all quotients equal to 1 the denominators are the Fibonacci
    # numbers; canonical form turns the trailing 1,1 into a single 2
    assert enumerate_bounded_denominators(1, 100) == {2, 3, 5, 8, 13, 21, 34, 55, 89}


def test_enumerate_examples():
    assert 12 in enumerate_bounded_denominators(5, 12)
    assert 6 not in enumerate_bounded_denominators(4, 6)
    # 8/11 = [0;1,2,1,2], so 11 belongs at bound 2
    assert enumerate_bounded_denominators(2, 12) == {2, 3, 5, 7, 8, 11, 12}


def test_enumerate_agrees_with_point_queries():
    for bound in (2, 3, 4, 5):
        reachable = enumerate_bounded_denominators(bound, 2000)
        for d in range(2, 2001):
            assert (d in reachable) == (is_zaremba(d, bound) is not None)


def test_bound_one_conventions_differ_on_purpose():
    # the enumeration admits the all-ones family via its canonical trailing 2,
    # while the point query reads the bound against every canonical quotient,
    # so at bound 1 the former yields Fibonacci denominators and the latter none
    assert is_zaremba(89, 1) is None
    assert 89 in enumerate_bounded_denominators(1, 100)


def test_witness_monotone_in_bound():
    for d in range(2, 301):
        for bound in (2, 3, 4):
            if is_zaremba(d, bound) is not None:
                assert is_zaremba(d, bound + 1) is not None


def test_enumerate_validation():
    with pytest.raises(ValueError):
        enumerate_bounded_denominators(0, 10)
    with pytest.raises(ValueError):
        enumerate_bounded_denominators(3, 1)


def test_point_query_validation():
    with pytest.raises(ValueError):
        is_zaremba(1, 5)
    with pytest.raises(ValueError):
        is_zaremba(6, 0)
    with pytest.raises(ValueError):
        list(witnesses(1, 5))


def test_witness_construction_checks():
    ZarembaWitness(12, 5, 5, ContinuedFraction((2, 2, 2)))
    with pytest.raises(ValueError):
        ZarembaWitness(12, 5, 7, ContinuedFraction((2, 2, 2)))
    with pytest.raises(ValueError):
        ZarembaWitness(12, 1, 5, ContinuedFraction((2, 2, 2)))


def test_report_json_round_trip():
    report = scan_range(2, 300, 4)
    data = report.to_json_dict()
    assert set(data) == {"A", "lo", "hi", "exceptions"}
    assert data["exceptions"] == [6, 54, 150]
    assert ScanReport.from_json_dict(json.loads(json.dumps(data))) == report
