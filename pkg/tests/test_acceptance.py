"""Acceptance gate: the eleven headline criteria, one pass/fail line each.

Every test delegates to the corresponding self-check in hypq.verify (the
same code behind ``hypq verify``) and then pins a handful of frozen
values directly, so a regression in either the library or the check
itself trips the gate.  Run with ``pytest -s tests/test_acceptance.py``
to see the per-criterion lines for passing tests as well.
"""

import math
import time

from hypq import verify
from hypq.numeration import basis, decode, represent_maximal
from hypq.schlafli import Scheme, validate
from hypq.spectral import analyze


def _criterion(number: int, check, budget: float | None = None) -> None:
    t0 = time.perf_counter()
    result = check()
    elapsed = time.perf_counter() - t0
    in_time = budget is None or elapsed < budget
    status = "PASS" if (result.ok and in_time) else "FAIL"
    print(f"{status}  criterion {number:2d}  {result.name}: "
          f"{result.detail}  [{elapsed:.2f}s]")
    assert result.ok, f"criterion {number}: {result.detail}"
    assert in_time, f"criterion {number}: {elapsed:.2f}s over the {budget}s budget"


def test_criterion_01_even_q_polynomials():
    _criterion(1, verify.check_even_polynomials, budget=1.0)
    # spot pins, independent of the closed-form sweep
    m = lambda p, q: analyze(validate(p, q), Scheme.EVEN_Q).polynomial
    assert m(5, 4) == (1, -3, 1)
    assert m(6, 4) == (1, -4, 1)
    assert m(4, 6) == (1, -3, 0)


def test_criterion_02_odd_q_polynomials():
    _criterion(2, verify.check_odd_polynomials, budget=1.0)
    assert analyze(validate(5, 7), Scheme.ODD_V1).polynomial == (1, -5, -4, 0)
    assert analyze(validate(5, 7), Scheme.ODD_V2).polynomial == (1, -9, 0)
    assert analyze(validate(4, 5), Scheme.ODD_V1).polynomial == (1, -2, 0, 1)


def test_criterion_03_spot_values_and_reductions():
    _criterion(3, verify.check_spot_values)


def test_criterion_04_regularity_verdicts():
    _criterion(4, verify.check_verdicts)
    r = analyze(validate(4, 5), Scheme.ODD_V1)
    assert r.reason == "RootOnUnitCircle"
    assert abs(r.beta - (1 + math.sqrt(5)) / 2) < 1e-9


def test_criterion_05_tree_matches_recurrence():
    _criterion(5, verify.check_tree_recurrence, budget=30.0)


def test_criterion_06_pentagrid_fibonacci_counts():
    _criterion(6, verify.check_fibonacci_counts)


def test_criterion_07_numeration_round_trip_and_maximality():
    # the stated budget is per regular case; the whole sweep (all of
    # them) comes in far underneath a single allowance
    _criterion(7, verify.check_numeration, budget=60.0)
    seq = basis(validate(5, 4), Scheme.EVEN_Q, 8)
    assert seq.terms[:5] == (1, 3, 8, 21, 55)
    assert represent_maximal(7, seq).digits == (2, 1)
    assert decode((2, 1), seq) == 7


def test_criterion_08_disc_geometry_suite():
    _criterion(8, verify.check_geometry, budget=60.0)


def test_criterion_09_sector_covers_close():
    _criterion(9, verify.check_sector_covers)


def test_criterion_10_dual_numbering_bijection():
    _criterion(10, verify.check_dual, budget=30.0)


def test_criterion_11_deterministic_outputs():
    _criterion(11, verify.check_determinism)
