"""Numeration systems: basis growth, greedy and maximal digit strings."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypq.errors import DigitOutOfRange, Unrepresentable
from hypq.numeration import (
    basis,
    decode,
    enumerate_language,
    find_maximal_ties,
    grow,
    represent_greedy,
    represent_maximal,
)
from hypq.schlafli import Scheme, validate

FIVE_FOUR = basis(validate(5, 4), Scheme.EVEN_Q, 8)
FIVE_SEVEN = basis(validate(5, 7), Scheme.ODD_V1, 8)


def test_basis_terms_and_bound():
    assert FIVE_FOUR.terms == (1, 3, 8, 21, 55, 144, 377, 987)
    assert FIVE_FOUR.digit_bound == 2
    assert FIVE_FOUR.coefficients == (-1, 3)

    # cubic recurrence seeded with three level counts
    assert FIVE_SEVEN.terms[:4] == (1, 6, 34, 194)
    assert FIVE_SEVEN.digit_bound == 5


def test_basis_input_validation():
    with pytest.raises(ValueError):
        basis(validate(5, 4), Scheme.EVEN_Q, 0)


def test_grow_is_pure_and_consistent():
    longer = grow(FIVE_FOUR, 12)
    assert len(FIVE_FOUR) == 8  # input untouched
    assert longer.terms[:8] == FIVE_FOUR.terms
    assert len(longer) == 12
    for a, b, c in zip(longer.terms, longer.terms[1:], longer.terms[2:]):
        assert c == 3 * b - a
    assert grow(FIVE_FOUR, 3) is FIVE_FOUR


def test_decode_checks_digits():
    assert decode((2, 1), FIVE_FOUR) == 7
    assert decode((0,), FIVE_FOUR) == 0
    with pytest.raises(DigitOutOfRange):
        decode((3, 0), FIVE_FOUR)
    with pytest.raises(DigitOutOfRange):
        decode((-1,), FIVE_FOUR)
    # longer strings than the stored basis grow it on the fly
    assert decode((1,) + (0,) * 9, FIVE_FOUR) == grow(FIVE_FOUR, 10).terms[9]


def test_greedy_known_strings():
    # 7 = 2*3 + 1*1 over 1, 3, 8, ...
    assert represent_greedy(7, FIVE_FOUR).digits == (2, 1)
    assert represent_greedy(0, FIVE_FOUR).digits == (0,)
    assert represent_greedy(8, FIVE_FOUR).digits == (1, 0, 0)
    assert represent_greedy(20, FIVE_FOUR).digits == (2, 1, 1)


def test_maximal_can_disagree_with_greedy():
    # a longest string leads with the largest term not exceeding the
    # value, exactly where greedy starts, so the two strings share their
    # length whenever greedy completes; the representative may still
    # differ, as for 16 = 2*8 = 1*8 + 2*3 + 2*1
    assert represent_greedy(16, FIVE_FOUR).digits == (2, 0, 0)
    m = represent_maximal(16, FIVE_FOUR)
    assert m.digits == (1, 2, 2)
    for value in range(300):
        g = represent_greedy(value, FIVE_FOUR)
        assert len(represent_maximal(value, FIVE_FOUR).digits) == len(g.digits)


def test_maximal_tie_break_is_lexicographic():
    # 16 = 2*8 = 1*8 + 2*3 + 2*1: two longest strings, the smaller wins
    ties = find_maximal_ties(FIVE_FOUR, 2, 3)
    assert 16 in ties
    assert ties[16] == [(1, 2, 2), (2, 0, 0)]
    assert represent_maximal(16, FIVE_FOUR).digits == (1, 2, 2)


def test_maximal_agrees_with_exhaustive_survey():
    best = {}
    for digits in enumerate_language(FIVE_FOUR, 2, 6):
        best[decode(digits, FIVE_FOUR)] = digits
    horizon = grow(FIVE_FOUR, 7).terms[6]  # above it, 7-digit strings win
    for value, want in sorted(best.items()):
        if value >= horizon:
            continue
        got = represent_maximal(value, FIVE_FOUR)
        assert got.digits == want, value


def test_maximal_round_trip_and_leading_digit():
    for value in range(2001):
        rep = represent_maximal(value, FIVE_FOUR)
        assert decode(rep.digits, FIVE_FOUR) == value
        assert rep.value == value
        if value:
            assert rep.digits[0] >= 1
        assert all(0 <= d <= 2 for d in rep.digits)


def test_maximal_with_explicit_bound():
    # bound 1 over the same basis: some values drop out entirely
    assert represent_maximal(4, FIVE_FOUR, bound=1).digits == (1, 1)
    with pytest.raises(Unrepresentable):
        represent_maximal(7, FIVE_FOUR, bound=1)
    with pytest.raises(Unrepresentable):
        represent_maximal(1, FIVE_FOUR, bound=0)
    with pytest.raises(ValueError):
        represent_maximal(-1, FIVE_FOUR)


def test_golden_ratio_case_has_gaps():
    # {4,5} first odd variant: beta is the golden ratio, digit bound 1,
    # basis 1, 3, 6, 11, 19, ...; small integers fall through the gaps
    seq = basis(validate(4, 5), Scheme.ODD_V1, 8)
    assert seq.digit_bound == 1
    assert seq.terms[:5] == (1, 3, 6, 11, 19)
    representable = set()
    for value in range(30):
        try:
            rep = represent_maximal(value, seq)
        except Unrepresentable:
            continue
        assert decode(rep.digits, seq) == value
        representable.add(value)
    assert representable.isdisjoint({2, 5, 8})
    assert {0, 1, 3, 4, 6, 7, 9, 10, 11} <= representable


def test_enumerate_language_guard():
    with pytest.raises(ValueError):
        enumerate_language(FIVE_FOUR, 2, 0)
    with pytest.raises(ValueError):
        enumerate_language(FIVE_FOUR, 2, 13)


@settings(max_examples=60)
@given(st.integers(0, 200000))
def test_round_trip_property_5_7(value):
    rep = represent_maximal(value, FIVE_SEVEN)
    assert decode(rep.digits, FIVE_SEVEN) == value
    greedy = represent_greedy(value, FIVE_SEVEN)
    assert decode(greedy.digits, FIVE_SEVEN) == value
    assert len(rep.digits) >= len(greedy.digits)


@settings(max_examples=40)
@given(st.integers(0, 5000), st.integers(0, 5000))
def test_representation_is_injective(a, b):
    ra = represent_maximal(a, FIVE_FOUR).digits
    rb = represent_maximal(b, FIVE_FOUR).digits
    assert (ra == rb) == (a == b)
