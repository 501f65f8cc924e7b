"""Numeration systems attached to a splitting.

The counting recurrence of a splitting defines an increasing integer
sequence; every natural number can then be written as a digit string
over that basis with digits 0..b, b the floor of the dominant root.
Among all such digit strings of a value, the splitting's language keeps
the longest ones.  Ties between longest strings are broken toward the
lexicographically smallest read most-significant-first, so that the
representative is total and deterministic; actual ties are observable
through find_maximal_ties rather than hidden.

Digit strings are most-significant-first everywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import spectral, tree
from .errors import DigitOutOfRange, NonMonotoneBasis, Unrepresentable
from .polyint import degree
from .schlafli import SchlafliPair, Scheme, build_system
from .tree import recurrence_coefficients


@dataclass(frozen=True)
class BasisSequence:
    """Strictly increasing terms t_1 < t_2 < ... driving the numeration.

    The first degree-many terms are the spanning-tree level counts; the
    recurrence read off the splitting polynomial extends them.  origin
    records that choice, since other solutions of the same recurrence
    would be equally conceivable.
    """

    terms: tuple[int, ...]
    coefficients: tuple[int, ...]
    digit_bound: int
    origin: str

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Representation:
    """A digit string (most significant first) and the value it encodes."""

    digits: tuple[int, ...]
    value: int

    def __str__(self) -> str:
        return " ".join(str(d) for d in self.digits)


def _check_increasing(terms: tuple[int, ...]) -> None:
    for a, b in zip(terms, terms[1:]):
        if b <= a:
            raise NonMonotoneBasis(
                f"basis stalls at {a} -> {b}; the level-count seed is unusable here"
            )


def _extend(terms: list[int], coeffs: tuple[int, ...], n: int) -> None:
    d = len(coeffs)
    while len(terms) < n:
        terms.append(sum(c * t for c, t in zip(coeffs, terms[-d:])))


def basis(pair: SchlafliPair, scheme: Scheme, n: int) -> BasisSequence:
    """First n terms of the numeration basis for a pair and scheme."""
    if n < 1:
        raise ValueError("need at least one term")
    report = spectral.analyze(pair, scheme)
    d = degree(report.polynomial)
    system = build_system(pair, scheme)
    counts = [sum(v) for v in tree.kind_counts(system, d - 1)]
    coeffs = recurrence_coefficients(report.polynomial)
    terms = counts[:n]
    _extend(terms, coeffs, n)
    seq = BasisSequence(
        terms=tuple(terms),
        coefficients=coeffs,
        digit_bound=report.digit_bound,
        origin="spanning-tree level counts u_0..u_{d-1}, then the recurrence",
    )
    _check_increasing(seq.terms)
    return seq


def grow(seq: BasisSequence, n: int) -> BasisSequence:
    """A copy of the basis with at least n terms (by-value, input untouched)."""
    if n <= len(seq.terms):
        return seq
    terms = list(seq.terms)
    _extend(terms, seq.coefficients, n)
    out = BasisSequence(tuple(terms), seq.coefficients, seq.digit_bound, seq.origin)
    _check_increasing(out.terms)
    return out


def _grown_for(seq: BasisSequence, value: int) -> BasisSequence:
    while seq.terms[-1] <= value:
        seq = grow(seq, len(seq.terms) + len(seq.coefficients))
    return seq


def decode(digits, seq: BasisSequence) -> int:
    """Exact value of a digit string over the basis."""
    digits = tuple(digits)
    for d in digits:
        if not 0 <= d <= seq.digit_bound:
            raise DigitOutOfRange(f"digit {d} outside 0..{seq.digit_bound}")
    seq = grow(seq, len(digits))
    weights = seq.terms[: len(digits)][::-1]
    return sum(d * t for d, t in zip(digits, weights))


def represent_greedy(value: int, seq: BasisSequence) -> Representation:
    """Largest term first, largest admissible digit at each term.

    Greedy is not complete for every basis and bound; a remainder that
    cannot be cleared raises Unrepresentable instead of bending a digit.
    """
    if value < 0:
        raise ValueError("value must be >= 0")
    if value == 0:
        return Representation((0,), 0)
    seq = _grown_for(seq, value)
    b = seq.digit_bound
    k = max(i for i, t in enumerate(seq.terms) if t <= value)
    digits = []
    r = value
    for pos in range(k, -1, -1):
        d = min(b, r // seq.terms[pos])
        digits.append(d)
        r -= d * seq.terms[pos]
    if r != 0:
        raise Unrepresentable(f"greedy leaves remainder {r} for value {value}")
    return Representation(tuple(digits), value)


class _Feasibility:
    """Memoized test: can a remainder be written with the first k terms?"""

    def __init__(self, terms: tuple[int, ...], bound: int):
        self.terms = terms
        self.bound = bound
        sums = [0]
        for t in terms:
            sums.append(sums[-1] + bound * t)
        self.max_sum = sums
        self.memo: dict[tuple[int, int], bool] = {}

    def can(self, k: int, r: int) -> bool:
        if r == 0:
            return True
        if k <= 0 or r < 0 or r > self.max_sum[k]:
            return False
        key = (k, r)
        hit = self.memo.get(key)
        if hit is None:
            t = self.terms[k - 1]
            hit = any(
                self.can(k - 1, r - d * t) for d in range(min(self.bound, r // t) + 1)
            )
            self.memo[key] = hit
        return hit


_FEASIBILITY_CACHE: dict[tuple[tuple[int, ...], int], _Feasibility] = {}


def _feasibility(seq: BasisSequence, bound: int) -> _Feasibility:
    key = (seq.terms, bound)
    feas = _FEASIBILITY_CACHE.get(key)
    if feas is None:
        feas = _Feasibility(seq.terms, bound)
        _FEASIBILITY_CACHE[key] = feas
    return feas


def represent_maximal(
    value: int, seq: BasisSequence, bound: int | None = None
) -> Representation:
    """Longest digit string for the value; lexicographically smallest on ties.

    Works by dynamic programming over term indices: first find the
    greatest feasible length (leading digit nonzero), then fix digits
    from the most significant end, always the smallest digit that leaves
    a completable remainder.
    """
    if value < 0:
        raise ValueError("value must be >= 0")
    bound = seq.digit_bound if bound is None else bound
    if value == 0:
        return Representation((0,), 0)
    if bound < 1:
        raise Unrepresentable("digit bound below 1 admits only zero")
    seq = _grown_for(seq, value)
    feas = _feasibility(seq, bound)
    terms = seq.terms

    length = None
    k_max = max(i + 1 for i, t in enumerate(terms) if t <= value)
    for k in range(k_max, 0, -1):
        t = terms[k - 1]
        if any(feas.can(k - 1, value - d * t) for d in range(1, min(bound, value // t) + 1)):
            length = k
            break
    if length is None:
        raise Unrepresentable(f"no digit string over 0..{bound} encodes {value}")

    digits = []
    r = value
    for pos in range(length, 0, -1):
        t = terms[pos - 1]
        lo = 1 if pos == length else 0
        for d in range(lo, min(bound, r // t) + 1):
            if feas.can(pos - 1, r - d * t):
                digits.append(d)
                r -= d * t
                break
        else:  # pragma: no cover - the length search guarantees a digit
            raise AssertionError("feasible length lost during digit fixing")
    if r != 0:  # pragma: no cover
        raise AssertionError("digits do not exhaust the value")
    return Representation(tuple(digits), value)


def enumerate_language(
    seq: BasisSequence, bound: int, max_len: int
) -> list[tuple[int, ...]]:
    """Every value's longest representation within max_len digits.

    Exhaustive over all digit strings of length <= max_len, so it serves
    as the brute-force oracle for represent_maximal at small sizes.
    """
    if max_len < 1 or max_len > 12:
        raise ValueError("max_len must be within 1..12")
    best = _survey(seq, bound, max_len)
    language = {(0,)}
    for reps in best.values():
        language.add(min(reps))
    return sorted(language, key=lambda ds: (len(ds), ds))


def find_maximal_ties(
    seq: BasisSequence, bound: int, max_len: int
) -> dict[int, list[tuple[int, ...]]]:
    """Values whose longest representation is not unique, with all winners.

    Nonempty results are the concrete counterexamples to the uniqueness
    of the longest representation; the tie-break in represent_maximal
    exists because such values occur.
    """
    best = _survey(seq, bound, max_len)
    return {v: sorted(reps) for v, reps in sorted(best.items()) if len(reps) > 1}


def _survey(
    seq: BasisSequence, bound: int, max_len: int
) -> dict[int, list[tuple[int, ...]]]:
    """value -> all of its maximal-length digit strings within max_len."""
    seq = grow(seq, max_len)
    weights = seq.terms[:max_len]
    best: dict[int, tuple[int, list[tuple[int, ...]]]] = {}
    for length in range(1, max_len + 1):
        for head in range(1, bound + 1):
            for rest in product(range(bound + 1), repeat=length - 1):
                digits = (head, *rest)
                value = sum(
                    d * t for d, t in zip(digits, weights[length - 1 :: -1])
                )
                entry = best.get(value)
                if entry is None or entry[0] < length:
                    best[value] = (length, [digits])
                elif entry[0] == length:
                    entry[1].append(digits)
    return {v: reps for v, (_, reps) in best.items()}
