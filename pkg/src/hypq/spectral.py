"""Roots of the splitting polynomial and the regularity verdict.

The language of a splitting is regular exactly when the dominant root
beta of the splitting polynomial is a Pisot number: beta > 1 and every
other root lies strictly inside the unit circle.  Degenerate cases may
first require stripping factors of X and factors of the form
1 + X + ... + X^m; the verdict is then taken on the remaining core.

Exactness matters here: the non-regular cases hinge on a root of
modulus exactly 1, which floating point alone cannot certify.  Integer
roots are therefore found by exact trial division, and the modulus of a
conjugate pair is resolved through the integer constant term of its
quadratic factor whenever possible.  Only what remains is judged
numerically, with a safety margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import polyint
from .errors import UnsupportedCase
from .schlafli import (
    IntMatrix,
    SchlafliPair,
    Scheme,
    SplittingSystem,
    build_system,
    characteristic_polynomial,
    splitting_matrix,
)

#: Nominal accuracy of the numeric roots after polishing.
ROOT_PRECISION = 1e-12

#: Numeric moduli within this distance of 1 are not trusted; they are
#: resolved exactly or declared indeterminate.
UNIT_MARGIN = 1e-9

REASON_PISOT = "PisotCore"
REASON_UNIT_ROOT = "RootOnUnitCircle"
REASON_NON_PISOT = "NonPisotCore"
REASON_INDETERMINATE = "IndeterminateModulus"
REASON_NO_DOMINANT = "NoDominantRoot"


@dataclass(frozen=True)
class Root:
    """A single root; exact is set when it is a certified integer."""

    value: complex
    exact: int | None = None

    @property
    def is_real(self) -> bool:
        return self.value.imag == 0.0

    @property
    def modulus(self) -> float:
        return abs(self.value)


@dataclass(frozen=True)
class RootSet:
    """All roots of one polynomial, with the dominant real root singled out."""

    roots: tuple[Root, ...]
    beta: float | None
    precision: float

    def real_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_real)


@dataclass(frozen=True)
class FactorDecomposition:
    """original = X^stripped_x_power * product(unit_factors) * core, exactly."""

    original: tuple[int, ...]
    stripped_x_power: int
    unit_factors: tuple[tuple[int, ...], ...]
    core: tuple[int, ...]


@dataclass(frozen=True)
class PisotCertificate:
    """Outcome of the Pisot test with the evidence for the verdict.

    others lists every non-dominant root together with its modulus;
    moduli resolved exactly are rounded to that exact value.
    """

    pisot: bool
    reason: str
    beta: float | None
    others: tuple[tuple[complex, float], ...]


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_roots(poly: tuple[int, ...]) -> tuple[list[int], tuple[int, ...]]:
    """Deflate all integer roots (monic => all rational roots are integers)."""
    found: list[int] = []
    while polyint.degree(poly) >= 1 and poly[-1] == 0:
        found.append(0)
        poly = poly[:-1]
    progress = True
    while progress and polyint.degree(poly) >= 1:
        progress = False
        for d in _divisors(poly[-1]):
            for cand in (d, -d):
                if polyint.eval_at(poly, cand) == 0:
                    found.append(cand)
                    poly = polyint.deflate_root(poly, cand)
                    progress = True
                    break
            if progress:
                break
    return found, poly


def _quadratic_roots(b: int, c: int) -> list[complex]:
    """Roots of X^2 + bX + c; called only when there is no integer root."""
    disc = b * b - 4 * c
    if disc >= 0:
        s = math.sqrt(disc)
        r1 = (-b - s) / 2.0 if b >= 0 else (-b + s) / 2.0
        r2 = c / r1  # product of the roots is c, and c != 0 here
        return [complex(r1), complex(r2)]
    s = math.sqrt(-disc)
    return [complex(-b / 2.0, s / 2.0), complex(-b / 2.0, -s / 2.0)]


def _cubic_roots(a: int, b: int, c: int) -> list[complex]:
    """Roots of X^3 + aX^2 + bX + c; no integer root remains at this point."""
    shift = a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + c
    if p == 0.0 and q == 0.0:
        return [complex(-shift)] * 3
    if 4.0 * p**3 + 27.0 * q * q <= 0.0:
        # three real roots; p < 0 is forced in this branch
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (2.0 * p) * math.sqrt(-3.0 / p)
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        ts = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        return [complex(t - shift) for t in ts]
    s = math.sqrt(q * q / 4.0 + p**3 / 27.0)
    t0 = _cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s)
    # the remaining factor is t^2 + t0*t + (t0^2 + p), complex pair
    im = math.sqrt(3.0 * t0 * t0 + 4.0 * p) / 2.0
    re = -t0 / 2.0
    return [complex(t0 - shift), complex(re - shift, im), complex(re - shift, -im)]


def _polish(poly: tuple[int, ...], z: complex) -> complex:
    deriv = polyint.derivative(poly)
    for _ in range(2):
        d = polyint.eval_at(deriv, z)
        if d == 0:
            break
        z = z - polyint.eval_at(poly, z) / d
    return z


def find_roots(poly: tuple[int, ...]) -> RootSet:
    """All roots of a monic integer polynomial of degree 1..3.

    Integer roots are found by exact trial division over the divisors of
    the constant term and flagged exact; the remainder is solved in
    closed form and polished with two Newton steps on the original
    polynomial.
    """
    poly = polyint.normalize(poly)
    n = polyint.degree(poly)
    if n < 1 or poly[0] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if n > 3:
        raise UnsupportedCase("root finding is implemented for degree <= 3")

    ints, rest = _integer_roots(poly)
    roots = [Root(complex(v), exact=v) for v in ints]
    m = polyint.degree(rest)
    if m == 1:
        raise AssertionError("a monic linear factor always has an integer root")
    numeric: list[complex] = []
    if m == 2:
        numeric = _quadratic_roots(rest[1], rest[2])
    elif m == 3:
        numeric = _cubic_roots(rest[1], rest[2], rest[3])
    for z in numeric:
        z = _polish(poly, z)
        if z.imag == 0.0:
            z = complex(z.real)
        roots.append(Root(z))

    roots.sort(key=lambda r: (-r.value.real, abs(r.value.imag)))
    reals = [r for r in roots if r.is_real]
    beta = max((r.value.real for r in reals), default=None)
    return RootSet(tuple(roots), beta, ROOT_PRECISION)


#: The admissible degenerate factors 1 + X + ... + X^m for m = 1, 2.
#: X - 1 is deliberately not among them.
UNIT_FACTORS = ((1, 1), (1, 1, 1))


def strip_factors(poly: tuple[int, ...]) -> FactorDecomposition:
    """Remove factors of X and unit factors by exact division."""
    original = polyint.normalize(poly)
    core = original
    x_power = 0
    while polyint.degree(core) >= 1 and core[-1] == 0:
        core = core[:-1]
        x_power += 1
    removed: list[tuple[int, ...]] = []
    progress = True
    while progress:
        progress = False
        for unit in UNIT_FACTORS:
            if polyint.degree(core) >= polyint.degree(unit):
                quo = polyint.divide_exact(core, unit)
                if quo is not None:
                    removed.append(unit)
                    core = quo
                    progress = True
                    break
    return FactorDecomposition(original, x_power, tuple(removed), core)


def _resolved_pair_modulus_sq(poly: tuple[int, ...]) -> int | None:
    """Exact squared modulus of a conjugate pair, when one exists.

    After deflating every integer root, a quadratic remainder with
    negative discriminant is the minimal factor of the pair, and the
    squared modulus equals its integer constant term.
    """
    _, rest = _integer_roots(poly)
    if polyint.degree(rest) == 2 and rest[1] * rest[1] - 4 * rest[2] < 0:
        return rest[2]
    return None


def is_pisot(poly: tuple[int, ...]) -> PisotCertificate:
    """Decide whether the dominant root is a Pisot number.

    True iff the greatest real root beta exceeds 1 and every other root
    has modulus strictly below 1.  Verdicts near the unit circle are
    taken on exact grounds whenever the root (or the squared modulus of
    a conjugate pair) is an integer; a numeric modulus within UNIT_MARGIN
    of 1 that cannot be resolved exactly yields a negative verdict with
    the indeterminate reason rather than a guess.
    """
    poly = polyint.normalize(poly)
    if polyint.degree(poly) < 1:
        return PisotCertificate(False, REASON_NO_DOMINANT, None, ())
    rs = find_roots(poly)
    if rs.beta is None:
        return PisotCertificate(False, REASON_NO_DOMINANT, None, ())

    idx = max(
        (i for i, r in enumerate(rs.roots) if r.is_real),
        key=lambda i: rs.roots[i].value.real,
    )
    beta_root = rs.roots[idx]
    if beta_root.exact is not None:
        if beta_root.exact <= 1:
            return PisotCertificate(False, REASON_NO_DOMINANT, rs.beta, ())
    elif rs.beta <= 1.0 + UNIT_MARGIN:
        reason = REASON_INDETERMINATE if rs.beta > 1.0 - UNIT_MARGIN else REASON_NO_DOMINANT
        return PisotCertificate(False, reason, rs.beta, ())

    pair_mod_sq = _resolved_pair_modulus_sq(poly)
    others: list[tuple[complex, float]] = []
    on_circle = outside = indeterminate = False
    for i, r in enumerate(rs.roots):
        if i == idx:
            continue
        if r.exact is not None:
            m = float(abs(r.exact))
            if abs(r.exact) == 1:
                on_circle = True
            elif abs(r.exact) > 1:
                outside = True
        elif r.value.imag != 0.0 and pair_mod_sq is not None:
            m = math.sqrt(pair_mod_sq)
            if pair_mod_sq == 1:
                on_circle = True
            elif pair_mod_sq > 1:
                outside = True
        else:
            m = abs(r.value)
            if m > 1.0 + UNIT_MARGIN:
                outside = True
            elif m >= 1.0 - UNIT_MARGIN:
                indeterminate = True
        others.append((r.value, m))

    if outside:
        verdict = (False, REASON_NON_PISOT)
    elif on_circle:
        verdict = (False, REASON_UNIT_ROOT)
    elif indeterminate:
        verdict = (False, REASON_INDETERMINATE)
    else:
        verdict = (True, REASON_PISOT)
    return PisotCertificate(verdict[0], verdict[1], rs.beta, tuple(others))


def _floor_dominant(poly: tuple[int, ...], beta: float) -> int:
    """floor(beta) guarded by exact sign checks around the float value.

    The dominant root is the greatest real root of a monic polynomial,
    so the polynomial is strictly positive beyond it; the floor is the
    largest integer at which the value is still <= 0.
    """
    guess = math.floor(beta)
    best = guess - 1
    for cand in (guess, guess + 1):
        if polyint.eval_at(poly, cand) <= 0:
            best = cand
    return best


@dataclass(frozen=True)
class SpectralReport:
    """Full spectral verdict for one pair and scheme."""

    pair: SchlafliPair
    scheme: Scheme
    system: SplittingSystem
    matrix: IntMatrix
    polynomial: tuple[int, ...]
    decomposition: FactorDecomposition
    roots: RootSet
    certificate: PisotCertificate
    beta: float
    pisot: bool
    regular: bool
    reason: str
    digit_bound: int
    warnings: tuple[str, ...]


def analyze(pair: SchlafliPair, scheme: Scheme) -> SpectralReport:
    """Chain rules -> matrix -> polynomial -> stripping -> verdict.

    regular reflects the Pisot test of the core after stripping; pisot
    reflects the same test applied to the full polynomial (factors of X
    count as roots of modulus zero).  digit_bound floors the dominant
    root of the full polynomial, since that is the root governing the
    counting recurrence.
    """
    system = build_system(pair, scheme)
    matrix = splitting_matrix(system)
    poly = characteristic_polynomial(matrix)
    deco = strip_factors(poly)
    core_cert = is_pisot(deco.core)
    core_roots = (
        find_roots(deco.core)
        if polyint.degree(deco.core) >= 1
        else RootSet((), None, ROOT_PRECISION)
    )
    full_cert = is_pisot(poly)

    full_roots = find_roots(poly)
    if full_roots.beta is None or full_roots.beta <= 1.0:
        # e.g. {4,5} under the legacy odd scheme: (X-1)^2, no growth,
        # the splitting never gets off the ground
        raise UnsupportedCase(
            f"{pair} under {scheme.tag}: no dominant root above 1"
        )
    beta = full_roots.beta

    warnings = []
    for rule in system.rules:
        for kind, mult in rule.children:
            if mult == 0:
                warnings.append(
                    f"rule {rule.parent.label} produces {kind.label} with multiplicity 0"
                )

    return SpectralReport(
        pair=pair,
        scheme=scheme,
        system=system,
        matrix=matrix,
        polynomial=poly,
        decomposition=deco,
        roots=core_roots,
        certificate=core_cert,
        beta=beta,
        pisot=full_cert.pisot,
        regular=core_cert.pisot,
        reason=core_cert.reason,
        digit_bound=_floor_dominant(poly, beta),
        warnings=tuple(warnings),
    )
