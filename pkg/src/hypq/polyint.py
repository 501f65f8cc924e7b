"""Exact arithmetic on integer polynomials.

Polynomials are tuples of integer coefficients in descending degree order,
so (1, -3, 1) is X^2 - 3X + 1.  Everything here stays in exact integer
(or Fraction) arithmetic; floating point enters only in the root finder.
"""

from __future__ import annotations

from typing import Sequence


Coeffs = tuple[int, ...]


def normalize(coeffs: Sequence[int]) -> Coeffs:
    """Drop leading zero coefficients, keeping at least the constant."""
    c = list(coeffs)
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
    return tuple(c)


def degree(coeffs: Sequence[int]) -> int:
    return len(normalize(coeffs)) - 1


def add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    la, lb = len(a), len(b)
    n = max(la, lb)
    out = [0] * n
    for i, v in enumerate(a):
        out[n - la + i] += v
    for i, v in enumerate(b):
        out[n - lb + i] += v
    return normalize(out)


def sub(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    return add(a, tuple(-v for v in b))


def mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] += u * v
    return normalize(out)


def eval_at(coeffs: Sequence[int], x):
    """Horner evaluation; x may be int, Fraction, float or complex."""
    acc = 0 * x if not isinstance(x, int) else 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def derivative(coeffs: Sequence[int]) -> Coeffs:
    n = len(coeffs) - 1
    if n <= 0:
        return (0,)
    return tuple(c * (n - i) for i, c in enumerate(coeffs[:-1]))


def divide_exact(a: Sequence[int], b: Sequence[int]) -> Coeffs | None:
    """Quotient of a by b over the integers, or None if it does not divide.

    b must be nonzero; the division is attempted with exact integer steps,
    so a nonzero remainder or a fractional quotient coefficient both
    report failure.
    """
    a = list(normalize(a))
    b = list(normalize(b))
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if a == [0]:
        return (0,)
    if len(a) < len(b):
        return None
    lead = b[0]
    quot = [0] * (len(a) - len(b) + 1)
    for i in range(len(quot)):
        head = a[i]
        if head % lead != 0:
            return None
        q = head // lead
        quot[i] = q
        for j, v in enumerate(b):
            a[i + j] -= q * v
    if any(v != 0 for v in a):
        return None
    return normalize(quot)


def deflate_root(coeffs: Sequence[int], r: int) -> Coeffs:
    """Exact synthetic division of a monic polynomial by (X - r)."""
    out = []
    acc = 0
    for c in coeffs[:-1]:
        acc = acc * r + c
        out.append(acc)
    # the final accumulator is the remainder, zero for a true root
    rem = acc * r + coeffs[-1]
    if rem != 0:
        raise ValueError(f"{r} is not a root")
    return normalize(out)
