"""Brute-force reference implementations: slow but independently simple.

These exist so the fast paths can be audited against code with no shared
logic: literal repeated addition instead of double-and-add, and toy-scale
discrete-log solvers that demonstrate why only small curves are used here.
None of this is, or pretends to be, secure.
"""

from __future__ import annotations

from math import isqrt

from .curve import Point


def slow_scalar_mul(k: int, point: Point) -> Point:
    """k * point by literally adding the point k times."""
    if k < 0:
        raise ValueError("scalar must be non-negative")
    acc = point.curve.infinity()
    for _ in range(k):
        acc = acc + point
    return acc


def ecdlp_exhaustive(generator: Point, target: Point, n: int) -> int | None:
    """Smallest k in [0, n) with k*generator == target, by walking every multiple.

    Returns None when the target is not a multiple of the generator.
    """
    acc = generator.curve.infinity()
    for k in range(n):
        if acc == target:
            return k
        acc = acc + generator
    return None


def ecdlp_bsgs(generator: Point, target: Point, n: int) -> int | None:
    """Baby-step giant-step discrete log in O(sqrt(n)) group operations.

    Same contract as ecdlp_exhaustive: the two must agree everywhere.
    """
    m = isqrt(n - 1) + 1 if n > 1 else 1
    baby = {}
    step = generator.curve.infinity()
    for j in range(m):
        baby.setdefault(step, j)
        step = step + generator
    stride = -(m * generator)
    current = target
    for i in range(m):
        if current in baby:
            return i * m + baby[current]
        current = current + stride
    return None
