"""Canonical string form and parsing for exact rationals.

Every rational that crosses a serialization boundary is rendered as
"p/q" with q > 0 and gcd(p, q) = 1, so identical values always produce
identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rat(x) -> Fraction:
    """Coerce ints, strings like "3/4" and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x: Fraction) -> str:
    x = rat(x)
    return f"{x.numerator}/{x.denominator}"


def vec(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in xs)


def vec_str(xs: Sequence[Fraction]) -> list[str]:
    return [rat_str(x) for x in xs]


def vec_parse(xs: Sequence) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in xs)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c: Fraction, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = rat(c)
    return tuple(c * x for x in a)
