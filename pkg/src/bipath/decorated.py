"""Decorated extended reals.

A decorated number ``r^-`` sits immediately before ``r`` and ``r^+``
immediately after it, so a pair of them describes an interval of the
extended real line with open or closed ends::

    (s^-, t^+) = [s, t]    (s^-, t^-) = [s, t)
    (s^+, t^+) = (s, t]    (s^+, t^-) = (s, t)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Literal

Sign = Literal["-", "+"]

INF = math.inf


@total_ordering
@dataclass(frozen=True)
class DecValue:
    value: float
    dec: Sign = "-"

    def __post_init__(self):
        if self.dec not in ("-", "+"):
            raise ValueError(f"decoration must be '-' or '+', got {self.dec!r}")
        if isinstance(self.value, float) and math.isnan(self.value):
            raise ValueError("decorated value cannot be NaN")
        object.__setattr__(self, "value", float(self.value))

    @property
    def key(self) -> tuple[float, int]:
        return (self.value, 0 if self.dec == "-" else 1)

    def __lt__(self, other: DecValue) -> bool:
        if not isinstance(other, DecValue):
            return NotImplemented
        return self.key < other.key

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    def __repr__(self) -> str:
        return f"{format_real(self.value)}^{self.dec}"


def minus(r: float) -> DecValue:
    return DecValue(r, "-")


def plus(r: float) -> DecValue:
    return DecValue(r, "+")


NEG_INF_MINUS = DecValue(-INF, "-")
NEG_INF_PLUS = DecValue(-INF, "+")
POS_INF_MINUS = DecValue(INF, "-")
POS_INF_PLUS = DecValue(INF, "+")


def dec_cmp(a: DecValue, b: DecValue) -> int:
    """Three-way comparison in the decorated order: -1, 0 or 1."""
    ka, kb = a.key, b.key
    return (ka > kb) - (ka < kb)


def dec_add(a: DecValue, b: DecValue) -> DecValue:
    """Sum of decorated numbers; the result is ``+`` only if both summands are.

    An infinite summand absorbs a finite one. ``-inf + +inf`` is undefined.
    """
    fa, fb = a.is_finite, b.is_finite
    if fa and fb:
        dec: Sign = "+" if (a.dec == "+" and b.dec == "+") else "-"
        return DecValue(a.value + b.value, dec)
    if not fa and not fb:
        if a.value != b.value:
            raise ValueError(f"undefined sum {a!r} + {b!r}")
        dec = "+" if (a.dec == "+" and b.dec == "+") else "-"
        return DecValue(a.value, dec)
    return a if not fa else b


def dec_shift(a: DecValue, eps: float) -> DecValue:
    # +-inf are fixed points of every translation
    if not a.is_finite:
        return a
    return DecValue(a.value + eps, a.dec)


def format_real(x: float) -> str:
    """Shortest round-trip text for a real; infinities as ``-inf``/``+inf``."""
    if x == INF:
        return "+inf"
    if x == -INF:
        return "-inf"
    return repr(float(x))


def parse_real(v) -> float:
    if isinstance(v, bool):
        raise ValueError(f"not a number: {v!r}")
    if isinstance(v, (int, float)):
        x = float(v)
    elif isinstance(v, str) and v.strip().lower() in ("-inf", "+inf", "inf"):
        x = -INF if v.strip().startswith("-") else INF
    else:
        raise ValueError(f"not a number or '-inf'/'+inf': {v!r}")
    if math.isnan(x):
        raise ValueError("NaN is not allowed")
    return x
