"""Intervals of the continuous bipath poset and persistence diagrams over it.

Points of the continuous poset are ``-inf``, ``+inf`` and pairs ``(r, arm)``
with ``r`` real and ``arm`` in {1, 2}.  An interval is described by its class
and two decorated numbers:

- U / D: ``(birth, death)``, a bar on arm 1 / arm 2;
- L: ``(upper_cut, lower_cut)``, the set ``{-inf}`` plus every ``(r, k)``
  with ``r^+ <= cut_k``;
- R: ``(upper_cut, lower_cut)``, the set ``{+inf}`` plus every ``(r, k)``
  with ``cut_k <= r^-``;
- B: the whole poset.

An L cut of ``-inf^+`` means an empty arm, ``+inf^-`` a full one; dually for
R.  Cuts are normalized so that each interval has one representation.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Sequence

from .decorated import (
    NEG_INF_MINUS,
    NEG_INF_PLUS,
    POS_INF_MINUS,
    POS_INF_PLUS,
    DecValue,
    dec_shift,
    minus,
)
from .poset import KINDS, GridInterval, Kind

INF = math.inf
_KIND_INDEX = {k: i for i, k in enumerate(KINDS)}


def _norm_cut(c: DecValue) -> DecValue:
    if c.value == -INF:
        return NEG_INF_PLUS
    if c.value == INF:
        return POS_INF_MINUS
    return c


@dataclass(frozen=True)
class ContinuousInterval:
    kind: Kind
    a: DecValue | None = None
    b: DecValue | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown interval class {self.kind!r}")
        if self.kind == "B":
            if self.a is not None or self.b is not None:
                raise ValueError("class B carries no endpoints")
            return
        if not isinstance(self.a, DecValue) or not isinstance(self.b, DecValue):
            raise ValueError(f"class {self.kind} needs two decorated endpoints")
        if self.kind in ("U", "D"):
            if self.a in (NEG_INF_MINUS, POS_INF_PLUS) or self.b in (NEG_INF_MINUS, POS_INF_PLUS):
                raise ValueError("bar endpoints cannot be -inf^- or +inf^+")
            if not self.a < self.b:
                raise ValueError(f"empty bar: birth {self.a!r} is not below death {self.b!r}")
        else:
            object.__setattr__(self, "a", _norm_cut(self.a))
            object.__setattr__(self, "b", _norm_cut(self.b))

    @classmethod
    def U(cls, birth: DecValue, death: DecValue) -> ContinuousInterval:
        return cls("U", birth, death)

    @classmethod
    def D(cls, birth: DecValue, death: DecValue) -> ContinuousInterval:
        return cls("D", birth, death)

    @classmethod
    def L(cls, upper_cut: DecValue, lower_cut: DecValue) -> ContinuousInterval:
        return cls("L", upper_cut, lower_cut)

    @classmethod
    def R(cls, upper_cut: DecValue, lower_cut: DecValue) -> ContinuousInterval:
        return cls("R", upper_cut, lower_cut)

    @classmethod
    def whole(cls) -> ContinuousInterval:
        return cls("B")

    @property
    def birth(self) -> DecValue:
        self._need("U", "D")
        return self.a

    @property
    def death(self) -> DecValue:
        self._need("U", "D")
        return self.b

    @property
    def upper_cut(self) -> DecValue:
        self._need("L", "R")
        return self.a

    @property
    def lower_cut(self) -> DecValue:
        self._need("L", "R")
        return self.b

    def _need(self, *kinds):
        if self.kind not in kinds:
            raise AttributeError(f"class {self.kind} has no such endpoint")

    def sort_key(self) -> tuple:
        ends = tuple(x.key for x in (self.a, self.b) if x is not None)
        return (_KIND_INDEX[self.kind], ends)

    def __repr__(self) -> str:
        if self.kind == "B":
            return "B"
        return f"{self.kind}({self.a!r}, {self.b!r})"

    # --- point-set view -------------------------------------------------

    def arms(self) -> tuple[bool, bool, tuple | None, tuple | None]:
        """``(has -inf, has +inf, arm-1 range, arm-2 range)``.

        An arm range ``(lo, hi)`` holds the reals r with ``lo <= r^-`` and
        ``r^+ <= hi``; ``None`` marks an empty arm.
        """
        full = (NEG_INF_PLUS, POS_INF_MINUS)
        if self.kind == "B":
            return (True, True, full, full)
        if self.kind == "U":
            return (False, False, (self.a, self.b), None)
        if self.kind == "D":
            return (False, False, None, (self.a, self.b))
        if self.kind == "L":
            arm = [None if c == NEG_INF_PLUS else (NEG_INF_PLUS, c) for c in (self.a, self.b)]
            return (True, False, arm[0], arm[1])
        arm = [None if c == POS_INF_MINUS else (c, POS_INF_MINUS) for c in (self.a, self.b)]
        return (False, True, arm[0], arm[1])

    def __contains__(self, point) -> bool:
        """Membership of ``-inf``, ``+inf`` (as floats) or ``(r, arm)``."""
        bot, top, arm1, arm2 = self.arms()
        if point == -INF:
            return bot
        if point == INF:
            return top
        r, k = point
        rng = arm1 if k == 1 else arm2
        return rng is not None and rng[0] <= minus(r) and DecValue(r, "+") <= rng[1]


def _bar_key(rng: tuple | None) -> tuple | None:
    # empty decorated ranges collapse to None
    if rng is None:
        return None
    lo, hi = rng
    if lo.value == -INF:
        lo = NEG_INF_PLUS
    if hi.value == INF:
        hi = POS_INF_MINUS
    return (lo, hi) if lo < hi else None


def contains(outer: ContinuousInterval, inner: ContinuousInterval) -> bool:
    """``inner`` is a subset of ``outer``."""
    ob, ot, *oarms = outer.arms()
    ib, it, *iarms = inner.arms()
    if (ib and not ob) or (it and not ot):
        return False
    for o, i in zip(oarms, iarms):
        o, i = _bar_key(o), _bar_key(i)
        if i is None:
            continue
        if o is None or not (o[0] <= i[0] and i[1] <= o[1]):
            return False
    return True


def shift(I: ContinuousInterval, eps: float) -> ContinuousInterval:
    """The image of ``I`` under translation by ``eps``."""
    if I.kind == "B":
        return I
    return ContinuousInterval(I.kind, dec_shift(I.a, eps), dec_shift(I.b, eps))


def thicken(I: ContinuousInterval, eps: float) -> ContinuousInterval:
    """The eps-thickening of ``I``: translate back by eps, take the upset, and
    intersect with the downset of the forward translate."""
    if eps < 0:
        raise ValueError("thickening radius must be non-negative")
    if I.kind in ("U", "D"):
        return ContinuousInterval(I.kind, dec_shift(I.a, -eps), dec_shift(I.b, eps))
    if I.kind == "L":
        return shift(I, eps)
    if I.kind == "R":
        return shift(I, -eps)
    return I


# --- thresholds ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Threshold:
    """The set of eps where a condition holds: ``eps >= value`` if attained,
    else ``eps > value``."""

    value: float
    attained: bool = True

    def holds(self, eps: float) -> bool:
        return eps > self.value or (eps == self.value and self.attained)

    def holds_in_limit(self, eps: float) -> bool:
        # for every eps' > eps; what the infimum sees
        return eps >= self.value


ZERO = Threshold(0.0, True)
NEVER = Threshold(INF, False)


def tmax(*ts: Threshold) -> Threshold:
    """The threshold of a conjunction."""
    out = ZERO
    for t in ts:
        if t.value > out.value:
            out = t
        elif t.value == out.value:
            out = Threshold(t.value, t.attained and out.attained)
    return out


def shifted_leq(x: DecValue, y: DecValue, eps: float) -> bool:
    """``(x - eps)^sigma <=* y^tau`` with +-inf fixed by translation.

    Finite cases compare ``x - y`` against ``eps`` so that the predicate agrees
    bit for bit with :func:`shifted_leq_threshold`.
    """
    if not x.is_finite or not y.is_finite:
        return dec_shift(x, -eps) <= y
    gap = x.value - y.value
    if gap < eps:
        return True
    return gap == eps and not (x.dec == "+" and y.dec == "-")


def shifted_leq_threshold(x: DecValue, y: DecValue) -> Threshold:
    if not x.is_finite or not y.is_finite:
        return ZERO if x <= y else NEVER
    gap = x.value - y.value
    strict = x.dec == "+" and y.dec == "-"
    if gap < 0 or (gap == 0 and not strict):
        return ZERO
    return Threshold(gap, not strict)


def _containment_terms(J: ContinuousInterval, I: ContinuousInterval):
    """Pairs (x, y) with ``J <= thicken(I, eps)`` iff every ``(x - eps) <=* y``."""
    if I.kind in ("U", "D"):
        return [(I.a, J.a), (J.b, I.b)]
    if I.kind == "L":
        return [(J.a, I.a), (J.b, I.b)]
    if I.kind == "R":
        return [(I.a, J.a), (I.b, J.b)]
    return []


def contained_in_thickening(J: ContinuousInterval, I: ContinuousInterval, eps: float) -> bool:
    """``J`` lies in the eps-thickening of ``I``."""
    if eps < 0:
        raise ValueError("thickening radius must be non-negative")
    if I.kind != J.kind:
        return contains(thicken(I, eps), J)
    return all(shifted_leq(x, y, eps) for x, y in _containment_terms(J, I))


def _same_class_threshold(J: ContinuousInterval, I: ContinuousInterval) -> Threshold:
    return tmax(*(shifted_leq_threshold(x, y) for x, y in _containment_terms(J, I)))


def matching_threshold(I: ContinuousInterval, J: ContinuousInterval) -> Threshold:
    """Where both ``J <= Ex_eps(I)`` and ``I <= Ex_eps(J)`` hold.

    Thickening keeps -inf and +inf membership and keeps bars on their arm, so
    intervals of different classes are never mutually contained.
    """
    if I.kind != J.kind:
        return NEVER
    return tmax(_same_class_threshold(J, I), _same_class_threshold(I, J))


def is_trivial(I: ContinuousInterval, delta: float) -> bool:
    """The interval module's internal delta-shift map vanishes."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if I.kind not in ("U", "D"):
        return False
    length = I.b.value - I.a.value
    closed = I.a.dec == "-" and I.b.dec == "+"
    return not (length > delta or (length == delta and closed))


def triviality_threshold(I: ContinuousInterval) -> Threshold:
    """Where the interval is 2*eps-trivial, as a threshold in eps."""
    if I.kind not in ("U", "D"):
        return NEVER
    length = I.b.value - I.a.value
    if length == INF:
        return NEVER
    closed = I.a.dec == "-" and I.b.dec == "+"
    return Threshold(length / 2, not closed)


# --- diagrams -------------------------------------------------------------------


class Diagram:
    """A finite multiset of continuous intervals."""

    def __init__(self, items: Mapping[ContinuousInterval, int] | Iterable[ContinuousInterval] = ()):
        counts: Counter = Counter()
        if isinstance(items, Mapping):
            for I, k in items.items():
                if int(k) < 0:
                    raise ValueError("multiplicities must be non-negative")
                counts[I] += int(k)
        else:
            for I in items:
                counts[I] += 1
        self._counts = {I: counts[I] for I in sorted(counts, key=ContinuousInterval.sort_key) if counts[I]}

    def items(self):
        return self._counts.items()

    def points(self) -> list[ContinuousInterval]:
        """Every interval repeated by its multiplicity, in canonical order."""
        return [I for I, k in self._counts.items() for _ in range(k)]

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, Diagram) and self._counts == other._counts

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __getitem__(self, I: ContinuousInterval) -> int:
        return self._counts.get(I, 0)

    def __repr__(self) -> str:
        body = ", ".join(f"{I!r}" + (f" x{k}" if k > 1 else "") for I, k in self._counts.items())
        return f"Diagram({body})"


def _cut(values: Sequence[float], k: int) -> DecValue:
    # k is 1-based; one past the end is +inf
    return minus(values[k - 1]) if k <= len(values) else POS_INF_MINUS


def grid_to_continuous(I: GridInterval, upper: Sequence[float], lower: Sequence[float]) -> ContinuousInterval:
    """The interval of the continuous poset pulled back from grid interval ``I``.

    Grid element i on the upper arm stands for all (r, 1) with
    ``upper[i-1] <= r < upper[i]``; reals below ``upper[0]`` map to ``-inf``.
    Same for the lower arm.
    """
    P = I.poset
    if len(upper) != P.n or len(lower) != P.m:
        raise ValueError(f"need {P.n} upper and {P.m} lower critical values")
    kind, s, t = I.kind, I.s, I.t
    if kind == "B":
        return ContinuousInterval.whole()
    if kind == "U":
        return ContinuousInterval.U(_cut(upper, s), _cut(upper, t + 1))
    if kind == "D":
        return ContinuousInterval.D(_cut(lower, t), _cut(lower, s + 1))
    if kind == "L":
        t_up = 0 if t == -INF else int(t)
        s_low = 0 if s == -INF else int(s)
        return ContinuousInterval.L(_cut(upper, t_up + 1), _cut(lower, s_low + 1))
    s_up = P.n + 1 if s == INF else int(s)
    t_low = P.m + 1 if t == INF else int(t)
    return ContinuousInterval.R(_cut(upper, s_up), _cut(lower, t_low))


def diagram_from_grid(D: Mapping[GridInterval, int], upper: Sequence[float], lower: Sequence[float]) -> Diagram:
    out: Counter = Counter()
    for I, k in D.items():
        out[grid_to_continuous(I, upper, lower)] += k
    return Diagram(out)
