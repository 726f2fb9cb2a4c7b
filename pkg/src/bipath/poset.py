"""The finite bipath poset B_{n,m} and its intervals.

Elements are encoded as integers::

    0            -inf (global minimum)
    1 .. n       upper path 1 < 2 < ... < n
    n+1 .. n+m   lower path 1' < ... < m'
    n+m+1        +inf (global maximum)

Subsets are carried around as integer bitmasks, which keeps the interval
calculus (up/down closures, components, Hom bases) cheap enough to run over
every pair of intervals of a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal

Kind = Literal["U", "D", "B", "L", "R"]
KINDS: tuple[Kind, ...] = ("U", "D", "B", "L", "R")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(elems: Iterable[int]) -> int:
    out = 0
    for e in elems:
        out |= 1 << e
    return out


@dataclass(frozen=True)
class GridPoset:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("path lengths must be non-negative")

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n + self.m + 1

    @property
    def size(self) -> int:
        return self.n + self.m + 2

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def upper(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"upper index {i} out of range 1..{self.n}")
        return i

    def lower(self, j: int) -> int:
        if not 1 <= j <= self.m:
            raise IndexError(f"lower index {j} out of range 1..{self.m}")
        return self.n + j

    def arm(self, p: int) -> int:
        """1 for upper-path elements, 2 for lower-path ones, 0 for the ends."""
        if 1 <= p <= self.n:
            return 1
        if self.n < p <= self.n + self.m:
            return 2
        return 0

    def index(self, p: int) -> int:
        """Position of ``p`` along its path (1-based)."""
        return p if p <= self.n else p - self.n

    def name(self, p: int) -> str:
        if p == self.bottom:
            return "-inf"
        if p == self.top:
            return "+inf"
        return str(p) if p <= self.n else f"{p - self.n}'"

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def upper_chain(self) -> tuple[int, ...]:
        return (0, *range(1, self.n + 1), self.top)

    @cached_property
    def lower_chain(self) -> tuple[int, ...]:
        return (0, *range(self.n + 1, self.n + self.m + 1), self.top)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        return tuple(_mask(q for q in self.elements() if self.leq(p, q)) for p in self.elements())

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return tuple(_mask(q for q in self.elements() if self.leq(q, p)) for p in self.elements())

    def leq(self, p: int, q: int) -> bool:
        if p == q or p == self.bottom or q == self.top:
            return True
        if q == self.bottom or p == self.top:
            return False
        return self.arm(p) == self.arm(q) and p <= q

    @cached_property
    def structural_edges(self) -> tuple[tuple[int, int], ...]:
        """Consecutive pairs along the upper path, then the lower path.

        A path of length zero contributes the direct pair (-inf, +inf); for
        B_{0,0} both paths share that single pair.
        """
        edges: list[tuple[int, int]] = []
        for chain in (self.upper_chain, self.lower_chain):
            for a, b in zip(chain, chain[1:]):
                if (a, b) not in edges:
                    edges.append((a, b))
        return tuple(edges)

    def upset(self, mask: int) -> int:
        if mask == 0:
            return self.full_mask
        out = 0
        for p in _bits(mask):
            out |= self.up_masks[p]
        return out

    def downset(self, mask: int) -> int:
        if mask == 0:
            return self.full_mask
        out = 0
        for p in _bits(mask):
            out |= self.down_masks[p]
        return out

    def components(self, mask: int) -> list[int]:
        """Connected components of a subset under the comparability relation."""
        comps = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for p in _bits(frontier):
                    reach |= self.up_masks[p] | self.down_masks[p]
                reach &= rest & ~comp
                comp |= reach
                frontier = reach
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_convex(self, mask: int) -> bool:
        return self.upset(mask) & self.downset(mask) == mask

    def members(self, mask: int) -> list[int]:
        return list(_bits(mask))


def upset(P: GridPoset, elems: Iterable[int]) -> frozenset[int]:
    return frozenset(_bits(P.upset(_mask(elems))))


def downset(P: GridPoset, elems: Iterable[int]) -> frozenset[int]:
    return frozenset(_bits(P.downset(_mask(elems))))


_KIND_RANK = {"L": 0, "U": 1, "B": 1, "D": 1, "R": 2}
_KIND_INDEX = {k: i for i, k in enumerate(KINDS)}


@dataclass(frozen=True)
class GridInterval:
    """A connected convex subset of B_{n,m}.

    ``s`` and ``t`` follow the bracket notation ``<s, t>``:

    - U: the bar [s, t] on the upper path (s <= t)
    - D: the bar [t', s'] on the lower path (t <= s)
    - L: [-inf, t] u [-inf, s'], t on the upper path, s on the lower path
    - R: [s, +inf] u [t', +inf], s on the upper path, t on the lower path

    Path positions are 1-based; ``-inf``/``+inf`` stand for an empty arm in
    L/R. For B both are ``None``.
    """

    poset: GridPoset
    mask: int

    def __post_init__(self):
        P = self.poset
        if self.mask <= 0 or self.mask & ~P.full_mask:
            raise ValueError("interval must be a non-empty subset of the poset")
        if not P.is_convex(self.mask):
            raise ValueError(f"{self.members} is not convex")
        if len(P.components(self.mask)) != 1:
            raise ValueError(f"{self.members} is not connected")

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(_bits(self.mask))

    @cached_property
    def _shape(self) -> tuple[Kind, float | int | None, float | int | None]:
        P = self.poset
        has_bot = bool(self.mask & 1)
        has_top = bool(self.mask >> P.top & 1)
        ups = [P.index(p) for p in self.members if P.arm(p) == 1]
        lows = [P.index(p) for p in self.members if P.arm(p) == 2]
        if self.mask == P.full_mask:
            return ("B", None, None)
        if has_bot:
            return ("L", max(lows, default=-math.inf), max(ups, default=-math.inf))
        if has_top:
            return ("R", min(ups, default=math.inf), min(lows, default=math.inf))
        if ups and not lows:
            return ("U", min(ups), max(ups))
        if lows and not ups:
            return ("D", max(lows), min(lows))
        raise AssertionError(f"unclassifiable interval {sorted(self.members)}")

    @property
    def kind(self) -> Kind:
        return self._shape[0]

    @property
    def s(self):
        return self._shape[1]

    @property
    def t(self):
        return self._shape[2]

    def __contains__(self, p: int) -> bool:
        return bool(self.mask >> p & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def label(self) -> str:
        if self.kind == "B":
            return f"B_{{{self.poset.n},{self.poset.m}}}"

        def show(x, arm):
            if isinstance(x, float):
                return "-inf" if x < 0 else "+inf"
            return f"{x}'" if arm == 2 else str(x)

        arms = {"U": (1, 1), "D": (2, 2), "L": (2, 1), "R": (1, 2)}[self.kind]
        return f"<{show(self.s, arms[0])},{show(self.t, arms[1])}>{self.kind}"

    def __repr__(self) -> str:
        return f"GridInterval({self.label()})"

    def sort_key(self) -> tuple:
        return (_KIND_INDEX[self.kind], _num(self.s), _num(self.t))

    @classmethod
    def bracket(cls, P: GridPoset, kind: Kind, s=None, t=None) -> GridInterval:
        """Build an interval from its class and ``<s, t>`` endpoints.

        Use ``-math.inf`` / ``math.inf`` for the empty-arm endpoints of L/R.
        """
        if kind == "B":
            return cls(P, P.full_mask)
        if kind == "U":
            return cls(P, _mask(P.upper(i) for i in range(s, t + 1)))
        if kind == "D":
            return cls(P, _mask(P.lower(j) for j in range(t, s + 1)))
        if kind == "L":
            ups = () if t == -math.inf else range(1, int(t) + 1)
            lows = () if s == -math.inf else range(1, int(s) + 1)
            return cls(P, 1 | _mask(map(P.upper, ups)) | _mask(map(P.lower, lows)))
        if kind == "R":
            ups = () if s == math.inf else range(int(s), P.n + 1)
            lows = () if t == math.inf else range(int(t), P.m + 1)
            return cls(P, 1 << P.top | _mask(map(P.upper, ups)) | _mask(map(P.lower, lows)))
        raise ValueError(f"unknown interval class {kind!r}")


def _num(x) -> float:
    return -math.inf if x is None else float(x)


def hom_order_key(I: GridInterval) -> tuple:
    """Sort key placing J before I whenever Hom(k_I, k_J) is nonzero and J != I.

    Classes are ordered L, then U/B/D, then R; L intervals by increasing size
    (Hom goes to subintervals), R intervals by decreasing size, bars by
    (death, birth) position.
    """
    kind = I.kind
    if kind == "L":
        inner: tuple = (len(I),)
    elif kind == "R":
        inner = (-len(I),)
    elif kind == "U":
        inner = (I.t, I.s)
    elif kind == "D":
        inner = (I.s, I.t)
    else:
        inner = ()
    return (_KIND_RANK[kind], _KIND_INDEX[kind], *inner, I.sort_key())


def interval_count(n: int, m: int) -> int:
    return n * (n + 1) // 2 + m * (m + 1) // 2 + 2 * (n + 1) * (m + 1) + 1


def enumerate_intervals(P: GridPoset) -> list[GridInterval]:
    """Every interval of B_{n,m} exactly once, grouped by class U, D, B, L, R."""
    out = []
    for i in range(1, P.n + 1):
        for j in range(i, P.n + 1):
            out.append(GridInterval.bracket(P, "U", i, j))
    for i in range(1, P.m + 1):
        for j in range(i, P.m + 1):
            out.append(GridInterval.bracket(P, "D", j, i))
    out.append(GridInterval.bracket(P, "B"))
    for s in [-math.inf, *range(1, P.m + 1)]:
        for t in [-math.inf, *range(1, P.n + 1)]:
            out.append(GridInterval.bracket(P, "L", s, t))
    for s in [*range(1, P.n + 1), math.inf]:
        for t in [*range(1, P.m + 1), math.inf]:
            out.append(GridInterval.bracket(P, "R", s, t))
    return out


def omega(I: GridInterval, J: GridInterval) -> list[int]:
    """Components C of I n J with I n C-down <= C and J n C-up <= C, as bitmasks.

    Their number is dim Hom(k_I, k_J).
    """
    P = I.poset
    if J.poset != P:
        raise ValueError("intervals live in different posets")
    out = []
    for comp in P.components(I.mask & J.mask):
        if I.mask & P.downset(comp) & ~comp:
            continue
        if J.mask & P.upset(comp) & ~comp:
            continue
        out.append(comp)
    return out


def omega_count(I: GridInterval, J: GridInterval) -> int:
    return len(omega(I, J))
