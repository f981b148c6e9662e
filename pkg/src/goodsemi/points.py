"""Lattice points of ZZ^s with an absorbing infinity, boxes, delta sets.

Points are plain tuples of integers.  The constant ``INF`` marks an
infinite coordinate; it is an absorbing maximum under ``meet``/``join``
and addition.  Stored ideal representations never carry ``INF`` -- only
curve-internal order vectors do.
"""

from __future__ import annotations

import itertools

from .errors import LengthMismatch

INF = float("inf")


def _same_length(a, b):
    if len(a) != len(b):
        raise LengthMismatch(f"points of length {len(a)} and {len(b)}")


def meet(a, b):
    """Componentwise infimum.  INF is an absorbing maximum."""
    _same_length(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def join(a, b):
    """Componentwise supremum."""
    _same_length(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def add(a, b):
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    """Componentwise difference.  Not defined on INF coordinates of b."""
    _same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def leq(a, b):
    """Natural partial order: a <= b componentwise."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a, b):
    """Strict in every component."""
    _same_length(a, b)
    return all(x < y for x, y in zip(a, b))


def is_finite(a):
    return all(x != INF for x in a)


def zero(s):
    return (0,) * s


def ones(s):
    return (1,) * s


def unit(s, i):
    """The i-th coordinate vector e_i (0-based)."""
    return tuple(1 if k == i else 0 for k in range(s))


class Box:
    """A finite coordinate window [lo, hi], both corners included."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo, hi = tuple(lo), tuple(hi)
        _same_length(lo, hi)
        if not leq(lo, hi):
            raise ValueError(f"box corners out of order: {lo} > {hi}")
        self.lo = lo
        self.hi = hi

    @property
    def branches(self):
        return len(self.lo)

    def __contains__(self, p):
        return leq(self.lo, p) and leq(p, self.hi)

    def __iter__(self):
        # Row-major: last coordinate varies fastest, i.e. lexicographic order.
        ranges = [range(l, h + 1) for l, h in zip(self.lo, self.hi)]
        return itertools.product(*ranges)

    def __len__(self):
        n = 1
        for l, h in zip(self.lo, self.hi):
            n *= h - l + 1
        return n

    def index(self, p):
        """Row-major index of p inside the box."""
        idx = 0
        for l, h, c in zip(self.lo, self.hi, p):
            idx = idx * (h - l + 1) + (c - l)
        return idx

    def widen(self, k):
        return Box(tuple(l - k for l in self.lo), tuple(h + k for h in self.hi))

    def __eq__(self, other):
        return isinstance(other, Box) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Box({self.lo}, {self.hi})"


def delta_set(alpha, fixed, window, within=None, closed=False):
    """Points of `window` that agree with `alpha` exactly on the `fixed`
    coordinates and are strictly larger on every other coordinate.

    With closed=True the off-`fixed` coordinates may also be equal.  With
    `within` the result is intersected with that ideal's membership set.
    Returned in lexicographic order.
    """
    s = len(alpha)
    fixed = frozenset(fixed)
    if not fixed or not fixed <= set(range(s)):
        raise ValueError(f"fixed coordinate set {set(fixed)} invalid for {s} branches")
    ranges = []
    for i in range(s):
        if i in fixed:
            if not window.lo[i] <= alpha[i] <= window.hi[i]:
                return []
            ranges.append((alpha[i],))
        else:
            start = alpha[i] if closed else alpha[i] + 1
            ranges.append(range(max(start, window.lo[i]), window.hi[i] + 1))
    pts = itertools.product(*ranges)
    if within is not None:
        return [p for p in pts if within.contains(p)]
    return list(pts)


def delta(alpha, window, within=None, closed=False):
    """Union of the single-coordinate delta sets of `alpha` in `window`."""
    out = set()
    for i in range(len(alpha)):
        out.update(delta_set(alpha, {i}, window, within=within, closed=closed))
    return sorted(out)
