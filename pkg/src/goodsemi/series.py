"""Vectors of exact Laurent polynomials, one per branch.

These model elements of a product of formal Laurent series fields with
rational coefficients.  Arithmetic is exact; truncation is applied
explicitly by the module layer that knows which positions it may trust.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LengthMismatch
from .points import INF


class BranchVector:
    """One Laurent polynomial per branch, exact rational coefficients.

    parts[b] maps exponent -> nonzero Fraction.
    """

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(
            {e: Fraction(c) for e, c in p.items() if c} for p in parts
        )

    @classmethod
    def zero(cls, branches):
        return cls([{} for _ in range(branches)])

    @classmethod
    def one(cls, branches):
        return cls([{0: Fraction(1)} for _ in range(branches)])

    @classmethod
    def monomial(cls, branches, branch, exponent, coeff=1):
        parts = [{} for _ in range(branches)]
        parts[branch][exponent] = Fraction(coeff)
        return cls(parts)

    @property
    def branches(self):
        return len(self.parts)

    def is_zero(self):
        return all(not p for p in self.parts)

    def coeff(self, branch, exponent):
        return self.parts[branch].get(exponent, Fraction(0))

    def order(self):
        """Per-branch order vector; INF on identically zero branches."""
        return tuple(min(p) if p else INF for p in self.parts)

    def is_regular(self):
        """No branch identically zero."""
        return all(self.parts)

    def _binop(self, other, op):
        if self.branches != other.branches:
            raise LengthMismatch("branch counts differ")
        parts = []
        for p, q in zip(self.parts, other.parts):
            out = dict(p)
            for e, c in q.items():
                out[e] = out.get(e, Fraction(0)) + op(c)
            parts.append(out)
        return BranchVector(parts)

    def __add__(self, other):
        return self._binop(other, lambda c: c)

    def __sub__(self, other):
        return self._binop(other, lambda c: -c)

    def __neg__(self):
        return BranchVector([{e: -c for e, c in p.items()} for p in self.parts])

    def scaled(self, factor):
        factor = Fraction(factor)
        return BranchVector(
            [{e: c * factor for e, c in p.items()} for p in self.parts]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if self.branches != other.branches:
            raise LengthMismatch("branch counts differ")
        parts = []
        for p, q in zip(self.parts, other.parts):
            out = {}
            for e1, c1 in p.items():
                for e2, c2 in q.items():
                    e = e1 + e2
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            parts.append(out)
        return BranchVector(parts)

    __rmul__ = __mul__

    def truncated(self, cut):
        """Drop every position with exponent >= cut[branch]."""
        return BranchVector(
            [
                {e: c for e, c in p.items() if e < cut[b]}
                for b, p in enumerate(self.parts)
            ]
        )

    def keys(self):
        """Nonzero positions as (exponent, branch), the column order."""
        return [(e, b) for b, p in enumerate(self.parts) for e in p]

    def leading_key(self):
        """Smallest nonzero position in (exponent, branch) order."""
        ks = self.keys()
        return min(ks) if ks else None

    def get(self, key):
        e, b = key
        return self.parts[b].get(e, Fraction(0))

    def min_degrees(self):
        """Per-branch minimal exponent; None on zero branches."""
        return tuple(min(p) if p else None for p in self.parts)

    def max_degrees(self):
        return tuple(max(p) if p else None for p in self.parts)

    def __eq__(self, other):
        return isinstance(other, BranchVector) and self.parts == other.parts

    def __hash__(self):
        return hash(tuple(frozenset(p.items()) for p in self.parts))

    def __repr__(self):
        def fmt(p):
            if not p:
                return "0"
            return " + ".join(f"{c}*t^{e}" for e, c in sorted(p.items()))

        return "(" + ", ".join(fmt(p) for p in self.parts) + ")"
