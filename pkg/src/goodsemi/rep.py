"""Finite boxed representation of (candidate) semigroup ideals.

An ideal E of ZZ^s that contains a translated cone is stored by its
minimal element ``mu``, its conductor corner ``gamma`` and a dense
boolean table over the box [mu, gamma].  Membership of an arbitrary
point reduces to the table: ``p in E  iff  meet(p, gamma) in E``.  That
clamping rule is exactly what the stored-gamma minimality guarantees,
and it stays meaningful even for candidate sets that fail the closure
axioms (sums and raw differences must be representable before they are
checked).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    InconsistentTruncation,
    NonUniqueMinimum,
    NotGoodSemigroup,
    NotLocal,
)
from .points import Box, add, join, leq, meet, ones, zero


class SemigroupIdealRep:
    """Immutable boxed membership table with clamped extension.

    Construct through :func:`normalize` (or the factories on
    :class:`GoodSemigroup`); the raw constructor trusts its arguments.
    """

    __slots__ = ("mu", "gamma", "_dims", "_table", "_members")

    def __init__(self, mu, gamma, table, members=None):
        self.mu = tuple(mu)
        self.gamma = tuple(gamma)
        self._dims = tuple(h - l + 1 for l, h in zip(self.mu, self.gamma))
        self._table = bytes(table)
        self._members = members

    # -- basic geometry -------------------------------------------------

    @property
    def branches(self):
        return len(self.mu)

    @property
    def tau(self):
        """The corner gamma - 1."""
        return tuple(g - 1 for g in self.gamma)

    def box(self):
        return Box(self.mu, self.gamma)

    # -- membership -----------------------------------------------------

    def contains(self, p):
        """Membership of an arbitrary finite point."""
        idx = 0
        for l, g, d, c in zip(self.mu, self.gamma, self._dims, p):
            if c < l:
                return False
            if c > g:
                c = g
            idx = idx * d + (c - l)
        return self._table[idx] == 1

    def members(self):
        """All members inside the box, lexicographically sorted."""
        if self._members is None:
            table = self._table
            self._members = tuple(
                p for i, p in enumerate(self.box()) if table[i]
            )
        return self._members

    def members_within(self, lo, hi):
        """Members of the clamp-extended set inside the window [lo, hi]."""
        ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
        contains = self.contains
        for p in itertools.product(*ranges):
            if contains(p):
                yield p

    # -- comparisons (set semantics) --------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SemigroupIdealRep):
            return NotImplemented
        if self.branches != other.branches or self.mu != other.mu:
            return False
        if self.gamma == other.gamma:
            return self._table == other._table
        hi = join(self.gamma, other.gamma)
        return all(
            self.contains(p) == other.contains(p) for p in Box(self.mu, hi)
        )

    def __hash__(self):
        return hash((self.mu,))

    def __repr__(self):
        return (
            f"<ideal s={self.branches} mu={self.mu} gamma={self.gamma} "
            f"box_members={len(self.members())}>"
        )


def is_subset(a, b):
    """Set inclusion a <= b of two represented ideals."""
    if a.branches != b.branches:
        return False
    hi = join(a.gamma, b.gamma)
    return all(
        b.contains(p) for p in a.members_within(a.mu, hi)
    )


def normalize(members, claimed_gamma, window_hi=None):
    """Build the boxed representation from explicit membership data.

    ``members`` must list every member inside [min(members), window_hi];
    membership beyond the window is understood via clamping at
    ``claimed_gamma``.  The stored gamma is shrunk to the smallest corner
    that reproduces the given data, which is the conductor whenever the
    set is closed under meets.
    """
    members = set(map(tuple, members))
    if not members:
        raise NonUniqueMinimum("empty member set")
    s = len(claimed_gamma)
    mu = tuple(min(p[i] for p in members) for i in range(s))
    if mu not in members:
        raise NonUniqueMinimum(f"componentwise minimum {mu} is not a member")
    gamma = tuple(claimed_gamma)
    if window_hi is None:
        window_hi = gamma
    window_hi = tuple(window_hi)
    if not leq(gamma, window_hi):
        raise ValueError("window must contain the claimed conductor corner")
    if not leq(mu, gamma):
        raise InconsistentTruncation(
            f"claimed conductor {gamma} below the minimum {mu}"
        )
    if gamma not in members:
        raise InconsistentTruncation(f"conductor corner {gamma} is not a member")
    for p in members:
        if not leq(p, window_hi):
            raise ValueError(f"member {p} outside the window {window_hi}")

    window = Box(mu, window_hi)
    memb = members.__contains__

    if window_hi != gamma:
        for p in window:
            if memb(p) != memb(meet(p, gamma)):
                raise InconsistentTruncation(
                    f"membership at {p} contradicts clamping at {gamma}"
                )

    # Shrink gamma coordinate by coordinate while the clamping rule still
    # reproduces the window data; round-robin until no coordinate moves.
    def consistent(g):
        if g not in members:
            return False
        return all(memb(p) == memb(meet(p, g)) for p in window)

    if s == 1:
        # One branch: gamma is the start of the final run of members.
        g = gamma[0]
        while g > mu[0] and memb((g - 1,)) and all(
            memb((x,)) for x in range(g - 1, window_hi[0] + 1)
        ):
            g -= 1
        # The run condition above is the s = 1 clamp consistency.
        gamma = (g,)
    else:
        changed = True
        while changed:
            changed = False
            for i in range(s):
                while gamma[i] > mu[i]:
                    cand = tuple(
                        c - 1 if k == i else c for k, c in enumerate(gamma)
                    )
                    if consistent(cand):
                        gamma = cand
                        changed = True
                    else:
                        break

    box = Box(mu, gamma)
    table = bytearray(len(box))
    mems = []
    for i, p in enumerate(box):
        if memb(p):
            table[i] = 1
            mems.append(p)
    return SemigroupIdealRep(mu, gamma, table, tuple(mems))


def from_box_table(mu, gamma, member_pred):
    """Internal fast path: build a rep from a predicate on the box,
    trusting minimality and consistency (used by translations)."""
    box = Box(mu, gamma)
    table = bytearray(len(box))
    mems = []
    for i, p in enumerate(box):
        if member_pred(p):
            table[i] = 1
            mems.append(p)
    return SemigroupIdealRep(mu, gamma, table, tuple(mems))


# -- axiom checking -----------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the closure-axiom scan.

    e1 / e2 are None on success, otherwise a replayable witness: for e1 a
    pair (a, b) whose meet is missing, for e2 a triple (a, b, j) with no
    compensating element.  closed / zero_minimal are only set when the
    candidate was checked as a semigroup.
    """

    e0: bool = True
    e1: tuple | None = None
    e2: tuple | None = None
    zero_minimal: bool | None = None
    closed: tuple | None = None

    @property
    def ok(self):
        return (
            self.e0
            and self.e1 is None
            and self.e2 is None
            and self.zero_minimal in (None, True)
            and self.closed is None
        )

    def lines(self):
        out = ["E0: pass" if self.e0 else "E0: FAIL"]
        out.append("E1: pass" if self.e1 is None else f"E1: FAIL at {self.e1}")
        if self.e2 is None:
            out.append("E2: pass")
        else:
            a, b, j = self.e2
            out.append(f"E2: FAIL at alpha={a} beta={b} j={j + 1}")
        if self.zero_minimal is not None:
            out.append(
                "zero-minimal: pass" if self.zero_minimal else "zero-minimal: FAIL"
            )
        if self.closed is not None:
            out.append(f"closure: FAIL at {self.closed}")
        elif self.zero_minimal is not None:
            out.append("closure: pass")
        return out


def _e2_witness_exists(rep, a, b, j):
    """Search a compensating member for the pair (a, b) at coordinate j.

    Candidates live in the window bounded by gamma + 1: any witness can
    be clamped into it without breaking the constraints.
    """
    s = rep.branches
    lo = meet(a, b)
    hi = tuple(g + 1 for g in rep.gamma)
    ranges = []
    for i in range(s):
        if i == j:
            ranges.append(range(lo[i] + 1, max(hi[i], lo[i] + 1) + 1))
        elif a[i] != b[i]:
            ranges.append((lo[i],))
        else:
            ranges.append(range(lo[i], max(hi[i], lo[i]) + 1))
    contains = rep.contains
    return any(contains(p) for p in itertools.product(*ranges))


def check_axioms(rep, as_semigroup=False):
    """Scan the boxed representation for the closure axioms.

    (E0) holds by construction of the representation.  (E1) and (E2) are
    checked on all member pairs of the box; by the clamping rule this
    decides them for the whole represented set.  With as_semigroup also
    checks that 0 is the unique minimal element and that the set is
    closed under addition.
    """
    mems = rep.members()
    contains = rep.contains
    e1 = None
    for a, b in itertools.combinations(mems, 2):
        if not contains(meet(a, b)):
            e1 = (a, b)
            break
    e2 = None
    s = rep.branches
    for ia, a in enumerate(mems):
        for b in mems[ia:]:
            for j in range(s):
                if a[j] == b[j] and not _e2_witness_exists(rep, a, b, j):
                    e2 = (a, b, j)
                    break
            if e2:
                break
        if e2:
            break
    zero_minimal = None
    closed = None
    if as_semigroup:
        zero_minimal = rep.mu == zero(s) and contains(zero(s))
        for a in mems:
            for b in mems:
                if not contains(add(a, b)):
                    closed = (a, b)
                    break
            if closed:
                break
    return AxiomReport(True, e1, e2, zero_minimal, closed)


def is_ideal_of(rep, semigroup):
    """Whether rep + semigroup stays inside rep (box pairs suffice)."""
    contains = rep.contains
    return all(
        contains(add(e, m))
        for e in rep.members()
        for m in semigroup.members()
    )


# -- good semigroups ----------------------------------------------------


class GoodSemigroup(SemigroupIdealRep):
    """A verified good semigroup: mu = 0, monoid, meet-closed, compensated."""

    __slots__ = ()

    @classmethod
    def checked(cls, rep):
        report = check_axioms(rep, as_semigroup=True)
        if not report.ok:
            raise NotGoodSemigroup(
                "; ".join(report.lines()), report=report
            )
        return cls(rep.mu, rep.gamma, rep._table, rep._members)

    @classmethod
    def from_members(cls, members, claimed_gamma, window_hi=None):
        return cls.checked(normalize(members, claimed_gamma, window_hi))

    @classmethod
    def ambient(cls, branches):
        """NN^branches, the full cone."""
        return cls(zero(branches), zero(branches), b"\x01", (zero(branches),))

    @classmethod
    def numerical(cls, *generators):
        """The numerical semigroup generated by positive integers."""
        import math

        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise ValueError(
                f"generators {gens} are not coprime: no conductor exists"
            )
        step = gens[0]
        bound = 2 * gens[0] * gens[-1] + 1
        reach = bytearray(bound)
        reach[0] = 1
        for g in gens:
            for n in range(g, bound):
                if reach[n - g]:
                    reach[n] = 1
        conductor = None
        for c in range(bound - step):
            if all(reach[c + k] for k in range(step)):
                conductor = c
                break
        if conductor is None:  # cannot happen for coprime generators
            raise ValueError("no conductor found")
        members = [(n,) for n in range(conductor + 1) if reach[n]]
        return cls.checked(normalize(members, (conductor,)))

    @classmethod
    def two_branch_diagonal(cls, k):
        """{0, (1,1), ..., (k-1,k-1)} together with the cone above (k,k)."""
        if k < 0:
            raise ValueError("k must be >= 0")
        members = [(j, j) for j in range(k + 1)]
        return cls.checked(normalize(members, (k, k)))

    def is_local(self):
        """0 is the only member with a zero coordinate.

        Scans points with one coordinate pinned to zero and the others
        up to gamma + 1; clamping reduces any witness into that window.
        """
        s = self.branches
        z = zero(s)
        for i in range(s):
            ranges = [
                (0,) if k == i else range(0, self.gamma[k] + 2) for k in range(s)
            ]
            for p in itertools.product(*ranges):
                if p != z and self.contains(p):
                    return False
        return True

    def maximal_ideal(self):
        """S minus its zero element, for local S."""
        if not self.is_local():
            raise NotLocal("semigroup has more than one maximal ideal")
        s = self.branches
        hi = join(self.gamma, ones(s))
        members = [p for p in self.members_within(ones(s), hi)]
        return normalize(members, hi)


def gaps(semigroup):
    """The finite complement of a good semigroup inside its cone."""
    hi = semigroup.gamma
    return [
        p
        for p in Box(zero(semigroup.branches), hi)
        if not semigroup.contains(p)
    ]
