"""Algebroid curves over exact rationals given by explicit
parametrizations: truncated module spans, value semigroups via the
dimension-drop criterion, colon modules, endomorphism chains, and the
Gorenstein reports."""

from __future__ import annotations

import bisect
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NoStabilization,
    NonLocalPresentation,
    NotGoodSemigroup,
    TruncationTooSmall,
    WindowExceedsTruncation,
)
from .points import Box, leq, zero
from .rep import GoodSemigroup, check_axioms, normalize
from .arith import difference
from .duality import classify_tower, is_stable, is_symmetric
from .enumeration import intermediate_good_semigroups
from .series import BranchVector


class AlgebroidCurve:
    """A local curve presented by generators of its maximal ideal inside
    a product of power-series rings (the unit 1 is implicit)."""

    def __init__(self, generators, truncation=None, margin=5, uniformizers=None, name=None):
        generators = tuple(generators)
        if not generators:
            raise ValueError("a curve needs at least one generator")
        s = generators[0].branches
        for g in generators:
            if g.branches != s:
                raise ValueError("generators have mixed branch counts")
            if g.is_zero():
                raise ValueError("zero generator")
            for b, part in enumerate(g.parts):
                if part and min(part) < 1:
                    raise NonLocalPresentation(
                        f"generator {g!r} has order {min(part)} in branch {b + 1}"
                    )
        for b in range(s):
            if not any(g.parts[b] for g in generators):
                raise ValueError(f"no generator touches branch {b + 1}")
        if margin < 1:
            raise ValueError("margin must be >= 1")
        max_order = max(
            min(part) for g in generators for part in g.parts if part
        )
        if truncation is None:
            truncation = max(4 * max_order, 2 * margin + 2)
        if truncation <= max_order:
            raise TruncationTooSmall(
                f"truncation {truncation} does not see past order {max_order}"
            )
        if uniformizers is None:
            uniformizers = ("t",) if s == 1 else tuple(f"t{b+1}" for b in range(s))
        self.branches = s
        self.generators = generators
        self.truncation = int(truncation)
        self.margin = int(margin)
        self.uniformizers = tuple(uniformizers)
        self.name = name

    def one(self):
        return BranchVector.one(self.branches)

    def maximal_ideal(self):
        return FractionalIdeal(self, self.generators)

    def __repr__(self):
        return (
            f"<curve s={self.branches} gens={len(self.generators)} "
            f"D={self.truncation}>"
        )


class FractionalIdeal:
    """A module presented by generators over the curve's ring."""

    def __init__(self, curve, generators):
        generators = tuple(generators)
        if not generators:
            raise ValueError("an ideal needs at least one generator")
        for g in generators:
            if g.branches != curve.branches:
                raise ValueError("generator branch count differs from the curve")
        if not any(g.is_regular() for g in generators):
            raise ValueError(
                "no regular generator: every given element vanishes on some branch"
            )
        self.curve = curve
        self.generators = generators

    def power(self, n):
        gens = set()
        for combo in itertools.combinations_with_replacement(self.generators, n):
            g = combo[0]
            for h in combo[1:]:
                g = g * h
            gens.add(g)
        return FractionalIdeal(self.curve, sorted(gens, key=repr))


# -- echelon spans --------------------------------------------------------


class _ModuleBuilder:
    """Incremental reduced echelon basis of branch vectors, ordered by
    leading position in (exponent, branch) order."""

    def __init__(self, branches, cut):
        self.branches = branches
        self.cut = tuple(cut)
        self.rows = []  # monic, mutually reduced, sorted by pivot
        self.pivots = []

    def reduce(self, v):
        v = v.truncated(self.cut)
        for pivot, row in zip(self.pivots, self.rows):
            c = v.get(pivot)
            if c:
                v = v - row.scaled(c)
        return v

    def add(self, v):
        v = self.reduce(v)
        lead = v.leading_key()
        if lead is None:
            return False
        v = v.scaled(1 / v.get(lead))
        for i, row in enumerate(self.rows):
            c = row.get(lead)
            if c:
                self.rows[i] = row - v.scaled(c)
        pos = bisect.bisect(self.pivots, lead)
        self.pivots.insert(pos, lead)
        self.rows.insert(pos, v)
        return True

    def module(self, curve):
        return TruncatedModule(curve, self.cut, tuple(self.rows), tuple(self.pivots))


class TruncatedModule:
    """Reduced echelon basis of the image of a module in the product of
    truncated series rings.  Positions with exponent >= cut[branch] are
    untrusted and never stored."""

    def __init__(self, curve, cut, rows, pivots):
        self.curve = curve
        self.cut = tuple(cut)
        self.rows = rows
        self.pivots = pivots

    @property
    def branches(self):
        return self.curve.branches

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        v = v.truncated(self.cut)
        for pivot, row in zip(self.pivots, self.rows):
            c = v.get(pivot)
            if c:
                v = v - row.scaled(c)
        return v

    def contains(self, v):
        return self.reduce(v).is_zero()

    def pivot_exponents(self, branch):
        return sorted(e for e, b in self.pivots if b == branch)

    def value_floor(self):
        """Per-branch minimal order over the module: the smallest
        exponent supported by any basis row on that branch."""
        out = []
        for b in range(self.branches):
            es = [min(row.parts[b]) for row in self.rows if row.parts[b]]
            if not es:
                raise ValueError(f"module has no regular part on branch {b + 1}")
            out.append(min(es))
        return tuple(out)

    def nonpivot_ceiling(self):
        """Per branch: 1 + largest non-pivot exponent below the cut (the
        degree from which every position is a pivot)."""
        floors = self.value_floor()
        out = []
        for b in range(self.branches):
            piv = set(self.pivot_exponents(b))
            nonpiv = [e for e in range(floors[b], self.cut[b]) if e not in piv]
            out.append(max(nonpiv) + 1 if nonpiv else floors[b])
        return tuple(out)

    def integer_rows(self):
        """Rows rescaled to primitive integer vectors (as key->int dicts)."""
        out = []
        for row in self.rows:
            items = [(k, row.get(k)) for k in row.keys()]
            scale = 1
            for _, c in items:
                scale = scale * c.denominator // math.gcd(scale, c.denominator)
            ints = {k: int(c * scale) for k, c in items}
            g = 0
            for x in ints.values():
                g = math.gcd(g, x)
            if g > 1:
                ints = {k: x // g for k, x in ints.items()}
            out.append(ints)
        return out

    # -- value sets -----------------------------------------------------

    def value_set(self, lo, hi):
        """Order vectors realized by the module inside [lo, hi].

        A point belongs to the set exactly when the subspace of elements
        with orders >= alpha drops in dimension in every coordinate
        direction; over an infinite field that certifies an element of
        exact order alpha.
        """
        lo, hi = tuple(lo), tuple(hi)
        if any(h >= c for h, c in zip(hi, self.cut)):
            raise WindowExceedsTruncation(
                f"window top {hi} reaches the truncation cut {self.cut}"
            )
        if not leq(lo, hi):
            return set()
        if self.branches == 1:
            return {
                (e,) for e in self.pivot_exponents(0) if lo[0] <= e <= hi[0]
            }
        if self.branches == 2:
            return self._value_set_2d(lo, hi)
        return self._value_set_generic(lo, hi)

    def _dims_grid_2d(self, lo, hi):
        introws = self.integer_rows()
        n = len(introws)
        floors = []
        for b in range(2):
            es = [e for r in introws for (e, bb) in r if bb == b]
            floors.append(min(es) if es else lo[b])

        def col(b, e):
            return [r.get((e, b), 0) for r in introws]

        ranks = {}
        base = []  # echelon (insertion order) of branch-1 columns
        for e in range(floors[1], lo[1]):
            _ech_add(base, col(1, e))
        for a2 in range(lo[1], hi[1] + 2):
            ech = list(base)
            for e in range(floors[0], lo[0]):
                _ech_add(ech, col(0, e))
            ranks[(lo[0], a2)] = len(ech)
            for a1 in range(lo[0] + 1, hi[0] + 2):
                _ech_add(ech, col(0, a1 - 1))
                ranks[(a1, a2)] = len(ech)
            if a2 <= hi[1]:
                _ech_add(base, col(1, a2))
        return {a: n - r for a, r in ranks.items()}

    def _value_set_2d(self, lo, hi):
        dims = self._dims_grid_2d(lo, hi)
        out = set()
        for a in Box(lo, hi):
            d = dims[a]
            if d > dims[(a[0] + 1, a[1])] and d > dims[(a[0], a[1] + 1)]:
                out.add(a)
        return out

    def _value_set_generic(self, lo, hi):
        introws = self.integer_rows()
        n = len(introws)
        s = self.branches

        def dim_at(alpha):
            ech = []
            for b in range(s):
                es = sorted(
                    {e for r in introws for (e, bb) in r if bb == b and e < alpha[b]}
                )
                for e in es:
                    _ech_add(ech, [r.get((e, b), 0) for r in introws])
            return n - len(ech)

        from functools import lru_cache

        dim = lru_cache(maxsize=None)(dim_at)
        out = set()
        for a in Box(lo, hi):
            d = dim(a)
            if all(
                d > dim(tuple(c + (1 if i == k else 0) for i, c in enumerate(a)))
                for k in range(s)
            ):
                out.add(a)
        return out

    def realize(self, alpha, tries=500):
        """An explicit element of exact order alpha, found by a
        deterministic search through generic combinations."""
        rows = self.rows
        keys = sorted(
            {k for row in rows for k in row.keys() if k[0] < alpha[k[1]]}
        )
        A = [[row.get(k) for row in rows] for k in keys]
        basis = _nullspace(A, len(rows))
        if not basis:
            raise ValueError(f"no module element has order >= {alpha}")
        for k in range(1, tries + 1):
            weights = [Fraction(k) ** j for j in range(len(basis))]
            combo = [
                sum(w * vec[r] for w, vec in zip(weights, basis))
                for r in range(len(rows))
            ]
            v = BranchVector.zero(self.branches)
            for c, row in zip(combo, rows):
                if c:
                    v = v + row.scaled(c)
            if v.order() == tuple(alpha):
                return v
        raise ValueError(f"no combination of order {alpha} found in {tries} tries")

    def sample_orders(self, count, seed):
        """Order vectors of pseudo-random module elements."""
        rng = random.Random(seed)
        rows = self.rows
        out = []
        for _ in range(count):
            v = BranchVector.zero(self.branches)
            while v.is_zero():
                v = BranchVector.zero(self.branches)
                for row in rows:
                    c = rng.randint(-3, 3)
                    if c:
                        v = v + row.scaled(c)
            out.append(v.order())
        return out


def _ech_add(ech, col):
    """Insert a column into an insertion-ordered integer echelon; each
    stored column was zeroed at all earlier leads when it arrived, so a
    single sweep suffices.  Returns True when the rank grew."""
    for lead, base in ech:
        c = col[lead]
        if c:
            bl = base[lead]
            col = [x * bl - y * c for x, y in zip(col, base)]
            g = 0
            for x in col:
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                col = [x // g for x in col]
    for i, x in enumerate(col):
        if x:
            ech.append((i, col))
            return True
    return False


def _nullspace(rows, ncols):
    """Basis of the rational kernel of the given constraint rows."""
    mat = [list(map(Fraction, r)) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -mat[ri][fc]
        basis.append(v)
    return basis


# -- spans ----------------------------------------------------------------


def span_ring(curve):
    """Echelon basis of the ring modulo the truncation: the span of all
    monomials in the generators, including 1.  Terminates because every
    generator has positive order wherever it is nonzero."""
    s = curve.branches
    cut = (curve.truncation,) * s
    builder = _ModuleBuilder(s, cut)
    builder.add(BranchVector.one(s))
    changed = True
    while changed:
        changed = False
        for row in list(builder.rows):
            for g in curve.generators:
                if builder.add(row * g):
                    changed = True
    return builder.module(curve)


def span_ideal(curve, ideal):
    """Echelon basis of the module generated by the ideal's generators.

    Positions are trusted only where products with the ring basis are
    exact: generators reaching below order zero lower the cut."""
    s = curve.branches
    D = curve.truncation
    ring = span_ring(curve)
    cut = []
    for b in range(s):
        degs = [min(g.parts[b]) for g in ideal.generators if g.parts[b]]
        cut.append(D + min(0, min(degs)) if degs else D)
    builder = _ModuleBuilder(s, tuple(cut))
    for g in ideal.generators:
        for row in ring.rows:
            builder.add(row * g)
    return builder.module(curve)


def colon_module(curve, numerator, denominator=None):
    """The module of elements q with q * denominator inside numerator.

    Solves the linear system over the Laurent window; product positions
    are trusted only below cut - maxdeg(generator), which must still
    cover every non-pivot column of the numerator span."""
    if denominator is None:
        denominator = numerator
    s = curve.branches
    D = curve.truncation
    JM = span_ideal(curve, numerator)
    ceil = JM.nonpivot_ceiling()
    floor = JM.value_floor()

    gen_cuts = []
    for g in denominator.generators:
        cuts = []
        for b in range(s):
            part = g.parts[b]
            if not part:
                cuts.append(JM.cut[b])
                continue
            trusted = min(D - max(part), JM.cut[b])
            if trusted < ceil[b]:
                raise TruncationTooSmall(
                    f"trusted positions end at {trusted} on branch {b + 1}, "
                    f"before the span is conductor-complete at {ceil[b]}"
                )
            cuts.append(trusted)
        gen_cuts.append(tuple(cuts))

    lows = []
    for b in range(s):
        orders = [
            min(g.parts[b]) for g in denominator.generators if g.parts[b]
        ]
        lows.append(floor[b] - min(orders))
    unknowns = [
        (e, b) for b in range(s) for e in range(lows[b], D)
    ]
    residuals = []  # per unknown: list over gens of residual vectors
    for e, b in unknowns:
        mono = BranchVector.monomial(s, b, e)
        per_gen = []
        for g, cuts in zip(denominator.generators, gen_cuts):
            per_gen.append(JM.reduce((mono * g).truncated(cuts)))
        residuals.append(per_gen)

    constraint_keys = sorted(
        {
            (gi, k)
            for per_gen in residuals
            for gi, res in enumerate(per_gen)
            for k in res.keys()
        }
    )
    key_index = {gk: i for i, gk in enumerate(constraint_keys)}
    A = [[Fraction(0)] * len(unknowns) for _ in constraint_keys]
    for u, per_gen in enumerate(residuals):
        for gi, res in enumerate(per_gen):
            for k in res.keys():
                A[key_index[(gi, k)]][u] = res.get(k)

    builder = _ModuleBuilder(s, (D,) * s)
    for x in _nullspace(A, len(unknowns)):
        v = BranchVector.zero(s)
        for c, (e, b) in zip(x, unknowns):
            if c:
                v = v + BranchVector.monomial(s, b, e, c)
        builder.add(v)
    return builder.module(curve)


# -- value semigroups ------------------------------------------------------


def values_of_module(module, lo=None):
    """Normalize the dimension-drop value set of a module into a boxed
    ideal, detecting the conductor and enforcing the safety margin."""
    curve = module.curve
    margin = curve.margin
    if lo is None:
        lo = module.value_floor()
    hi = tuple(c - margin for c in module.cut)
    if not leq(lo, hi):
        raise TruncationTooSmall(
            f"window [{lo}, {hi}] is empty at truncation {module.cut}"
        )
    pts = module.value_set(lo, hi)
    if tuple(hi) not in pts:
        raise TruncationTooSmall(
            f"window corner {hi} is not a value: no conductor below it"
        )
    rep = normalize(pts, hi, window_hi=hi)
    if any(g + margin > h for g, h in zip(rep.gamma, hi)):
        raise TruncationTooSmall(
            f"detected conductor {rep.gamma} too close to the window top {hi}"
        )
    return rep


def value_semigroup(curve):
    """The semigroup of order vectors of regular ring elements."""
    rep = values_of_module(span_ring(curve), lo=zero(curve.branches))
    return GoodSemigroup.checked(rep)


def value_semigroup_ideal(curve, ideal):
    """The value set of a fractional ideal; always a good ideal."""
    rep = values_of_module(span_ideal(curve, ideal))
    report = check_axioms(rep)
    if not report.ok:
        raise NotGoodSemigroup(
            "value set of an ideal failed the closure axioms: "
            + "; ".join(report.lines()),
            report=report,
        )
    return rep


def colon_values(curve, numerator, denominator=None, semigroup=False):
    rep = values_of_module(colon_module(curve, numerator, denominator))
    if semigroup:
        return GoodSemigroup.checked(rep)
    report = check_axioms(rep)
    if not report.ok:
        raise NotGoodSemigroup(
            "colon value set failed the closure axioms", report=report
        )
    return rep


# -- chains and reports ----------------------------------------------------


@dataclass(frozen=True)
class BlowupChain:
    steps: tuple  # value semigroups of the endomorphism rings I^n : I^n
    ideal_values: object
    difference_values: object
    ideal_stable: bool


def blowup_chain(curve, ideal, n_budget=10):
    """Value semigroups of the endomorphism rings of the ideal powers,
    up to stabilization; also reports stability of the ideal itself."""
    steps = []
    prev = None
    for n in range(1, n_budget + 1):
        power = ideal.power(n)
        gamma_n = colon_values(curve, power, power, semigroup=True)
        if prev is not None and gamma_n == prev:
            break
        steps.append(gamma_n)
        prev = gamma_n
    else:
        raise NoStabilization(
            f"endomorphism chain did not stabilize within {n_budget} powers"
        )
    ideal_values = value_semigroup_ideal(curve, ideal)
    diff = difference(ideal_values, ideal_values)
    stable = steps[0] == diff and is_stable(ideal_values)
    return BlowupChain(tuple(steps), ideal_values, diff, stable)


@dataclass(frozen=True)
class GorensteinReport:
    """The three testable faces of Gorensteinness of an endomorphism
    ring; the theorem says they agree, the report checks it."""

    ideal_values: object
    endo_values: object
    difference_values: object
    endo_symmetric: bool       # (a) endomorphism ring has symmetric values
    difference_matches: bool   # values of the quotient equal the difference
    difference_symmetric: bool
    ideal_stable: bool         # via the value criterion

    @property
    def condition_a(self):
        return self.endo_symmetric

    @property
    def condition_b(self):
        return self.difference_matches and self.difference_symmetric

    @property
    def condition_c(self):
        return self.ideal_stable and self.difference_symmetric

    @property
    def agree(self):
        return self.condition_a == self.condition_b == self.condition_c

    def lines(self):
        yes = lambda b: "yes" if b else "no"
        return [
            f"(a) endomorphism ring symmetric:      {yes(self.condition_a)}",
            f"(b) difference matches and symmetric: {yes(self.condition_b)}",
            f"(c) ideal stable and symmetric:       {yes(self.condition_c)}",
            f"routes agree:                         {yes(self.agree)}",
        ]


def gorenstein_report(curve, ideal):
    ideal_values = value_semigroup_ideal(curve, ideal)
    endo = colon_values(curve, ideal, ideal, semigroup=True)
    diff = difference(ideal_values, ideal_values)
    diff_report = check_axioms(diff, as_semigroup=True)
    diff_sym = diff_report.ok and is_symmetric(GoodSemigroup.checked(diff))
    matches = endo == diff
    stable = matches and is_stable(ideal_values)
    return GorensteinReport(
        ideal_values=ideal_values,
        endo_values=endo,
        difference_values=diff,
        endo_symmetric=is_symmetric(endo),
        difference_matches=matches,
        difference_symmetric=diff_sym,
        ideal_stable=stable,
    )


@dataclass(frozen=True)
class ExtensionsReport:
    """Do all integral extensions stay Gorenstein?  Three independently
    computed answers that must agree: normal-form shape, symmetry of the
    ring and its maximal-ideal endomorphism ring, and symmetry along the
    whole enumerated tower."""

    semigroup: object
    classification: object
    shape_ok: bool
    ring_and_endo_ok: bool
    tower_ok: bool

    @property
    def agree(self):
        return self.shape_ok == self.ring_and_endo_ok == self.tower_ok

    @property
    def all_gorenstein(self):
        return self.shape_ok and self.agree

    def lines(self):
        yes = lambda b: "yes" if b else "no"
        return [
            f"classification:                 {self.classification.describe()}",
            f"normal form matched:            {yes(self.shape_ok)}",
            f"ring and endomorphism symmetric:{yes(self.ring_and_endo_ok)}",
            f"whole tower symmetric:          {yes(self.tower_ok)}",
            f"routes agree:                   {yes(self.agree)}",
        ]


def extensions_report(curve, node_budget=500_000):
    gamma = value_semigroup(curve)
    classification = classify_tower(gamma)
    endo = colon_values(curve, curve.maximal_ideal(), semigroup=True)
    ring_and_endo = is_symmetric(gamma) and is_symmetric(endo)
    tower = intermediate_good_semigroups(gamma, node_budget=node_budget)
    tower_ok = all(is_symmetric(T) for T in tower)
    report = ExtensionsReport(
        semigroup=gamma,
        classification=classification,
        shape_ok=classification.classified,
        ring_and_endo_ok=ring_and_endo,
        tower_ok=tower_ok,
    )
    if not report.agree:
        raise AssertionError(
            "extension-Gorenstein routes disagree: " + "; ".join(report.lines())
        )
    return report
