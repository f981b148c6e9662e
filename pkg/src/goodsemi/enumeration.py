"""Exhaustive enumerations: all numerical semigroups up to a conductor
bound, and all good semigroups between a given one and its cone."""

from __future__ import annotations

import itertools

from .errors import BudgetExceeded
from .points import Box, add, meet, zero
from .rep import GoodSemigroup, check_axioms, normalize


def numerical_semigroups(max_conductor):
    """All numerical semigroups with conductor <= max_conductor.

    Depth-first search over membership of 1..max_conductor-1 with sum
    propagation: a number that is a sum of two smaller members is forced
    in.  Each leaf is a distinct gap set, so no deduplication is needed.
    """
    out = []
    top = max_conductor  # members >= top are unconditional

    def rec(n, members):
        if n == top:
            pts = [(m,) for m in members] + [(top,)]
            out.append(GoodSemigroup.checked(normalize(pts, (top,))))
            return
        forced = any(n - m in members for m in members if 0 < m < n)
        if forced:
            rec(n + 1, members | {n})
        else:
            rec(n + 1, members | {n})
            rec(n + 1, members)

    rec(1, {0})
    # normalize() shrinks the conductor, so equal semigroups cannot both
    # appear: each survives with its own gap set below max_conductor.
    return out


def intermediate_good_semigroups(S, node_budget=500_000):
    """All good semigroups T with S <= T <= NN^s.

    Any such T is determined by its members in [0, gamma_S] together
    with the clamping rule there, so the search branches over the gap
    cells of that box.  Sum and meet closure are propagated both ways
    (forced in, forced out) and pairs with no possible compensator prune
    the branch; leaves get the full axiom check.
    """
    s = S.branches
    g = S.gamma
    box = Box(zero(s), g)
    cells = list(box)
    index = {p: i for i, p in enumerate(cells)}
    IN, OUT, UNDEC = 1, 0, 2
    state = [IN if S.contains(p) else UNDEC for p in cells]
    undecided = [i for i, st in enumerate(state) if st == UNDEC]
    clamp_idx = [index[meet(add(a, b), g)] for a in cells for b in cells]
    meet_idx = [index[meet(a, b)] for a in cells for b in cells]
    n = len(cells)
    nodes = 0
    results = []

    def propagate(st):
        """Returns False on contradiction."""
        changed = True
        while changed:
            changed = False
            ins = [i for i in range(n) if st[i] == IN]
            for ii, i in enumerate(ins):
                base = i * n
                for j in ins[ii:]:
                    for k in (clamp_idx[base + j], meet_idx[base + j]):
                        if st[k] == OUT:
                            return False
                        if st[k] == UNDEC:
                            st[k] = IN
                            changed = True
            if changed:
                continue
            # contrapositive: u cannot be IN if pairing with an IN lands OUT
            for u in range(n):
                if st[u] != UNDEC:
                    continue
                base = u * n
                for i in range(n):
                    if st[i] != IN and i != u:
                        continue
                    if (
                        st[clamp_idx[base + i]] == OUT
                        or st[meet_idx[base + i]] == OUT
                    ):
                        st[u] = OUT
                        changed = True
                        break
        return _compensators_possible(st)

    comp_cache = {}

    def _comp_lists(ai, bi):
        """For a cell pair, one candidate-cell list per shared coordinate;
        candidates are clamped into the box so plain state lookups decide
        them."""
        got = comp_cache.get((ai, bi))
        if got is not None:
            return got
        a, b = cells[ai], cells[bi]
        lists = []
        for j in range(s):
            if a[j] != b[j]:
                continue
            lo = meet(a, b)
            ranges = []
            for i in range(s):
                if i == j:
                    ranges.append(range(lo[i] + 1, g[i] + 2))
                elif a[i] != b[i]:
                    ranges.append((lo[i],))
                else:
                    ranges.append(range(lo[i], g[i] + 2))
            cand = sorted({index[meet(q, g)] for q in itertools.product(*ranges)})
            lists.append(tuple(cand))
        comp_cache[(ai, bi)] = lists = tuple(lists)
        return lists

    def _compensators_possible(st):
        """No member pair may have every compensating cell ruled out."""
        ins = [i for i in range(n) if st[i] == IN]
        for pos, i in enumerate(ins):
            for j2 in ins[pos:]:
                for lst in _comp_lists(i, j2):
                    if all(st[k] == OUT for k in lst):
                        return False
        return True

    def rec(st, pos):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(
                f"tower enumeration exceeded {node_budget} search nodes"
            )
        while pos < len(undecided) and st[undecided[pos]] != UNDEC:
            pos += 1
        if pos == len(undecided):
            members = [cells[i] for i in range(n) if st[i] == IN]
            rep = normalize(members, g, window_hi=g)
            report = check_axioms(rep, as_semigroup=True)
            if report.ok:
                results.append(GoodSemigroup.checked(rep))
            return
        cell = undecided[pos]
        for choice in (IN, OUT):
            trial = st.copy()
            trial[cell] = choice
            if propagate(trial):
                rec(trial, pos + 1)

    st0 = list(state)
    if propagate(st0):
        rec(st0, 0)
    results.sort(key=lambda T: (len(T.members()), T.members()))
    return results
