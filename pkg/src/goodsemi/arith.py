"""Arithmetic of semigroup ideals: translation, sums, differences,
conductor ideals, truncations, projections, localization and the
semilocal decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMaximalIdeal
from .points import Box, add, join, leq, meet, sub, unit, zero
from .rep import SemigroupIdealRep, from_box_table, normalize


def shift(alpha, rep):
    """Translate every member by alpha.  Axiom status is unchanged."""
    alpha = tuple(alpha)
    mu = add(rep.mu, alpha)
    gamma = add(rep.gamma, alpha)
    moved = tuple(add(p, alpha) for p in rep.members())
    return SemigroupIdealRep(mu, gamma, rep._table, moved)


def ideal_sum(E, F):
    """Pointwise sums of members, enumerated up to gamma_E + gamma_F.

    That corner is clamp-consistent for the sum: along any axis ray the
    rows of E and F are constant beyond their own conductors, so every
    row of the sum stabilizes before it.  (The smaller corner
    gamma_E + mu_F bounds the cone but can misrepresent rows that die
    later.)  Normalization then shrinks to the minimal faithful corner.
    The result is only a candidate: run check_axioms before trusting
    closure properties.
    """
    hi = add(E.gamma, F.gamma)
    out = set()
    e_hi = sub(hi, F.mu)
    f_hi = sub(hi, E.mu)
    f_members = list(F.members_within(F.mu, f_hi))
    for e in E.members_within(E.mu, e_hi):
        for f in f_members:
            p = add(e, f)
            if leq(p, hi):
                out.add(p)
    return normalize(out, hi, window_hi=hi)


def difference(E, F):
    """The ideal quotient {a : a + F inside E}.

    Candidates range over [mu_E - gamma_F, gamma_E - mu_F]; for each
    candidate only members of F up to delta = join(gamma_F, gamma_E - a)
    need testing, since higher coordinates of f cannot change the
    clamped membership of a + f.
    """
    lo = sub(E.mu, F.gamma)
    hi = sub(E.gamma, F.mu)
    contains_E = E.contains
    out = []
    for a in Box(meet(lo, hi), hi):
        delta = join(F.gamma, sub(E.gamma, a))
        ok = True
        for f in F.members_within(F.mu, delta):
            if not contains_E(add(a, f)):
                ok = False
                break
        if ok:
            out.append(a)
    return normalize(out, hi)


def conductor_ideal(E):
    """gamma_E + NN^s, the largest cone inside E."""
    g = E.gamma
    box = Box(g, g)
    return SemigroupIdealRep(g, g, b"\x01", (g,))


def upper_truncation(E, alpha):
    """Members of E that dominate alpha."""
    alpha = tuple(alpha)
    lo = join(E.mu, alpha)
    hi = join(E.gamma, alpha)
    members = list(E.members_within(lo, hi))
    return normalize(members, hi)


def projection(E, coords):
    """Image of E under projection to the given branch indices."""
    coords = tuple(sorted(set(coords)))
    if not coords:
        raise ValueError("projection needs a non-empty coordinate set")
    if any(c < 0 or c >= E.branches for c in coords):
        raise ValueError(f"coordinates {coords} out of range")
    members = {tuple(p[c] for c in coords) for p in E.members()}
    gamma = tuple(E.gamma[c] for c in coords)
    return normalize(members, gamma)


def maximal_ideals(S):
    """The distinct ideals among the unit-vector truncations of S."""
    s = S.branches
    found = []
    for i in range(s):
        M = upper_truncation(S, unit(s, i))
        if all(M != other for other in found):
            found.append(M)
    return found


def _zero_coordinate_set(M):
    """Branches whose projection of M contains 0."""
    return frozenset(
        i for i in range(M.branches) if any(p[i] == 0 for p in M.members())
    )


def localize(E, M, S=None):
    """Projection of E away from the branches where M meets zero.

    When S is supplied, M is verified to be one of its maximal ideals.
    """
    if S is not None and all(M != cand for cand in maximal_ideals(S)):
        raise NotMaximalIdeal("localization at a non-maximal ideal")
    dropped = _zero_coordinate_set(M)
    keep = [i for i in range(E.branches) if i not in dropped]
    return projection(E, keep)


def product(reps):
    """Cartesian product of ideals on disjoint branch blocks."""
    reps = list(reps)
    mu = tuple(c for r in reps for c in r.mu)
    gamma = tuple(c for r in reps for c in r.gamma)

    def member(p):
        off = 0
        for r in reps:
            if not r.contains(p[off : off + r.branches]):
                return False
            off += r.branches
        return True

    return from_box_table(mu, gamma, member)


@dataclass(frozen=True)
class DecompositionResult:
    """Localizations of an ideal at the maximal ideals of its semigroup.

    Components are keyed by the retained branch indices; recombining
    them as a cartesian product reproduces the ideal exactly.
    """

    components: tuple  # of (retained branch tuple, SemigroupIdealRep)

    def recombined(self):
        comps = self.components
        flat = sorted(i for keep, _ in comps for i in keep)
        s = len(flat)
        if flat != list(range(s)):
            raise ValueError("component index sets do not partition the branches")
        mu, gamma = [0] * s, [0] * s
        for keep, rep in comps:
            for pos, i in enumerate(keep):
                mu[i] = rep.mu[pos]
                gamma[i] = rep.gamma[pos]

        def member(p):
            return all(
                rep.contains(tuple(p[i] for i in keep)) for keep, rep in comps
            )

        return from_box_table(tuple(mu), tuple(gamma), member)


def decompose(E, S):
    """Split E over the maximal ideals of S (semilocal decomposition)."""
    comps = []
    for M in maximal_ideals(S):
        dropped = _zero_coordinate_set(M)
        keep = tuple(i for i in range(S.branches) if i not in dropped)
        comps.append((keep, projection(E, keep)))
    result = DecompositionResult(tuple(comps))
    if result.recombined() != E:
        raise ValueError(
            "recombined localizations do not reproduce the ideal; "
            "input is not an ideal of a good semigroup"
        )
    return result
