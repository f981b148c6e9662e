import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from goodsemi.series import BranchVector
from goodsemi.curves import AlgebroidCurve, FractionalIdeal
from goodsemi.rep import GoodSemigroup

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def poly1(*terms):
    """One-branch vector from (exponent, coefficient) pairs."""
    return BranchVector([{e: Fraction(c) for e, c in terms}])


def poly2(first, second):
    """Two-branch vector from two lists of (exponent, coefficient) pairs."""
    return BranchVector(
        [
            {e: Fraction(c) for e, c in first},
            {e: Fraction(c) for e, c in second},
        ]
    )


def curve_4_6_11(truncation=None):
    """t^4, t^6 + t^7, t^11 on one branch."""
    return AlgebroidCurve(
        [poly1((4, 1)), poly1((6, 1), (7, 1)), poly1((11, 1))],
        truncation=truncation,
    )


def curve_2_n1(n, truncation=None):
    """t^2, t^(n+1) on one branch (n = 0 collapses to the full line)."""
    return AlgebroidCurve([poly1((2, 1)), poly1((n + 1, 1))], truncation=truncation)


def curve_two_branch_simple():
    """Four generators on two branches; value semigroup {0} + cone(3,1)."""
    return AlgebroidCurve(
        [
            poly2([(4, -1)], [(1, 1)]),
            poly2([(3, -1)], []),
            poly2([], [(1, 1)]),
            poly2([(5, 1)], []),
        ]
    )


def ideals_two_branch_simple(curve):
    I = FractionalIdeal(curve, [poly2([(3, 1)], [(1, 1)]), poly2([(2, 1)], [])])
    J = FractionalIdeal(
        curve,
        [poly2([(3, 1)], [(1, 1)]), poly2([(4, 1)], []), poly2([(5, 1)], [])],
    )
    return I, J


def curve_diagonal(n, truncation=None):
    """(t1, t2), (t1^k, -t2^k) with k = (n+1)/2, odd n."""
    k = (n + 1) // 2
    if truncation is None:
        truncation = max(16, 4 * k)
    return AlgebroidCurve(
        [poly2([(1, 1)], [(1, 1)]), poly2([(k, 1)], [(k, -1)])],
        truncation=truncation,
    )


def curve_two_branch_large(truncation=40):
    """Eleven generators on two branches, conductor (12, 12)."""
    gens = [
        poly2([(7, 1)], [(6, 1)]),
        poly2([(6, 1)], [(7, 1)]),
        poly2([(9, 1)], [(11, 1)]),
        poly2([(10, 1)], [(10, 1)]),
        poly2([(11, 1)], [(9, 1)]),
        poly2([(11, 1)], [(10, 1)]),
        poly2([(12, 1)], [(12, 1)]),
        poly2([(13, 1)], [(13, -1)]),
        poly2([(20, 1)], [(12, 1)]),
        poly2([(16, 1)], [(20, 1)]),
        poly2([(12, 1)], [(20, 1)]),
    ]
    return AlgebroidCurve(gens, truncation=truncation)


def two_branch_large_semigroup():
    """The value semigroup of curve_two_branch_large, entered by hand."""
    members = (
        [(0, 0), (6, 6), (6, 7), (7, 6)]
        + [(x, 9) for x in range(9, 13)]
        + [(9, 10), (10, 10), (11, 10), (9, 11)]
        + [(10, 12)]
        + [(12, 12)]
    )
    return GoodSemigroup.from_members(members, (12, 12))


@pytest.fixture(scope="session")
def small_corpus():
    """A handful of numerical semigroups used across property tests."""
    from goodsemi.enumeration import numerical_semigroups

    return numerical_semigroups(9)
