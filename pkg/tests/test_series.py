import random
from fractions import Fraction

import pytest

from goodsemi.errors import LengthMismatch
from goodsemi.points import INF, meet
from goodsemi.series import BranchVector

from conftest import poly1, poly2


def test_order_and_regularity():
    v = poly2([(3, 1), (5, -2)], [(1, Fraction(1, 2))])
    assert v.order() == (3, 1)
    assert v.is_regular()
    w = poly2([(2, 1)], [])
    assert w.order() == (2, INF)
    assert not w.is_regular()
    assert BranchVector.zero(2).order() == (INF, INF)


def test_arithmetic_basics():
    a = poly1((1, 1), (2, 1))
    b = poly1((1, -1))
    assert (a + b).order() == (2,)
    assert (a - a).is_zero()
    assert (a * b).order() == (2,)
    assert (3 * a).coeff(0, 1) == 3
    assert (-a).coeff(0, 2) == -1


def test_mul_truncation_is_explicit():
    a = poly1((5, 1))
    b = poly1((7, 1))
    prod = a * b
    assert prod.coeff(0, 12) == 1
    assert prod.truncated((12,)).is_zero()


def test_branch_mismatch_raises():
    with pytest.raises(LengthMismatch):
        poly1((1, 1)) + poly2([(1, 1)], [(1, 1)])


def test_order_laws_random():
    rng = random.Random(2)

    def random_vec():
        parts = []
        for _ in range(2):
            terms = {
                rng.randint(0, 6): Fraction(rng.randint(-3, 3))
                for _ in range(rng.randint(1, 4))
            }
            terms[rng.randint(0, 6)] = Fraction(rng.randint(1, 3))
            parts.append(terms)
        return BranchVector(parts)

    for _ in range(200):
        x, y = random_vec(), random_vec()
        ox, oy = x.order(), y.order()
        assert (x * y).order() == tuple(a + b for a, b in zip(ox, oy))
        s = x + y
        if not s.is_zero():
            so = s.order()
            m = meet(ox, oy)
            assert all(a >= b for a, b in zip(so, m))


def test_monomial_and_keys():
    m = BranchVector.monomial(2, 1, 3, coeff=Fraction(2, 5))
    assert m.coeff(1, 3) == Fraction(2, 5)
    assert m.keys() == [(3, 1)]
    assert m.leading_key() == (3, 1)
    v = poly2([(2, 1)], [(1, 1)])
    assert v.leading_key() == (1, 1)  # ordered by (exponent, branch)
