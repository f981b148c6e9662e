import random

import pytest

from goodsemi.arith import (
    conductor_ideal,
    decompose,
    difference,
    ideal_sum,
    localize,
    maximal_ideals,
    product,
    projection,
    shift,
    upper_truncation,
)
from goodsemi.errors import NotMaximalIdeal
from goodsemi.points import Box, add, neg, sub, unit
from goodsemi.rep import GoodSemigroup, check_axioms, is_subset, normalize

from conftest import two_branch_large_semigroup


def brute_difference(E, F):
    """Independent oracle: scan candidates over a doubled box and test
    against every member of F in a doubled window."""
    lo = sub(E.mu, F.gamma)
    hi = sub(E.gamma, F.mu)
    width = tuple(h - l + 1 for l, h in zip(lo, hi))
    big_lo = sub(lo, width)
    big_hi = add(hi, width)
    f_hi = add(F.gamma, tuple(2 * w for w in width))
    f_members = list(F.members_within(F.mu, f_hi))
    out = []
    for a in Box(big_lo, big_hi):
        if all(E.contains(add(a, f)) for f in f_members):
            out.append(a)
    return normalize(out, hi, window_hi=big_hi)


def test_shift_identity_and_mu():
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    assert shift((0,), S) == S
    M = S.maximal_ideal()
    moved = shift(neg(M.mu), M)
    assert moved.mu == (0,)
    assert moved.gamma == sub(M.gamma, M.mu)


def test_shift_conductor_bookkeeping():
    S = GoodSemigroup.numerical(2, 7)
    E = upper_truncation(S, (2,))
    moved = shift(sub(S.gamma, E.gamma), E)
    assert moved.gamma == S.gamma


def test_sum_with_semigroup_is_identity():
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    M = S.maximal_ideal()
    assert ideal_sum(M, S) == M
    assert ideal_sum(S, S) == S


def test_sum_mu_adds():
    S = GoodSemigroup.from_members([(0, 0), (3, 1)], (3, 1))
    E = upper_truncation(S, (1, 1))
    F = upper_truncation(S, (4, 1))
    total = ideal_sum(E, F)
    assert total.mu == add(E.mu, F.mu)


def test_sum_can_fail_compensation():
    I = normalize([(2, 1), (2, 2), (3, 1), (5, 2)], (5, 2))
    J = normalize([(3, 1), (4, 2)], (4, 2))
    total = ideal_sum(I, J)
    assert total.members() == ((5, 2), (5, 3), (6, 2), (6, 3), (7, 3))
    assert check_axioms(total).e2 == ((6, 2), (6, 3), 0)


def test_sum_commutes_as_sets():
    I = normalize([(2, 1), (2, 2), (3, 1), (5, 2)], (5, 2))
    J = normalize([(3, 1), (4, 2)], (4, 2))
    assert ideal_sum(I, J) == ideal_sum(J, I)
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    M = S.maximal_ideal()
    T = upper_truncation(S, (11,))
    assert ideal_sum(M, T) == ideal_sum(T, M)


def test_difference_with_semigroup_is_identity():
    for S in (GoodSemigroup.numerical(4, 6, 11, 13), GoodSemigroup.numerical(2, 7)):
        M = S.maximal_ideal()
        assert difference(M, S) == M
        assert difference(S, S) == S


def test_difference_examples():
    G = GoodSemigroup.numerical(4, 6, 11, 13)
    M = G.maximal_ideal()
    D = difference(M, M)
    assert D == GoodSemigroup.numerical(2, 7)

    S = GoodSemigroup.numerical(2, 7)
    DD = difference(S.maximal_ideal(), S.maximal_ideal())
    assert DD == GoodSemigroup.numerical(2, 5)
    assert DD == brute_difference(S.maximal_ideal(), S.maximal_ideal())


def test_difference_conductor_formula(small_corpus):
    rng = random.Random(3)
    for S in rng.sample(small_corpus, 12):
        M = S.maximal_ideal()
        for E, F in ((S, M), (M, M), (M, S)):
            D = difference(E, F)
            assert D.gamma == sub(E.gamma, F.mu)


def test_difference_triple_identities(small_corpus):
    rng = random.Random(5)
    for S in rng.sample(small_corpus, 6):
        M = S.maximal_ideal()
        E, F, G = S, M, upper_truncation(S, (1,))
        left = difference(difference(E, F), G)
        mid = difference(E, ideal_sum(F, G))
        right = difference(difference(E, G), F)
        assert left == mid == right


def test_difference_shift_identities():
    S = GoodSemigroup.numerical(3, 4)
    M = S.maximal_ideal()
    a = (2,)
    assert difference(shift(a, S), M) == shift(a, difference(S, M))
    assert difference(S, shift(neg(a), M)) == shift(a, difference(S, M))


def test_difference_monotonicity():
    S = GoodSemigroup.numerical(2, 7)
    Sp = GoodSemigroup.numerical(2, 5)
    M = S.maximal_ideal()
    Mp = Sp.maximal_ideal()
    assert is_subset(difference(S, Mp), difference(S, M))
    assert is_subset(difference(S, M), difference(Sp, M))


def test_difference_brute_force_two_branch():
    G = two_branch_large_semigroup()
    M = G.maximal_ideal()
    assert difference(M, M) == brute_difference(M, M)
    assert difference(G, M) == brute_difference(G, M)


def test_punctured_difference_matches_truncation_rule(small_corpus):
    # S - M = M - M for local semigroups away from the full cone
    for S in small_corpus[:20]:
        if S.gamma == (0,):
            continue
        M = S.maximal_ideal()
        assert difference(S, M) == difference(M, M)


def test_conductor_ideal():
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    C = conductor_ideal(S)
    assert C.mu == (10,) and C.contains((17,)) and not C.contains((9,))
    assert C == difference(S, GoodSemigroup.ambient(1))
    assert conductor_ideal(GoodSemigroup.ambient(3)) == GoodSemigroup.ambient(3)


def test_upper_truncation_examples():
    S = GoodSemigroup.numerical(2, 3)
    assert upper_truncation(S, (0,)) == S
    assert upper_truncation(S, S.gamma) == conductor_ideal(S)
    M = upper_truncation(S, (1,))
    assert M.members() == ((2,),)
    assert M == S.maximal_ideal()


def test_projection_examples():
    S = GoodSemigroup.from_members([(0, 0), (3, 1)], (3, 1))
    P = projection(S, [0])
    assert P == GoodSemigroup.numerical(3, 4, 5)
    assert projection(S, [0, 1]) == S
    S1 = GoodSemigroup.numerical(2, 3)
    S2 = GoodSemigroup.numerical(3, 4)
    both = product([S1, S2])
    assert projection(both, [0]) == S1
    assert projection(both, [1]) == S2


def test_maximal_ideals_local_and_product():
    local = GoodSemigroup.two_branch_diagonal(5)
    (M,) = maximal_ideals(local)
    assert M == local.maximal_ideal()

    both = GoodSemigroup.checked(
        product([GoodSemigroup.numerical(2, 3), GoodSemigroup.numerical(3, 4)])
    )
    Ms = maximal_ideals(both)
    assert len(Ms) == 2
    assert maximal_ideals(GoodSemigroup.ambient(1))[0].mu == (1,)


def test_localize_examples():
    S1 = GoodSemigroup.numerical(2, 3)
    S2 = GoodSemigroup.numerical(3, 4)
    both = GoodSemigroup.checked(product([S1, S2]))
    M1 = upper_truncation(both, unit(2, 0))
    assert localize(both, M1, S=both) == S1
    local = GoodSemigroup.two_branch_diagonal(3)
    assert localize(local, local.maximal_ideal(), S=local) == local
    amb = GoodSemigroup.ambient(2)
    assert localize(amb, M1, S=both) == GoodSemigroup.ambient(1)


def test_localize_rejects_non_maximal():
    S = GoodSemigroup.numerical(2, 3)
    with pytest.raises(NotMaximalIdeal):
        localize(S, upper_truncation(S, (5,)), S=S)


def test_decompose_roundtrip():
    S1 = GoodSemigroup.numerical(2, 3)
    S2 = GoodSemigroup.numerical(3, 4)
    both = GoodSemigroup.checked(product([S1, S2]))
    result = decompose(both, both)
    comps = dict(result.components)
    assert comps[(0,)] == S1 and comps[(1,)] == S2
    assert result.recombined() == both

    local = GoodSemigroup.two_branch_diagonal(4)
    (only,) = decompose(local, local).components
    assert only[1] == local

    amb3 = GoodSemigroup.ambient(3)
    res = decompose(amb3, amb3)
    assert len(res.components) == 3
    assert all(comp == GoodSemigroup.ambient(1) for _, comp in res.components)


def test_decompose_ideal_over_product():
    S1 = GoodSemigroup.numerical(2, 3)
    S2 = GoodSemigroup.numerical(3, 4)
    both = GoodSemigroup.checked(product([S1, S2]))
    E = product([S1.maximal_ideal(), upper_truncation(S2, (4,))])
    result = decompose(E, both)
    comps = dict(result.components)
    assert comps[(0,)] == S1.maximal_ideal()
    assert comps[(1,)] == upper_truncation(S2, (4,))


def test_conductor_ideal_translation_equivariance():
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    for a in ((3,), (-2,)):
        assert conductor_ideal(shift(a, S)) == shift(a, conductor_ideal(S))
