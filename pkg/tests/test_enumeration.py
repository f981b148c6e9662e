from goodsemi.duality import is_symmetric
from goodsemi.enumeration import intermediate_good_semigroups, numerical_semigroups
from goodsemi.rep import GoodSemigroup, check_axioms


def test_counts_by_conductor():
    # counts of numerical semigroups with conductor exactly c, c = 0..8
    by_gamma = {}
    for S in numerical_semigroups(8):
        by_gamma[S.gamma[0]] = by_gamma.get(S.gamma[0], 0) + 1
    assert by_gamma == {0: 1, 2: 1, 3: 1, 4: 2, 5: 2, 6: 5, 7: 4, 8: 11}


def test_all_enumerated_are_good_and_distinct():
    corpus = numerical_semigroups(10)
    seen = set()
    for S in corpus:
        assert check_axioms(S, as_semigroup=True).ok
        key = S.members()
        assert key not in seen
        seen.add(key)
    # the trivial one and a known member are present
    assert GoodSemigroup.ambient(1) in corpus
    assert GoodSemigroup.numerical(2, 7) in corpus


def test_tower_members_contain_base():
    from goodsemi.rep import is_subset

    S = GoodSemigroup.numerical(3, 4)
    tower = intermediate_good_semigroups(S)
    assert S in tower
    assert GoodSemigroup.ambient(1) in tower
    for T in tower:
        assert is_subset(S, T)
        assert check_axioms(T, as_semigroup=True).ok


def test_tower_of_two_generated_is_chain():
    S = GoodSemigroup.numerical(2, 11)
    tower = intermediate_good_semigroups(S)
    assert len(tower) == 6
    assert all(is_symmetric(T) for T in tower)


def test_tower_two_branch_diagonals():
    for k in (1, 2, 3):
        S = GoodSemigroup.two_branch_diagonal(k)
        tower = intermediate_good_semigroups(S)
        expected = [GoodSemigroup.ambient(2)] + [
            GoodSemigroup.two_branch_diagonal(j) for j in range(1, k + 1)
        ]
        assert tower == expected
