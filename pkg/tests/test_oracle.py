import math

import pytest

from youngpowers.brauer import dim_brauer_ext_power
from youngpowers.config import limits
from youngpowers.errors import DomainError, ResourceCapError
from youngpowers.oracle import (
    build_PM,
    conjugate_groups,
    double_cosets,
    elementary_abelians_max_rank,
    hom_dims_by_orbits,
    orbit_decompose_square,
    symmetric_group,
)
from youngpowers.partitions import Partition, partitions_of
from youngpowers.scott_squares import (
    NatMatrix,
    diagonal_matrix,
    digit_sequences,
    enumerate_M_lambda,
    hom_dims,
    scott_class_key,
)
from youngpowers.tabloids import GeneratedPSubgroup, dim_permutation_module, standard_subgroups
from youngpowers.verification import CHECKS, run_battery

WIDE1 = NatMatrix([[2, 1, 2], [1, 2, 0], [2, 0, 0]])
WIDE2 = NatMatrix([[0, 2, 2], [2, 0, 1], [2, 1, 0]])
SMALL = enumerate_M_lambda(Partition((2, 1, 1)))


def test_symmetric_group_size_and_cap():
    assert len(symmetric_group(5)) == 120
    with limits(oracle_degree=4):
        with pytest.raises(ResourceCapError):
            symmetric_group(5)


def test_double_coset_examples():
    assert double_cosets(Partition((1, 1))) == {NatMatrix([[0, 1], [1, 0]])}
    assert double_cosets(Partition((2, 1, 1))) == set(SMALL)
    assert len(double_cosets(Partition((3, 2)))) == 2


def test_double_cosets_match_enumeration():
    for n in range(2, 8):
        for l in partitions_of(n):
            if len(l) > 1:
                assert double_cosets(l) == set(enumerate_M_lambda(l)), l


def test_orbit_examples():
    assert len(orbit_decompose_square(Partition((2, 1, 1)), "sym", 2)) == 6
    assert len(orbit_decompose_square(Partition((5,)), "sym", 3)) == 1
    assert len(orbit_decompose_square(Partition((2, 2)), "ext", 2)) == 2
    with pytest.raises(DomainError):
        orbit_decompose_square(Partition((3,)), "ext", 2)


@pytest.mark.parametrize("kind", ["sym", "ext"])
def test_orbit_stabilizer_and_dimensions(kind):
    for n in range(2, 7):
        for l in partitions_of(n):
            if len(l) == 1:
                continue
            d = dim_permutation_module(l)
            summands = orbit_decompose_square(l, kind, 2)
            assert all(s.orbit_size * s.stabilizer_order == math.factorial(n) for s in summands)
            expected = d * (d + 1) // 2 if kind == "sym" else d * (d - 1) // 2
            assert sum(s.orbit_size for s in summands) == expected


def test_orbit_hom_dims_agree():
    for n in range(1, 7):
        for l in partitions_of(n):
            for p in (2, 3):
                assert hom_dims_by_orbits(l, p) == hom_dims(l, p), (l, p)


def test_elementary_abelian_rank_examples():
    nonzero = lambda E: dim_brauer_ext_power(Partition((2, 2)), 2, E) > 0
    assert elementary_abelians_max_rank(4, 2, nonzero) == 2
    for n, p in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)]:
        assert elementary_abelians_max_rank(n, p, lambda E: True) == n // p
    vanishing = lambda E: dim_brauer_ext_power(Partition((3, 2)), 8, E) > 0
    assert elementary_abelians_max_rank(5, 3, vanishing) == 0


def test_elementary_abelian_cap():
    with limits(elementary_abelian_degree={2: 3, 3: 3}):
        with pytest.raises(ResourceCapError):
            elementary_abelians_max_rank(8, 2, lambda E: True)


def test_conjugacy_examples():
    E1 = standard_subgroups(4, 2, "E", 1)
    assert conjugate_groups(E1, E1)
    assert not conjugate_groups(E1, GeneratedPSubgroup(["(1,2)(3,4)"], 2, 4))
    assert conjugate_groups(GeneratedPSubgroup(["(1,2)"], 2, 4), GeneratedPSubgroup(["(3,4)"], 2, 4))
    M2, M5 = NatMatrix([[1, 1, 0], [1, 0, 0], [0, 0, 1]]), NatMatrix([[1, 0, 1], [0, 1, 0], [1, 0, 0]])
    diagonal = build_PM(diagonal_matrix((2, 1, 1)), 2)
    assert conjugate_groups(build_PM(M2, 2), diagonal)
    assert conjugate_groups(build_PM(M5, 2), diagonal)


def test_build_examples():
    swap = build_PM(NatMatrix([[0, 1], [1, 0]]), 2)
    assert conjugate_groups(swap, GeneratedPSubgroup(["(1,2)"], 2, 2))
    assert swap.order == 2
    target = GeneratedPSubgroup(["(1,2)", "(3,4)", "(5,6)", "(7,8)", "(1,5)(2,6)(9,10)"], 2, 10)
    assert conjugate_groups(build_PM(WIDE1, 2), target)


def test_diagonal_builds_a_young_sylow():
    for l, p in [((3, 2), 2), ((4, 2), 2), ((3, 3), 3), ((2, 2, 1), 2)]:
        group = build_PM(diagonal_matrix(l), p)
        n = sum(l)
        young_order = math.prod(math.factorial(x) for x in l)
        assert group.order == p ** _valuation(young_order, p)
        assert all(len(o) <= max(l) for o in group.orbits())
        assert group.degree == n


def _valuation(x, p):
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def test_wide_pair_share_t_but_are_not_conjugate():
    # comparing only the total digit counts would wrongly merge these two classes
    assert digit_sequences(WIDE1, 2)[2] == digit_sequences(WIDE2, 2)[2]
    assert scott_class_key(WIDE1, 2) != scott_class_key(WIDE2, 2)
    assert not conjugate_groups(build_PM(WIDE1, 2), build_PM(WIDE2, 2))


def test_keys_agree_with_conjugacy_in_the_small_example():
    matrices = list(SMALL) + [diagonal_matrix((2, 1, 1))]
    for p in (2, 3):
        groups = [build_PM(M, p) for M in matrices]
        for A, GA in zip(matrices, groups):
            for B, GB in zip(matrices, groups):
                assert (scott_class_key(A, p) == scott_class_key(B, p)) == conjugate_groups(GA, GB)


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_verification_battery(name):
    (result,) = run_battery([name])
    assert result.cases > 0
    assert result.passed, result.line()
