import pytest

from youngpowers.complexity import complexity_ext_square, complexity_sym_power, complexity_young
from youngpowers.config import limits
from youngpowers.errors import DomainError, ResourceCapError
from youngpowers.partitions import Partition, dominance_leq, partitions_of, rearrange, s_lambda, union
from youngpowers.young_modules import (
    donkin_test,
    is_scott_partition,
    list_young_summands,
    remove_boxes,
    thm_b_ext_partitions,
    thm_b_quantities,
    thm_b_sym_partition,
    thm_c_partitions,
)


def P(*parts):
    return Partition(parts)


def test_donkin_examples():
    assert donkin_test(P(4, 2, 2), P(2, 2, 2, 2), 2)
    assert not donkin_test(P(4, 4), P(2, 2, 2, 2), 2)
    with pytest.raises(DomainError):
        donkin_test(P(2), P(1), 2)


def test_donkin_node_cap():
    with limits(donkin_nodes=1):
        with pytest.raises(ResourceCapError):
            donkin_test(P(4, 2, 2), P(2, 2, 2, 2), 2)


@pytest.mark.parametrize("p", [2, 3])
def test_donkin_self_membership(p):
    for n in range(1, 11):
        for l in partitions_of(n):
            assert donkin_test(l, l, p)


def test_list_young_summands_examples():
    assert list_young_summands(P(2, 2), 2) == {P(2, 2)}
    assert list_young_summands(P(5), 3) == {P(5)}
    assert {P(2, 2, 2, 2), P(4, 2, 2)} <= list_young_summands(P(2, 2, 2, 2), 2)


@pytest.mark.parametrize("p", [2, 3])
def test_young_summands_lie_above_mu(p):
    for n in range(1, 9):
        for mu in partitions_of(n):
            found = list_young_summands(mu, p)
            assert mu in found
            assert all(dominance_leq(mu, nu) for nu in found)


def test_large_prime_gives_every_dominating_label():
    # for p > n the permutation module is semisimple and every nu above mu occurs
    for n in range(1, 8):
        for mu in partitions_of(n):
            above = {nu for nu in partitions_of(n) if dominance_leq(mu, nu)}
            assert list_young_summands(mu, 11) == above


def test_known_two_part_modules_at_two():
    for n in range(2, 10):
        expected = {P(n - 1, 1)} if n % 2 == 0 else {P(n), P(n - 1, 1)}
        assert list_young_summands(P(n - 1, 1), 2) == expected
    assert list_young_summands(P(1, 1), 2) == {P(1, 1)}


def test_scott_partition_examples():
    assert not is_scott_partition(P(4, 2), 2)
    assert is_scott_partition(P(3, 1), 2)
    assert is_scott_partition(P(8, 3), 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_s_lambda_is_scott(p):
    for n in range(1, 13):
        for l in partitions_of(n):
            assert is_scott_partition(s_lambda(l, p), p)


def test_thm_b_quantities_examples():
    q = thm_b_quantities(P(5, 4, 2), 6, 3)
    assert (q.d_la, q.e_la, q.lambda_a, q.r_la_a) == (1, 8, (5, 3, 0), (2, 0, 0))
    q = thm_b_quantities(P(3, 1, 1, 1), 3, 3)
    assert (q.d_la, q.e_la) == (1, 3)
    q = thm_b_quantities(P(5, 4, 2), 5, 3)
    assert q.d_la == 0 and q.lambda_a == P(5, 4, 2)


def test_remove_boxes_takes_from_the_bottom():
    assert remove_boxes((2, 1, 2), 3) == (2, 0, 0)
    with pytest.raises(DomainError):
        remove_boxes((1,), 2)


@pytest.mark.parametrize(
    "l, a, p, mu", [((5, 4, 2), 6, 3, (8, 3)), ((4,), 7, 5, (4,)), ((2, 1, 1), 2, 2, (2, 2))]
)
def test_thm_b_sym_examples(l, a, p, mu):
    assert thm_b_sym_partition(Partition(l), a, p) == mu


@pytest.mark.parametrize("p", [2, 3])
def test_thm_b_sym_summand_has_full_complexity(p):
    for n in range(1, 9):
        for l in partitions_of(n):
            for a in range(2, 7):
                q = thm_b_quantities(l, a, p)
                mu = thm_b_sym_partition(l, a, p)
                host = union(q.lambda_a, (p,) * q.d_la)
                assert donkin_test(mu, host, p), (l, a)
                assert complexity_young(mu, p) == complexity_sym_power(l, a, p), (l, a)


@pytest.mark.parametrize(
    "p, expected",
    [
        (2, {P(2, 2, 2, 2), P(4, 2, 2)}),
        (3, {P(5, 3)}),
        (5, {P(2, 2, 2, 1, 1), P(3, 2, 1, 1, 1)}),
    ],
)
def test_thm_b_ext_examples(p, expected):
    assert thm_b_ext_partitions(P(3, 3, 2), p) == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_thm_b_ext_summands_have_full_complexity(p):
    for n in range(2, 9):
        for l in partitions_of(n):
            if len(l) > 1:
                found = thm_b_ext_partitions(l, p)
                assert found
                assert all(complexity_young(mu, p) == complexity_ext_square(l, p) for mu in found), l


def test_thm_b_ext_rejects_one_row():
    with pytest.raises(DomainError):
        thm_b_ext_partitions(P(4), 2)


def test_thm_c_examples():
    assert thm_c_partitions(P(2, 1, 1), 2) == (P(2, 2), frozenset({P(2, 2)}))
    mu, nus = thm_c_partitions(P(5, 4), 3)
    assert mu == P(3, 3, 3)
    assert nus == {P(3, 3, 3), P(4, 3, 2), P(5, 3, 1), P(6, 3), P(7, 2)}
    with pytest.raises(DomainError):
        thm_c_partitions(P(3, 2), 2)


def test_thm_c_mu_is_q_with_a_p_row():
    for n in range(2, 10):
        for l in partitions_of(n):
            for p in (2, 3):
                residues = rearrange(x % p for x in l)
                if residues == (p - 1, 1):
                    mu, nus = thm_c_partitions(l, p)
                    assert mu.n == n and p in mu and mu in nus
