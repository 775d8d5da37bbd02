import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import partitions, primes
from youngpowers.errors import DomainError
from youngpowers.partitions import (
    Composition,
    Partition,
    add,
    digits,
    dominance_leq,
    format_parts,
    is_p_restricted,
    padic_expansion,
    parse_composition,
    parse_partition,
    partitions_of,
    qr_split,
    rank_young,
    rearrange,
    s_lambda,
    scale,
    union,
)
from youngpowers.young_modules import donkin_test, is_scott_partition


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((1, 1, 1, 1), (2, 1, 1), True),
        ((2, 2), (3, 1), True),
        ((3, 1), (2, 2), False),
        ((2,), (1, 1), False),
    ],
)
def test_dominance_examples(a, b, expected):
    assert dominance_leq(Partition(a), Partition(b)) is expected


def test_dominance_rejects_different_sizes():
    with pytest.raises(DomainError):
        dominance_leq(Partition((2,)), Partition((1,)))


def test_dominance_is_a_partial_order():
    for n in range(1, 11):
        ps = list(partitions_of(n))
        leq = {(a, b): dominance_leq(a, b) for a in ps for b in ps}
        for a in ps:
            assert leq[a, a]
        for a, b in itertools.product(ps, repeat=2):
            if a != b:
                assert not (leq[a, b] and leq[b, a])
        for a, b, c in itertools.product(ps, repeat=3):
            if leq[a, b] and leq[b, c]:
                assert leq[a, c]


@pytest.mark.parametrize(
    "l, p, layers",
    [
        ((3, 1), 2, [(1, 1), (1,)]),
        ((4, 4), 2, [(), (), (1, 1)]),
        ((1,), 3, [(1,)]),
        ((1,), 2, [(1,)]),
    ],
)
def test_padic_expansion_examples(l, p, layers):
    assert padic_expansion(Partition(l), p).layers == tuple(Partition(x) for x in layers)


def test_padic_layer_beyond_top_is_empty():
    assert padic_expansion(Partition((3, 1)), 2)[5] == ()


def test_padic_expansion_rejects_empty():
    with pytest.raises(DomainError):
        padic_expansion(Partition(), 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_padic_round_trip_exhaustive(p):
    for n in range(1, 31):
        for l in partitions_of(n):
            expansion = padic_expansion(l, p)
            assert expansion.reconstruct() == l
            assert all(is_p_restricted(layer, p) for layer in expansion.layers)
            assert expansion.layers[-1]


@pytest.mark.parametrize("p", [2, 3])
def test_padic_expansion_is_unique(p):
    """Every sequence of p-restricted layers reconstructs a different partition."""
    restricted = {
        size: [l for l in partitions_of(size) if is_p_restricted(l, p)] for size in range(13)
    }

    def sequences(n, level):
        # layers from ``level`` upward whose weighted sizes add up to n
        if n == 0:
            yield ()
            return
        unit = p**level
        if unit > n:
            return
        for size in range(0, n // unit + 1):
            for layer in restricted[size]:
                for rest in sequences(n - size * unit, level + 1):
                    if size or rest:
                        yield (layer,) + rest

    for n in range(1, 13):
        images = []
        for layers in sequences(n, 0):
            total = Composition()
            for i, layer in enumerate(layers):
                total = add(total, scale(p**i, layer))
            images.append(rearrange(total))
        assert len(images) == len(set(images)) == len(list(partitions_of(n)))


@pytest.mark.parametrize(
    "l, p, q, r",
    [
        ((5, 4, 2), 3, (3, 3, 0), (2, 1, 2)),
        ((3, 2), 3, (3, 0), (0, 2)),
        ((2, 2), 2, (2, 2), (0, 0)),
        ((5, 5), 5, (5, 5), (0, 0)),
    ],
)
def test_qr_split_examples(l, p, q, r):
    assert qr_split(Partition(l), p) == (Composition(q), Composition(r))


@given(partitions(max_n=20), primes)
def test_qr_split_sizes(l, p):
    q, r = qr_split(l, p)
    assert add(q, r) == l
    assert q.n == p * rank_young(l, p)


@pytest.mark.parametrize("l, p, rank", [((5, 4, 2), 3, 2), ((1, 1, 1, 1), 3, 0), ((2, 2), 2, 2)])
def test_rank_young(l, p, rank):
    assert rank_young(l, p) == rank


@pytest.mark.parametrize(
    "l, p, expected", [((5, 3, 3), 3, (8, 3)), ((2, 1, 1), 2, (3, 1)), ((1,), 2, (1,)), ((1,), 5, (1,))]
)
def test_s_lambda_examples(l, p, expected):
    assert s_lambda(Partition(l), p) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_s_lambda_is_a_scott_summand(p):
    for n in range(1, 9):
        for l in partitions_of(n):
            mu = s_lambda(l, p)
            assert mu.n == n
            assert is_scott_partition(mu, p)
            assert donkin_test(mu, l, p)


def test_composition_helpers():
    assert union((5, 3, 0), (3,)) == (5, 3, 3)
    assert rearrange((2, 0, 3)) == (3, 2)
    assert add((3, 1), (2,)) == (5, 1)
    assert scale(3, (1, 0, 2)) == (3, 0, 6)
    assert union((), (2, 1)) == (2, 1)
    assert add((), (2, 1)) == (2, 1)


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))
    with pytest.raises(DomainError):
        Composition((1, -1))
    assert Composition((2, 0, 1)).n == 3


def test_digits_least_significant_first():
    assert digits(6, 2) == [0, 1, 1]
    assert digits(0, 3) == []


@pytest.mark.parametrize(
    "text, parts",
    [("5,4,2", (5, 4, 2)), ("(4,2^2)", (4, 2, 2)), ("∅", ()), ("", ()), (" (2^4) ", (2, 2, 2, 2))],
)
def test_parse_partition(text, parts):
    assert parse_partition(text) == parts


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse_composition("3,x")
    with pytest.raises(DomainError):
        parse_partition("1,2")


@given(partitions(max_n=15))
def test_format_parse_round_trip(l):
    assert parse_partition(format_parts(l)) == l
    assert parse_partition(format_parts(l, exponential=False)) == l


def test_format_examples():
    assert format_parts((4, 2, 2)) == "(4,2^2)"
    assert format_parts(()) == "∅"
    assert str(Partition((2, 2, 2, 2))) == "(2^4)"


def test_partitions_of_counts():
    assert [len(list(partitions_of(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions_of(3)) == [(3,), (2, 1), (1, 1, 1)]


@given(st.integers(1, 30), primes)
def test_one_part_expansion_matches_digits(n, p):
    layers = padic_expansion(Partition((n,)), p).layers
    assert [sum(layer) for layer in layers] == digits(n, p)
