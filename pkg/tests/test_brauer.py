import itertools
import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngpowers import oracle
from youngpowers.brauer import (
    count_stable_multisets,
    count_stable_sets,
    dim_brauer_ext_power,
    dim_brauer_perm,
    dim_brauer_sym_power,
    ext_power_split,
    m_values,
    sym_power_split,
)
from youngpowers.errors import DomainError
from youngpowers.partitions import Partition, partitions_of
from youngpowers.tabloids import GeneratedPSubgroup, dim_permutation_module, standard_subgroups


def trivial(n, p=2):
    return GeneratedPSubgroup([], p, n)


def test_perm_examples():
    assert dim_brauer_perm((3, 2), standard_subgroups(5, 3, "F", 1)) == 1
    assert dim_brauer_perm((2, 1, 1), trivial(4)) == 12
    assert dim_brauer_perm((1, 1, 1), GeneratedPSubgroup(["(1,2)"], 2, 3)) == 0


def test_sym_power_examples():
    E1 = standard_subgroups(5, 3, "E", 1)
    # one fixed tabloid and three regular orbits of size 3: only the fixed pair survives at a = 2
    assert dim_brauer_sym_power((3, 2), 2, E1) == 1
    assert dim_brauer_sym_power((3, 2), 2, E1) == oracle.scan_stable_multisets((3, 2), 2, E1)
    assert dim_brauer_sym_power((3, 2), 3, E1) == oracle.scan_stable_multisets((3, 2), 3, E1) == 4
    P = GeneratedPSubgroup(["(1,2)"], 2, 4)
    fixed, moved = sym_power_split((2, 1, 1), 2, P)
    assert fixed + moved == oracle.scan_stable_multisets((2, 1, 1), 2, P)
    assert dim_brauer_sym_power((2, 1, 1), 3, trivial(4)) == math.comb(12 + 2, 3)


def test_ext_power_examples():
    F1 = standard_subgroups(5, 3, "F", 1)
    assert dim_brauer_ext_power((3, 2), 8, F1) == 0
    P = GeneratedPSubgroup(["(1,2)"], 2, 4)
    assert dim_brauer_ext_power((2, 2), 2, P) == oracle.scan_stable_sets((2, 2), 2, P) > 0
    assert dim_brauer_ext_power((2, 1, 1), 5, trivial(4)) == math.comb(12, 5)
    assert sum(ext_power_split((3, 2), 3, F1)) == oracle.scan_stable_sets((3, 2), 3, F1)


def test_ext_power_range():
    with pytest.raises(DomainError):
        dim_brauer_ext_power((2, 1), 4, trivial(3))


def test_m_values_examples():
    assert m_values((3, 2), 3) == [(1, 9)]
    assert m_values((4,), 2) == [(1, 0), (1, 0)]
    assert m_values((2, 1, 1), 2) == [(2, 10), (0, 12)]
    with pytest.raises(DomainError):
        m_values((1, 1), 3)


sizes = st.dictionaries(st.integers(1, 4), st.integers(1, 3), min_size=1, max_size=3)


@given(sizes, st.integers(0, 8))
def test_coefficient_counts_match_direct_enumeration(orbit_sizes, a):
    orbits = [s for s, k in orbit_sizes.items() for _ in range(k)]
    multisets = sum(
        1
        for counts in itertools.product(range(a + 1), repeat=len(orbits))
        if sum(c * s for c, s in zip(counts, orbits)) == a
    )
    subsets = sum(
        1 for picks in itertools.product((0, 1), repeat=len(orbits)) if sum(c * s for c, s in zip(picks, orbits)) == a
    )
    assert count_stable_multisets(Counter(orbit_sizes), a) == multisets
    assert count_stable_sets(Counter(orbit_sizes), a) == subsets


def _elementary_abelians(n, p):
    for rank in oracle.elementary_abelians(n, p):
        for generators in rank:
            yield GeneratedPSubgroup.from_raw(generators, p, n)


@pytest.mark.parametrize("p", [2, 3])
def test_formula_matches_exhaustive_scan(p):
    for n in range(p, 6):
        for l in partitions_of(n):
            d = dim_permutation_module(l)
            if d > 12:
                continue
            for P in _elementary_abelians(n, p):
                for a in range(2, 5):
                    assert dim_brauer_sym_power(l, a, P) == oracle.scan_stable_multisets(l, a, P)
                    if a <= d:
                        assert dim_brauer_ext_power(l, a, P) == oracle.scan_stable_sets(l, a, P)


@pytest.mark.parametrize("p", [2, 3])
def test_ext_nonzero_implies_sym_nonzero(p):
    for n in range(2, 7):
        for l in partitions_of(n):
            d = dim_permutation_module(l)
            for E in _elementary_abelians(n, p):
                for a in range(2, min(4, d) + 1):
                    if dim_brauer_ext_power(l, a, E) > 0:
                        assert dim_brauer_sym_power(l, a, E) > 0


def test_vanishing_passes_to_overgroups():
    chains = [
        ["(1,2)", "(1,2)(3,4)", "(1,3)(2,4)"],
        ["(1,2)", "(3,4)", "(5,6)"],
        ["(1,2,3)", "(4,5,6)"],
    ]
    for chain in chains:
        p = 3 if "(1,2,3)" in chain else 2
        for l in partitions_of(6):
            previous = None
            for k in range(1, len(chain) + 1):
                P = GeneratedPSubgroup(chain[:k], p, 6)
                value = dim_brauer_perm(l, P)
                if previous == 0:
                    assert value == 0
                previous = value


def test_trivial_subgroup_gives_full_dimensions():
    l = Partition((3, 1, 1))
    d = dim_permutation_module(l)
    assert dim_brauer_sym_power(l, 2, trivial(5)) == d * (d + 1) // 2
    assert dim_brauer_ext_power(l, 2, trivial(5)) == d * (d - 1) // 2
