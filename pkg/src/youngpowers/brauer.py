"""Dimensions of Brauer quotients of M^lambda and of its symmetric and exterior powers.

Each module here has a basis permuted by any p-subgroup P (tabloids, and
multisets or sets of tabloids), so its Brauer quotient at P has dimension
equal to the number of P-fixed basis elements.  A P-stable multiset is a
multiset of whole P-orbits, which reduces the count to a coefficient
extraction over the orbit sizes.
"""

from __future__ import annotations

import functools
import math
from collections import Counter

from .errors import DomainError
from .partitions import Partition, check_prime
from .tabloids import GeneratedPSubgroup, Raw, dim_permutation_module, fixed_tabloids, standard_subgroups, tabloid_space


@functools.lru_cache(maxsize=4096)
def _orbit_sizes(shape: tuple[int, ...], generators: tuple[Raw, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tabloid_space(shape).orbit_sizes(generators).items()))


def tabloid_orbit_sizes(l: Partition, P: GeneratedPSubgroup) -> Counter:
    """``Counter({orbit size: number of P-orbits on tabloids of that size})``."""
    l = Partition(l)
    if l.n != P.degree:
        raise DomainError(f"partition of {l.n} against a subgroup of S_{P.degree}")
    return Counter(dict(_orbit_sizes(tuple(l), P.raw_generators)))


def count_stable_multisets(orbit_sizes: Counter, a: int) -> int:
    """Coefficient of x^a in the product over orbits of 1 / (1 - x^size)."""
    coefficients = [1] + [0] * a
    for size, how_many in orbit_sizes.items():
        for _ in range(how_many):
            for k in range(size, a + 1):
                coefficients[k] += coefficients[k - size]
    return coefficients[a]


def count_stable_sets(orbit_sizes: Counter, a: int) -> int:
    """Coefficient of x^a in the product over orbits of (1 + x^size)."""
    coefficients = [1] + [0] * a
    for size, how_many in orbit_sizes.items():
        for _ in range(how_many):
            for k in range(a, size - 1, -1):
                coefficients[k] += coefficients[k - size]
    return coefficients[a]


def dim_brauer_perm(l: Partition, P: GeneratedPSubgroup) -> int:
    return fixed_tabloids(Partition(l), P)[0]


def sym_power_split(l: Partition, a: int, P: GeneratedPSubgroup) -> tuple[int, int]:
    """Return ``(fixed, moved)``: stable multisets inside the fixed tabloids, and the rest."""
    if a < 0:
        raise DomainError(f"power a must be nonnegative, got {a}")
    sizes = tabloid_orbit_sizes(l, P)
    f = sizes.get(1, 0)
    fixed = math.comb(f + a - 1, a) if f else int(a == 0)
    return fixed, count_stable_multisets(sizes, a) - fixed


def ext_power_split(l: Partition, a: int, P: GeneratedPSubgroup) -> tuple[int, int]:
    """Return ``(fixed, moved)`` for stable ``a``-subsets of tabloids."""
    d = dim_permutation_module(l)
    if not 0 <= a <= d:
        raise DomainError(f"exterior power a = {a} must lie in 0..dim M^lambda = {d}")
    sizes = tabloid_orbit_sizes(l, P)
    fixed = math.comb(sizes.get(1, 0), a)
    return fixed, count_stable_sets(sizes, a) - fixed


def dim_brauer_sym_power(l: Partition, a: int, P: GeneratedPSubgroup) -> int:
    return sum(sym_power_split(l, a, P))


def dim_brauer_ext_power(l: Partition, a: int, P: GeneratedPSubgroup) -> int:
    return sum(ext_power_split(l, a, P))


def m_values(l: Partition, p: int) -> list[tuple[int, int]]:
    """``(fixed, moved)`` tabloid counts under the cyclic groups ``F_1, F_2, ...``."""
    check_prime(p)
    l = Partition(l)
    if l.n < p:
        raise DomainError(f"m-values need n >= p, got n = {l.n}, p = {p}")
    d = dim_permutation_module(l)
    out = []
    for i in range(1, l.n // p + 1):
        m = dim_brauer_perm(l, standard_subgroups(l.n, p, "F", i))
        out.append((m, d - m))
    return out
