"""Brute-force cross-checks that share no formulas with the closed-form modules.

Everything here works by enumerating S_n, orbits of tabloid pairs, subgroups
or conjugating permutations directly, so the answers are trustworthy only at
small n.  Sizes are bounded by :data:`youngpowers.config.LIMITS`.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
from collections import Counter
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .config import LIMITS
from .errors import DomainError, ResourceCapError
from .partitions import Composition, Partition, check_prime, digits
from .scott_squares import NatMatrix
from .tabloids import (
    GeneratedPSubgroup,
    Raw,
    Tabloid,
    compose,
    is_power_of,
    raw_cycle_type,
    raw_identity,
    raw_order,
    raw_orbits,
    tabloid_space,
)


def _check_oracle_degree(n: int) -> None:
    if n > LIMITS.oracle_degree:
        raise ResourceCapError(
            f"S_{n} is too large to enumerate (oracle_degree = {LIMITS.oracle_degree})"
        )


@functools.lru_cache(maxsize=8)
def _symmetric_group(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def symmetric_group(n: int) -> np.ndarray:
    """All of S_n as rows of images, ``row[x] = g(x)`` on ``0..n-1``."""
    _check_oracle_degree(n)
    return _symmetric_group(n)


def _row_labels(l: Sequence[int]) -> np.ndarray:
    return np.repeat(np.arange(len(l)), l)


def double_cosets(l: Partition) -> frozenset[NatMatrix]:
    """Intersection matrices ``|row_i ∩ g row_j|`` over all g in S_n, minus the diagonal one."""
    l = Partition(l)
    group = symmetric_group(l.n)
    rows = _row_labels(l)
    size = len(l)
    # point x of row j lands in row rows[g(x)]
    cells = rows[group] * size + rows[None, :]
    counts = np.stack([(cells == c).sum(axis=1) for c in range(size * size)], axis=1)
    found = (NatMatrix(np.asarray(row).reshape(size, size).tolist()) for row in np.unique(counts, axis=0))
    return frozenset(M for M in found if not M.is_diagonal())


def intersection_matrix(first: Tabloid, second: Tabloid) -> NatMatrix:
    return NatMatrix([[len(set(a) & set(b)) for b in second.rows] for a in first.rows])


def sylow_subgroup(elements: Iterable[Raw], p: int, degree: int) -> tuple[Raw, ...]:
    """Generators of a Sylow p-subgroup of the group with the given elements.

    Grows a p-subgroup one element at a time; a proper p-subgroup always has a
    strictly larger p-subgroup above it, so the growth stops only at a Sylow.
    """
    check_prime(p)
    elements = sorted(set(elements))
    order = len(elements)
    target = p ** _p_adic_valuation(order, p)
    candidates = [g for g in elements if is_power_of(raw_order(g), p) and g != raw_identity(degree)]
    generators: list[Raw] = []
    current = {raw_identity(degree)}
    while len(current) < target:
        for g in candidates:
            if g in current:
                continue
            grown = _closure_within(generators + [g], degree, target)
            if grown is not None and is_power_of(len(grown), p):
                generators.append(g)
                current = grown
                break
        else:
            raise AssertionError("no p-element extends a proper p-subgroup")
    return tuple(generators)


def _p_adic_valuation(x: int, p: int) -> int:
    exponent = 0
    while x % p == 0:
        x //= p
        exponent += 1
    return exponent


def _closure_within(generators: list[Raw], degree: int, bound: int) -> set[Raw] | None:
    """Closure of ``generators``, or None as soon as it outgrows ``bound``."""
    elements = {raw_identity(degree)}
    frontier = list(elements)
    while frontier:
        fresh = []
        for h in frontier:
            for g in generators:
                gh = compose(g, h)
                if gh not in elements:
                    elements.add(gh)
                    fresh.append(gh)
                    if len(elements) > bound:
                        return None
        frontier = fresh
    return elements


@dataclasses.dataclass(frozen=True)
class OrbitSummand:
    """One S_n-orbit on the pair basis of S^2 M^l or Lambda^2 M^l."""

    representative: tuple[Tabloid, Tabloid]
    matrix: NatMatrix
    orbit_size: int
    stabilizer_order: int
    swaps: bool
    sylow_generators: tuple[Raw, ...]
    sylow_orbit_sizes: tuple[int, ...]

    @property
    def diagonal(self) -> bool:
        return self.representative[0] == self.representative[1]


def _pair_generators(n: int) -> list[Raw]:
    if n < 2:
        return []
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return [swap, cycle]


def orbit_decompose_square(l: Partition, kind: str, p: int) -> list[OrbitSummand]:
    """S_n-orbits on unordered tabloid pairs (with repetition for ``sym``, distinct for ``ext``).

    Each orbit carries its stabilizer order found by scanning S_n, whether some
    stabilizer element swaps the two tabloids, and a Sylow p-subgroup of the
    stabilizer with its orbit sizes on points.
    """
    check_prime(p)
    l = Partition(l)
    if kind not in ("sym", "ext"):
        raise DomainError(f"kind must be 'sym' or 'ext', got {kind!r}")
    n = l.n
    group = symmetric_group(n)
    space = tabloid_space(tuple(l))
    distinct = kind == "ext"
    if distinct and space.dim < 2:
        raise DomainError("exterior square undefined: lambda = (n) has a one-dimensional M^lambda")
    labels = kernels.pair_orbit_labels(space.actions(_pair_generators(n)), distinct)
    sizes = Counter(labels.tolist())
    offset = 1 if distinct else 0
    pairs = [(u, v) for u in range(space.dim) for v in range(u + offset, space.dim)]
    out = []
    for label in sorted(sizes):
        u, v = pairs[label]
        first, second = space.words[u], space.words[v]
        # w∘g == w means g^{-1}, hence g, fixes the tabloid with row word w
        first_moved, second_moved = first[group], second[group]
        keeps = np.all(first_moved == first, axis=1) & np.all(second_moved == second, axis=1)
        flips = np.all(first_moved == second, axis=1) & np.all(second_moved == first, axis=1)
        stabilizer = [tuple(g) for g in group[keeps | flips].tolist()]
        sylow = sylow_subgroup(stabilizer, p, n)
        out.append(
            OrbitSummand(
                representative=(space.tabloid(u), space.tabloid(v)),
                matrix=intersection_matrix(space.tabloid(u), space.tabloid(v)),
                orbit_size=sizes[label],
                stabilizer_order=len(stabilizer),
                swaps=bool(flips.any()) and u != v,
                sylow_generators=sylow,
                sylow_orbit_sizes=tuple(sorted((len(o) for o in raw_orbits(sylow, n)), reverse=True)),
            )
        )
    return out


def hom_dims_by_orbits(l: Partition, p: int) -> tuple[int, int | None]:
    """Trivial-module Hom dimensions counted as orbits whose sum vector survives."""
    l = Partition(l)
    sym = len(orbit_decompose_square(l, "sym", p))
    if len(l) <= 1:
        return sym, None
    ext_orbits = orbit_decompose_square(l, "ext", p)
    # outside characteristic 2 the orbit sum of a sign-swapped wedge vanishes
    ext = len(ext_orbits) if p == 2 else sum(1 for o in ext_orbits if not o.swaps)
    return sym, ext


def _order_p_elements(n: int, p: int) -> list[Raw]:
    """Products of disjoint p-cycles on ``0..n-1``, built cycle by cycle."""
    out = []

    def extend(perm: list[int], free: list[int], used_any: bool) -> None:
        if used_any:
            out.append(tuple(perm))
        for k, start in enumerate(free):
            rest = free[k + 1 :]
            for others in itertools.combinations(rest, p - 1):
                for order in itertools.permutations(others):
                    cycle = (start,) + order
                    new = perm[:]
                    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                        new[a] = b
                    extend(new, [x for x in rest if x not in others], True)

    extend(list(range(n)), list(range(n)), False)
    return sorted(set(out))


@functools.lru_cache(maxsize=16)
def elementary_abelians(n: int, p: int) -> tuple[tuple[tuple[Raw, ...], ...], ...]:
    """Generator tuples of every nontrivial elementary abelian p-subgroup of S_n, grouped by rank.

    Entry ``k - 1`` lists the subgroups of rank ``k``.  Subgroups are
    deduplicated by their element sets.
    """
    check_prime(p)
    cap = LIMITS.elementary_abelian_degree.get(p, 0)
    if n > cap:
        raise ResourceCapError(
            f"elementary abelian search in S_{n} at p = {p} exceeds elementary_abelian_degree = {cap}"
        )
    order_p = _order_p_elements(n, p)
    by_rank: list[dict[frozenset[Raw], tuple[Raw, ...]]] = []
    level: dict[frozenset[Raw], tuple[Raw, ...]] = {}
    identity = raw_identity(n)
    for x in order_p:
        level.setdefault(frozenset(_powers(x, p, identity)), (x,))
    while level:
        by_rank.append(level)
        nxt: dict[frozenset[Raw], tuple[Raw, ...]] = {}
        for elements, generators in level.items():
            for x in order_p:
                if x in elements or any(compose(x, g) != compose(g, x) for g in generators):
                    continue
                grown = frozenset(compose(y, e) for y in _powers(x, p, identity) for e in elements)
                nxt.setdefault(grown, generators + (x,))
        level = nxt
    return tuple(tuple(rank.values()) for rank in by_rank)


def _powers(x: Raw, p: int, identity: Raw) -> list[Raw]:
    out = [identity]
    for _ in range(p - 1):
        out.append(compose(x, out[-1]))
    return out


def elementary_abelians_max_rank(n: int, p: int, nonzero_test: Callable[[GeneratedPSubgroup], bool]) -> int:
    """Largest rank of an elementary abelian p-subgroup passing ``nonzero_test``; 0 if none does."""
    ranks = elementary_abelians(n, p)
    for rank in range(len(ranks), 0, -1):
        if any(nonzero_test(GeneratedPSubgroup.from_raw(g, p, n)) for g in ranks[rank - 1]):
            return rank
    return 0


def _minimal_generators(group: GeneratedPSubgroup) -> list[Raw]:
    chosen: list[Raw] = []
    size = 1
    for g in group.raw_generators:
        grown = len(_closure_within(chosen + [g], group.degree, group.order) or ())
        if grown > size:
            chosen.append(g)
            size = grown
    return chosen


def _simultaneous_conjugator(left: Sequence[Raw], right: Sequence[Raw], degree: int) -> Raw | None:
    """A permutation g with ``g left[i] g^-1 == right[i]`` for all i, if one exists."""
    image = [-1] * degree
    used = [False] * degree
    for base in range(degree):
        if image[base] != -1:
            continue
        for target in range(degree):
            if used[target]:
                continue
            trial = _extend_from(base, target, left, right, image, used)
            if trial is not None:
                for x, y in trial:
                    image[x] = y
                    used[y] = True
                break
        else:
            return None
    return tuple(image)


def _extend_from(base, target, left, right, image, used):
    """Propagate ``base -> target`` through the generator actions; None on conflict."""
    assigned = {base: target}
    taken = {target}
    queue = [base]
    while queue:
        x = queue.pop()
        y = assigned[x]
        for a, b in zip(left, right):
            ax, by = a[x], b[y]
            if ax in assigned:
                if assigned[ax] != by:
                    return None
                continue
            if image[ax] != -1 or used[by] or by in taken:
                return None
            assigned[ax] = by
            taken.add(by)
            queue.append(ax)
    return list(assigned.items())


def _element_profile(group: GeneratedPSubgroup) -> Counter:
    return Counter(raw_cycle_type(g) for g in group.raw_elements())


def conjugate_groups(A: GeneratedPSubgroup, B: GeneratedPSubgroup) -> bool:
    """Whether some g in S_n has ``g A g^-1 == B``."""
    if A.degree != B.degree:
        raise DomainError("conjugacy is tested inside a single symmetric group")
    n = A.degree
    if A.order != B.order:
        return False
    if sorted(map(len, A.orbits())) != sorted(map(len, B.orbits())):
        return False
    if _element_profile(A) != _element_profile(B):
        return False
    generators = _minimal_generators(A)
    if not generators:
        return True
    by_type: dict[tuple[int, ...], list[Raw]] = {}
    for b in sorted(B.raw_elements()):
        by_type.setdefault(raw_cycle_type(b), []).append(b)
    options = [by_type.get(raw_cycle_type(a), []) for a in generators]

    # g A g^-1 lands inside B and has the same order, so it equals B
    def search(prefix: list[Raw]) -> bool:
        if _simultaneous_conjugator(generators[: len(prefix)], prefix, n) is None:
            return False
        if len(prefix) == len(generators):
            return True
        return any(search(prefix + [b]) for b in options[len(prefix)])

    return search([])


def sylow_generators_on(points: Sequence[int], p: int) -> list[list[tuple[int, ...]]]:
    """Cycles generating a Sylow p-subgroup of the symmetric group on ``points``.

    ``points`` is split by the base-p digits of its size into blocks of size
    p^k; each block gets the shifts ``x -> x + p^(j-1) mod p^j`` on its first
    p^j points, which generate the iterated wreath product.
    """
    cycles: list[list[tuple[int, ...]]] = []
    start = 0
    for k, count in enumerate(digits(len(points), p)):
        for _ in range(count):
            block = points[start : start + p**k]
            for j in range(1, k + 1):
                step = p ** (j - 1)
                # the shift by step on the first p^j points is a product of step p-cycles
                cycles.append(
                    [tuple(block[r + step * c] for c in range(p)) for r in range(step)]
                )
            start += p**k
    return cycles


def _cycles_to_raw(cycles: Iterable[Sequence[int]], degree: int) -> Raw:
    images = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            images[a] = b
    return tuple(images)


def matrix_blocks(M: NatMatrix) -> dict[tuple[int, int], list[int]]:
    """Consecutive blocks of points for the cells of M, in row-major order."""
    blocks = {}
    start = 0
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            blocks[i, j] = list(range(start, start + x))
            start += x
    return blocks


def build_PM(M: NatMatrix, p: int, assignment: dict[tuple[int, int], list[int]] | None = None) -> GeneratedPSubgroup:
    """Explicit generators for P_M.

    Each cell gets a Sylow p-subgroup of the symmetric group on its block.  For
    p = 2 and a symmetric non-diagonal M the involution swapping each block
    with its mirror block (in order) is added.
    """
    check_prime(p)
    M = NatMatrix(M)
    n = sum(M.flat())
    blocks = matrix_blocks(M) if assignment is None else assignment
    if sorted(x for b in blocks.values() for x in b) != list(range(n)):
        raise DomainError("the assignment must place every point 0..n-1 in exactly one cell")
    generators = [
        _cycles_to_raw(cycles, n)
        for cell in sorted(blocks)
        for cycles in sylow_generators_on(blocks[cell], p)
    ]
    if p == 2 and M.is_symmetric() and not M.is_diagonal():
        swap = list(range(n))
        for (i, j), block in blocks.items():
            if i != j:
                for a, b in zip(block, blocks[j, i]):
                    swap[a] = b
        generators.append(tuple(swap))
    return GeneratedPSubgroup.from_raw(generators, p, n)


def count_fixed_tabloids_by_orbits(l: Sequence[int], P: GeneratedPSubgroup) -> int:
    """Ways to pour the point orbits of P into rows of lengths ``l``.

    A tabloid is P-fixed exactly when each row is a union of P-orbits, so this
    counts fixed tabloids without acting on any tabloid.
    """
    l = Composition(l)
    if l.n != P.degree:
        raise DomainError(f"shape of size {l.n} against a subgroup of S_{P.degree}")
    ways = Counter({tuple(l): 1})
    for orbit in P.orbits():
        size = len(orbit)
        nxt: Counter = Counter()
        for room, count in ways.items():
            for i, free in enumerate(room):
                if free >= size:
                    nxt[room[:i] + (free - size,) + room[i + 1 :]] += count
        ways = nxt
    return ways.get((0,) * len(l), 0)


def _scan_stable(l: Partition, a: int, P: GeneratedPSubgroup, distinct: bool) -> int:
    space = tabloid_space(tuple(Partition(l)))
    if space.dim > LIMITS.scan_dimension:
        raise ResourceCapError(
            f"dim M^lambda = {space.dim} exceeds scan_dimension = {LIMITS.scan_dimension}"
        )
    actions = space.actions(P.raw_generators)
    pick = itertools.combinations if distinct else itertools.combinations_with_replacement
    stable = 0
    for chosen in pick(range(space.dim), a):
        key = sorted(chosen)
        if all(sorted(images[list(chosen)].tolist()) == key for images in actions):
            stable += 1
    return stable


def scan_stable_multisets(l: Partition, a: int, P: GeneratedPSubgroup) -> int:
    """P-stable a-multisets of tabloids, by checking every multiset."""
    return _scan_stable(l, a, P, distinct=False)


def scan_stable_sets(l: Partition, a: int, P: GeneratedPSubgroup) -> int:
    """P-stable a-subsets of tabloids, by checking every subset."""
    return _scan_stable(l, a, P, distinct=True)


def stabilizer_order(words: np.ndarray, n: int) -> int:
    """Order of the subgroup of S_n fixing a multiset of tabloids given by row words."""
    group = symmetric_group(n)
    key = sorted(map(tuple, words.tolist()))
    count = 0
    for g in group:
        moved = sorted(map(tuple, words[:, g].tolist()))
        count += moved == key
    return count


def subset_orbit_count(l: Partition, a: int, cap: int = 200_000) -> int:
    """Number of S_n-orbits on a-subsets of tabloids."""
    l = Partition(l)
    space = tabloid_space(tuple(l))
    if math.comb(space.dim, a) > cap:
        raise ResourceCapError(f"C({space.dim}, {a}) subsets exceed the scan cap {cap}")
    subsets = list(itertools.combinations(range(space.dim), a))
    position = {s: i for i, s in enumerate(subsets)}
    actions = [images.tolist() for images in space.actions(_pair_generators(l.n))]
    labels = kernels.orbit_labels(
        np.array(
            [[position[tuple(sorted(images[x] for x in s))] for s in subsets] for images in actions],
            dtype=np.int64,
        ).reshape(len(actions), len(subsets))
    )
    return len(set(labels.tolist()))
