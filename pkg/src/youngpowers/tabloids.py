"""Permutations, tabloids and p-subgroups of S_n given by generators.

Points are the integers ``1..n``.  Internally permutations travel as 0-based
image tuples (``raw`` permutations) because the brute-force routines compose
millions of them; :class:`Permutation` is the 1-based public face.
"""

from __future__ import annotations

import functools
import math
import re
from collections import Counter
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .config import LIMITS
from .errors import DomainError, ResourceCapError
from .partitions import Composition, check_prime

Raw = tuple[int, ...]


def compose(a: Raw, b: Raw) -> Raw:
    """``a`` after ``b``."""
    return tuple(a[x] for x in b)


def invert(a: Raw) -> Raw:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def raw_identity(n: int) -> Raw:
    return tuple(range(n))


def raw_cycles(a: Raw) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    cycles = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = a[x]
        cycles.append(tuple(cycle))
    return cycles


def raw_cycle_type(a: Raw) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in raw_cycles(a)), reverse=True))


def raw_order(a: Raw) -> int:
    return math.lcm(*(len(c) for c in raw_cycles(a))) if a else 1


def is_power_of(x: int, p: int) -> bool:
    while x % p == 0:
        x //= p
    return x == 1


def generate(generators: Iterable[Raw], degree: int, cap: int | None = None) -> frozenset[Raw]:
    """Closure of ``generators`` under composition, as a set of raw permutations."""
    cap = LIMITS.group_elements if cap is None else cap
    gens = [g for g in set(generators)]
    identity = raw_identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for h in frontier:
            for g in gens:
                gh = compose(g, h)
                if gh not in elements:
                    elements.add(gh)
                    fresh.append(gh)
                    if len(elements) > cap:
                        raise ResourceCapError(
                            f"group has more than {cap} elements; raise the group_elements limit"
                        )
        frontier = fresh
    return frozenset(elements)


def raw_orbits(generators: Iterable[Raw], degree: int) -> list[tuple[int, ...]]:
    """Orbits of ``0..degree-1``, each sorted, listed by smallest point."""
    gens = list(generators)
    if not gens:
        return [(x,) for x in range(degree)]
    labels = kernels.orbit_labels(np.array(gens, dtype=np.int64).reshape(len(gens), degree))
    grouped: dict[int, list[int]] = {}
    for x, label in enumerate(labels.tolist()):
        grouped.setdefault(label, []).append(x)
    return [tuple(points) for _, points in sorted(grouped.items())]


class Permutation:
    """A bijection of ``{1..n}``; ``images[i]`` is the image of ``i + 1``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images!r} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_raw(cls, raw: Raw) -> "Permutation":
        return cls(x + 1 for x in raw)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int | None = None) -> "Permutation":
        cycles = [tuple(c) for c in cycles]
        points = [x for c in cycles for x in c]
        if len(set(points)) != len(points) or any(x < 1 for x in points):
            raise DomainError(f"cycles {cycles!r} are not disjoint cycles of positive points")
        top = max(points, default=0)
        degree = top if degree is None else degree
        if top > degree:
            raise DomainError(f"cycle point {top} exceeds degree {degree}")
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                images[x - 1] = y
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Read cycle notation such as ``"(1,2,3)(4,5)"``; ``"()"`` is the identity."""
        body = text.replace(" ", "")
        if not re.fullmatch(r"(\((\d+(,\d+)*)?\))*", body):
            raise DomainError(f"cannot parse {text!r} as cycle notation")
        cycles = [tuple(int(x) for x in c.split(",")) for c in re.findall(r"\(([\d,]+)\)", body)]
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def raw(self) -> Raw:
        return tuple(x - 1 for x in self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DomainError("cannot compose permutations of different degrees")
        return Permutation(self.images[x - 1] for x in other.images)

    def inverse(self) -> "Permutation":
        return Permutation.from_raw(invert(self.raw))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        return [tuple(x + 1 for x in c) for c in raw_cycles(self.raw) if len(c) > 1]

    def cycle_type(self) -> tuple[int, ...]:
        return raw_cycle_type(self.raw)

    def order(self) -> int:
        return raw_order(self.raw)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.raw) if x != i)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, degree={self.degree})"


class Tabloid:
    """An ordered set partition of ``{1..n}``; rows are stored sorted."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(sorted(r)) for r in rows)
        points = sorted(x for r in rows for x in r)
        if points != list(range(1, len(points) + 1)):
            raise DomainError(f"rows {rows!r} do not partition 1..{len(points)}")
        self.rows = rows

    @classmethod
    def initial(cls, shape: Iterable[int]) -> "Tabloid":
        """The tabloid whose rows are consecutive runs ``1..l_1``, ``l_1+1..``, and so on."""
        rows = []
        start = 1
        for size in shape:
            rows.append(range(start, start + size))
            start += size
        return cls(rows)

    @classmethod
    def from_word(cls, word: Sequence[int], length: int) -> "Tabloid":
        """Inverse of :meth:`word`: ``word[x]`` is the row holding point ``x + 1``."""
        rows: list[list[int]] = [[] for _ in range(length)]
        for point, row in enumerate(word, start=1):
            rows[row].append(point)
        return cls(rows)

    @property
    def shape(self) -> Composition:
        return Composition(len(r) for r in self.rows)

    @property
    def degree(self) -> int:
        return sum(len(r) for r in self.rows)

    def word(self) -> tuple[int, ...]:
        out = [0] * self.degree
        for i, row in enumerate(self.rows):
            for x in row:
                out[x - 1] = i
        return tuple(out)

    def row_of(self, point: int) -> int:
        for i, row in enumerate(self.rows):
            if point in row:
                return i
        raise DomainError(f"point {point} is not in this tabloid")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tabloid) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __lt__(self, other: "Tabloid") -> bool:
        return self.word() < other.word()

    def __str__(self) -> str:
        return "{" + " | ".join(",".join(map(str, r)) for r in self.rows) + "}"

    def __repr__(self) -> str:
        return f"Tabloid({self.rows!r})"


def act(g: Permutation, t: Tabloid) -> Tabloid:
    if g.degree != t.degree:
        raise DomainError(f"degree mismatch: permutation on {g.degree}, tabloid on {t.degree}")
    return Tabloid([g(x) for x in row] for row in t.rows)


def dim_permutation_module(shape: Iterable[int]) -> int:
    shape = list(shape)
    return math.factorial(sum(shape)) // math.prod(math.factorial(x) for x in shape)


def _check_degree(shape: Composition) -> None:
    if shape.n > LIMITS.tabloid_degree:
        raise ResourceCapError(
            f"n = {shape.n} exceeds the tabloid degree limit {LIMITS.tabloid_degree}"
        )
    d = dim_permutation_module(shape)
    if d > LIMITS.group_elements:
        raise ResourceCapError(f"{d} tabloids exceed the limit {LIMITS.group_elements}")


def _words(shape: Composition) -> Iterator[tuple[int, ...]]:
    """Row words in lexicographic order (next-permutation walk)."""
    word = [i for i, size in enumerate(shape) for _ in range(size)]
    while True:
        yield tuple(word)
        k = len(word) - 2
        while k >= 0 and word[k] >= word[k + 1]:
            k -= 1
        if k < 0:
            return
        j = len(word) - 1
        while word[j] <= word[k]:
            j -= 1
        word[k], word[j] = word[j], word[k]
        word[k + 1 :] = reversed(word[k + 1 :])


def enumerate_tabloids(shape: Iterable[int]) -> Iterator[Tabloid]:
    """Every tabloid of the given shape, the initial one first."""
    shape = Composition(shape)
    _check_degree(shape)
    for word in _words(shape):
        yield Tabloid.from_word(word, len(shape))


class TabloidSpace:
    """Tabloids of a fixed shape indexed ``0..d-1`` in enumeration order."""

    def __init__(self, shape: Iterable[int]):
        self.shape = Composition(shape)
        _check_degree(self.shape)
        self.degree = self.shape.n
        self.words = np.array(list(_words(self.shape)), dtype=np.int64).reshape(
            dim_permutation_module(self.shape), self.degree
        )
        self.dim = self.words.shape[0]
        self._counts = np.array(self.shape, dtype=np.int64)

    def tabloid(self, index: int) -> Tabloid:
        return Tabloid.from_word(self.words[index].tolist(), len(self.shape))

    def index(self, t: Tabloid) -> int:
        if t.shape != self.shape:
            raise DomainError(f"tabloid of shape {t.shape} is not in M^{self.shape}")
        return int(kernels.rank_words(np.array([t.word()], dtype=np.int64), self._counts)[0])

    def action(self, g: Raw) -> np.ndarray:
        """``out[i]`` is the index of ``g`` applied to tabloid ``i``."""
        moved = np.empty_like(self.words)
        moved[:, list(g)] = self.words
        return kernels.rank_words(moved, self._counts)

    def actions(self, generators: Iterable[Raw]) -> np.ndarray:
        gens = list(generators)
        if not gens:
            return np.empty((0, self.dim), dtype=np.int64)
        return np.stack([self.action(g) for g in gens])

    def orbit_labels(self, generators: Iterable[Raw]) -> np.ndarray:
        acts = self.actions(generators)
        if acts.shape[0] == 0:
            return np.arange(self.dim, dtype=np.int64)
        return kernels.orbit_labels(acts)

    def orbit_sizes(self, generators: Iterable[Raw]) -> Counter:
        """Multiset of orbit sizes, as ``Counter({size: how_many})``."""
        labels = self.orbit_labels(generators)
        per_orbit = Counter(labels.tolist())
        return Counter(per_orbit.values())


@functools.lru_cache(maxsize=64)
def tabloid_space(shape: tuple[int, ...]) -> TabloidSpace:
    return TabloidSpace(shape)


class GeneratedPSubgroup:
    """A p-subgroup of S_n given by generating permutations."""

    def __init__(self, generators: Iterable[Permutation | str], p: int, degree: int | None = None):
        check_prime(p)
        gens = [Permutation.parse(g, degree) if isinstance(g, str) else g for g in generators]
        degrees = {g.degree for g in gens}
        if degree is None:
            if len(degrees) != 1:
                raise DomainError("cannot infer the degree; pass degree explicitly")
            degree = degrees.pop()
        elif degrees - {degree}:
            raise DomainError(f"generators do not all have degree {degree}")
        for g in gens:
            if not is_power_of(g.order(), p):
                raise DomainError(f"generator {g} has order {g.order()}, not a power of {p}")
        self.p = p
        self.degree = degree
        self.generators = tuple(g for g in gens if g.support())
        self._elements: frozenset[Raw] | None = None

    @classmethod
    def from_raw(cls, generators: Iterable[Raw], p: int, degree: int) -> "GeneratedPSubgroup":
        return cls([Permutation.from_raw(g) for g in generators], p, degree)

    @property
    def raw_generators(self) -> tuple[Raw, ...]:
        return tuple(g.raw for g in self.generators)

    def raw_elements(self) -> frozenset[Raw]:
        if self._elements is None:
            elements = generate(self.raw_generators, self.degree)
            if not is_power_of(len(elements), self.p):
                raise DomainError(
                    f"the generators span a group of order {len(elements)}, not a {self.p}-group"
                )
            self._elements = elements
        return self._elements

    def elements(self) -> list[Permutation]:
        return sorted((Permutation.from_raw(g) for g in self.raw_elements()), key=lambda g: g.images)

    @property
    def order(self) -> int:
        return len(self.raw_elements())

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits on ``{1..n}``."""
        return [tuple(x + 1 for x in o) for o in raw_orbits(self.raw_generators, self.degree)]

    def is_elementary_abelian(self) -> bool:
        gens = self.raw_generators
        return all(raw_order(g) == self.p for g in gens) and all(
            compose(a, b) == compose(b, a) for a in gens for b in gens
        )

    def rank(self) -> int:
        """p-rank, for elementary abelian groups."""
        if not self.is_elementary_abelian():
            raise DomainError("rank is only defined here for elementary abelian groups")
        return round(math.log(self.order, self.p))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators)) or "1"
        return f"<{gens}> in S_{self.degree} (p={self.p})"


def fixed_tabloids(shape: Iterable[int], P: GeneratedPSubgroup) -> tuple[int, list[Tabloid]]:
    """Tabloids fixed by every element of ``P``: each row is a union of P-orbits."""
    shape = Composition(shape)
    if shape.n != P.degree:
        raise DomainError(f"shape of size {shape.n} against a subgroup of S_{P.degree}")
    space = tabloid_space(tuple(shape))
    fixed = np.ones(space.dim, dtype=bool)
    identity = np.arange(space.dim)
    for images in space.actions(P.raw_generators):
        fixed &= images == identity
    indices = np.flatnonzero(fixed).tolist()
    return len(indices), [space.tabloid(i) for i in indices]


def orbit_of(t: Tabloid, P: GeneratedPSubgroup) -> set[Tabloid]:
    orbit = {t}
    frontier = [t]
    while frontier:
        fresh = []
        for u in frontier:
            for g in P.generators:
                v = act(g, u)
                if v not in orbit:
                    orbit.add(v)
                    fresh.append(v)
        frontier = fresh
    return orbit


def _block_cycle(start: int, length: int) -> list[int]:
    return list(range(start, start + length))


def standard_subgroups(n: int, p: int, kind: str, index: int) -> GeneratedPSubgroup:
    """The subgroups ``E``, ``K``, ``H`` and ``F`` built from consecutive blocks of points.

    ``E`` (index m): generated by the p-cycles on the first m blocks of p points.
    ``K`` (p = 2, index s): two commuting double transpositions on each of the
    first s blocks of four points.
    ``H`` (p = 2, n even, index x): the transpositions pairing up the points
    after the first 4x.
    ``F`` (index i): cyclic, generated by the product of the first i p-cycles.
    """
    check_prime(p)
    if kind == "E":
        if not 0 <= p * index <= n:
            raise DomainError(f"E_{index} needs 0 <= {p}*{index} <= {n}")
        cycles = [[_block_cycle(i * p + 1, p)] for i in range(index)]
    elif kind == "K":
        if p != 2 or not 0 <= 4 * index <= n:
            raise DomainError(f"K_{index} needs p = 2 and 0 <= 4*{index} <= {n}")
        cycles = []
        for i in range(1, index + 1):
            a, b, c, d = 4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i
            cycles += [[(a, b), (c, d)], [(a, c), (b, d)]]
    elif kind == "H":
        if p != 2 or n % 2 or not 0 <= 4 * index <= n:
            raise DomainError(f"H_{index} needs p = 2, n even and 0 <= 4*{index} <= {n}")
        cycles = [[(4 * index + 2 * i - 1, 4 * index + 2 * i)] for i in range(1, (n - 4 * index) // 2 + 1)]
    elif kind == "F":
        if not 0 <= p * index <= n:
            raise DomainError(f"F_{index} needs 0 <= {p}*{index} <= {n}")
        cycles = [[_block_cycle(i * p + 1, p) for i in range(index)]] if index else []
    else:
        raise DomainError(f"unknown standard subgroup kind {kind!r}; use E, K, H or F")
    return GeneratedPSubgroup([Permutation.from_cycles(c, n) for c in cycles], p, n)
