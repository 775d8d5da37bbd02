"""Young module labels: summands of M^mu, Scott labels, and the distinguished
summands of symmetric and exterior powers."""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterator

from .complexity import complexity_ext_square, complexity_young, nu_p
from .config import LIMITS
from .errors import DomainError, ResourceCapError
from .partitions import (
    Composition,
    Partition,
    add,
    check_prime,
    dominance_leq,
    padic_expansion,
    partitions_of,
    qr_split,
    rank_young,
    rearrange,
    s_lambda,
    union,
)


class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise ResourceCapError("Donkin search exceeded its node limit; raise donkin_nodes")


def _layer_choices(
    residual: tuple[int, ...], unit: int, total: int, budget: _Budget
) -> Iterator[tuple[int, ...]]:
    """Count vectors ``c`` with ``c_j * unit <= residual_j`` and ``sum(c) == total``.

    Equal residual entries are interchangeable, so within each run of equal
    values only non-increasing count vectors are produced.  ``residual`` must
    be sorted in non-increasing order.
    """
    runs = [(value, len(list(group))) for value, group in itertools.groupby(residual)]

    def fill(run_index: int, left: int) -> Iterator[list[int]]:
        budget.spend()
        if run_index == len(runs):
            if left == 0:
                yield []
            return
        value, count = runs[run_index]
        cap = value // unit
        capacity_after = sum((v // unit) * c for v, c in runs[run_index + 1 :])
        for chunk in _bounded_partitions(count, min(cap, left), left, capacity_after):
            for rest in fill(run_index + 1, left - sum(chunk)):
                yield list(chunk) + rest

    for counts in fill(0, total):
        yield tuple(counts)


def _bounded_partitions(slots: int, cap: int, most: int, capacity_after: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of length ``slots`` with entries ``<= cap`` and sum ``<= most``
    whose sum leaves at most ``capacity_after`` for the later runs."""

    def build(k: int, bound: int, budget_left: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for x in range(min(bound, budget_left), -1, -1):
            for rest in build(k - 1, x, budget_left - x):
                yield (x,) + rest

    for chunk in build(slots, cap, most):
        if most - sum(chunk) <= capacity_after:
            yield chunk


def donkin_test(nu: Partition, mu: Partition, p: int) -> bool:
    """Whether Y^nu is a direct summand of M^mu in characteristic p."""
    check_prime(p)
    nu, mu = Partition(nu), Partition(mu)
    if nu.n != mu.n:
        raise DomainError(f"Donkin's test compares partitions of equal size, got {nu} and {mu}")
    if not nu:
        return True
    layers = padic_expansion(nu, p).layers
    budget = _Budget(LIMITS.donkin_nodes)

    @functools.lru_cache(maxsize=None)
    def solvable(level: int, residual: tuple[int, ...]) -> bool:
        target = layers[level]
        unit = p**level
        if level == 0:
            return sum(residual) == target.n and dominance_leq(rearrange(residual), target)
        for counts in _layer_choices(residual, unit, target.n, budget):
            if not dominance_leq(rearrange(counts), target):
                continue
            rest = tuple(sorted((r - unit * c for r, c in zip(residual, counts)), reverse=True))
            if solvable(level - 1, rest):
                return True
        return False

    return solvable(len(layers) - 1, tuple(mu))


def list_young_summands(mu: Partition, p: int) -> frozenset[Partition]:
    """Labels of the Young modules occurring in M^mu."""
    mu = Partition(mu)
    return frozenset(
        nu for nu in partitions_of(mu.n) if dominance_leq(mu, nu) and donkin_test(nu, mu, p)
    )


def is_scott_partition(l: Partition, p: int) -> bool:
    """Whether every p-adic layer of ``l`` looks like ``((p-1)^m, k)`` with ``k < p - 1``."""
    l = Partition(l)
    if not l:
        return True
    for layer in padic_expansion(l, p).layers:
        body, tail = (layer[:-1], layer[-1]) if layer and layer[-1] != p - 1 else (layer, 0)
        if any(x != p - 1 for x in body) or tail >= p - 1:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class ThmBQuantities:
    d_la: int
    e_la: int
    lambda_a: Composition
    r_la_a: Composition


def remove_boxes(c: Composition, boxes: int) -> Composition:
    """Take ``boxes`` boxes off ``c``, emptying the last row first."""
    parts = list(c)
    for i in range(len(parts) - 1, -1, -1):
        if boxes == 0:
            break
        taken = min(parts[i], boxes)
        parts[i] -= taken
        boxes -= taken
    if boxes:
        raise DomainError("cannot remove more boxes than the composition has")
    return Composition(parts)


def thm_b_quantities(l: Partition, a: int, p: int) -> ThmBQuantities:
    l = Partition(l)
    if a < 2:
        raise DomainError(f"symmetric power needs a >= 2, got {a}")
    d = min(nu_p(a, p), l.n // p - rank_young(l, p))
    q, r = qr_split(l, p)
    r_a = remove_boxes(r, p * d)
    return ThmBQuantities(d_la=d, e_la=l.n - p * d, lambda_a=add(q, r_a), r_la_a=r_a)


def thm_b_sym_partition(l: Partition, a: int, p: int) -> Partition:
    """Label of a Young summand of S^a M^l whose complexity equals that of S^a M^l."""
    quantities = thm_b_quantities(l, a, p)
    return s_lambda(union(quantities.lambda_a, (p,) * quantities.d_la), p)


def _bar_sum(c: Composition, p: int) -> Partition:
    q, r = qr_split(c, p)
    return Partition(add(rearrange(r), rearrange(q)))


def _shifted(l: Partition, i: int, j: int, by: int) -> list[int]:
    parts = list(l)
    parts[i] -= by
    parts[j] -= by
    return parts


def thm_b_ext_partitions(l: Partition, p: int) -> frozenset[Partition]:
    """Labels of Young summands of the exterior square whose complexity matches it."""
    check_prime(p)
    l = Partition(l)
    if len(l) <= 1:
        raise DomainError("exterior square undefined: lambda = (n) has a one-dimensional M^lambda")
    pairs = [(i, j) for i in range(len(l)) for j in range(i + 1, len(l))]
    found: set[Partition] = set()
    if p > 2:
        for u, v in pairs:
            if l[u] < p:
                found.add(_bar_sum(union(_shifted(l, u, v, 1), (1, 1)), p))
            elif l[v] >= p:
                found.add(_bar_sum(union(_shifted(l, u, v, p), (p, p)), p))
        if not found:
            gamma = union((l[0] - 1, l[1] - 1), (1, 1))
            found.add(gamma if l[0] % p == 0 else _bar_sum(gamma, p))
        return frozenset(found)
    if any(x % 2 for x in l):
        target = complexity_ext_square(l, p)
        for i, j in pairs:
            if (l[i] * l[j]) % 2 or (l[i] + l[j]) % 2:
                merged = union(_shifted(l, i, j, 1), (2,))
                found.update(nu for nu in list_young_summands(merged, p) if complexity_young(nu, p) == target)
        return frozenset(found)
    return frozenset(s_lambda(union(_shifted(l, i, j, 2), (4,)), p) for i, j in pairs)


def thm_c_partitions(l: Partition, p: int) -> tuple[Partition, frozenset[Partition]]:
    """``mu = q_l u (p)`` and the Young labels of M^mu, for l with residues ``(p-1, 1)``."""
    check_prime(p)
    l = Partition(l)
    q, r = qr_split(l, p)
    if rearrange(r) != (p - 1, 1):
        raise DomainError("the nonzero residues of lambda mod p must be (p-1, 1)")
    mu = union(q, (p,))
    return mu, list_young_summands(mu, p)

