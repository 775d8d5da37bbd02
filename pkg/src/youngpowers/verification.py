"""Cross-check battery: closed forms against the brute-force oracle at small n.

Each check returns a :class:`CheckResult` naming the property, how many cases
it covered and the first few counterexamples.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from typing import Callable, Iterable, Iterator

import numpy as np

from . import oracle
from .brauer import dim_brauer_ext_power, dim_brauer_perm, dim_brauer_sym_power
from .complexity import complexity_ext_square, complexity_sym_power
from .partitions import Partition, partitions_of, qr_split, rearrange, union
from .power_structure import is_projective_ext_power, is_projective_sym_power
from .scott_squares import (
    diagonal_matrix,
    enumerate_M_lambda,
    hom_dims,
    scott_class_key,
    split_by_symmetry,
)
from .tabloids import GeneratedPSubgroup, dim_permutation_module, raw_orbits, standard_subgroups, tabloid_space

PRIMES = (2, 3)
SHOWN_FAILURES = 5


@dataclasses.dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(case)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        if self.failures:
            text += ": " + "; ".join(self.failures[:SHOWN_FAILURES])
        return text

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures}


def partitions_up_to(max_n: int, min_n: int = 1, min_length: int = 1) -> Iterator[Partition]:
    for n in range(min_n, max_n + 1):
        for l in partitions_of(n):
            if len(l) >= min_length:
                yield l


def check_double_cosets(max_n: int = 6) -> CheckResult:
    result = CheckResult("double cosets match the matrix enumeration")
    for l in partitions_up_to(max_n, min_length=2):
        result.record(oracle.double_cosets(l) == frozenset(enumerate_M_lambda(l)), str(l))
    return result


def check_orbit_counts(max_n: int = 6) -> CheckResult:
    """Orbit counts on pair bases and Hom dimensions against |S| and |N|."""
    result = CheckResult("pair-orbit counts and Hom dimensions")
    for l in partitions_up_to(max_n):
        for p in PRIMES:
            sym_orbits = oracle.orbit_decompose_square(l, "sym", p)
            if len(l) == 1:
                result.record(len(sym_orbits) == 1 and hom_dims(l, p) == (1, None), f"{l} p={p}")
                continue
            symmetric, representatives = split_by_symmetry(l)
            ext_orbits = oracle.orbit_decompose_square(l, "ext", p)
            counts_ok = len(sym_orbits) == 1 + len(symmetric) + len(representatives) and len(
                ext_orbits
            ) == len(symmetric) + len(representatives)
            result.record(counts_ok and hom_dims(l, p) == oracle.hom_dims_by_orbits(l, p), f"{l} p={p}")
    return result


def check_dimension_conservation(max_n: int = 6) -> CheckResult:
    result = CheckResult("pair-orbit sizes add up to dim S^2 and dim Lambda^2")
    for l in partitions_up_to(max_n):
        d = dim_permutation_module(l)
        n_factorial = math.factorial(l.n)
        sym = oracle.orbit_decompose_square(l, "sym", 2)
        ok = sum(o.orbit_size for o in sym) == d * (d + 1) // 2
        ok &= all(o.orbit_size * o.stabilizer_order == n_factorial for o in sym)
        if len(l) > 1:
            ext = oracle.orbit_decompose_square(l, "ext", 2)
            ok &= sum(o.orbit_size for o in ext) == d * (d - 1) // 2
            ok &= all(o.orbit_size * o.stabilizer_order == n_factorial for o in ext)
        result.record(ok, str(l))
    return result


def _oracle_rank(l: Partition, p: int, nonzero: Callable[[GeneratedPSubgroup], bool]) -> int:
    return oracle.elementary_abelians_max_rank(l.n, p, nonzero)


def check_complexity_and_projectivity(max_n: int = 6) -> CheckResult:
    """Square complexities and projectivity against the elementary abelian search."""
    result = CheckResult("square complexities and projectivity against elementary abelian ranks")
    for l in partitions_up_to(max_n, min_n=2):
        for p in PRIMES:
            sym_rank = _oracle_rank(l, p, lambda E: dim_brauer_sym_power(l, 2, E) > 0)
            ok = complexity_sym_power(l, 2, p) == sym_rank
            ok &= is_projective_sym_power(l, 2, p) == (sym_rank == 0)
            if len(l) > 1:
                ext_rank = _oracle_rank(l, p, lambda E: dim_brauer_ext_power(l, 2, E) > 0)
                ok &= complexity_ext_square(l, p) == ext_rank
                ok &= is_projective_ext_power(l, 2, p) == (ext_rank == 0)
            result.record(ok, f"{l} p={p}")
    return result


def check_projectivity_powers(max_n: int = 5, max_a: int = 4) -> CheckResult:
    """Projectivity of higher powers against the elementary abelian search."""
    result = CheckResult("projectivity of higher powers against elementary abelian ranks")
    for l in partitions_up_to(max_n, min_n=2):
        d = dim_permutation_module(l)
        for p in PRIMES:
            for a in range(2, max_a + 1):
                rank = _oracle_rank(l, p, lambda E: dim_brauer_sym_power(l, a, E) > 0)
                result.record(is_projective_sym_power(l, a, p) == (rank == 0), f"sym {l} a={a} p={p}")
            for a in range(2, d + 1):
                rank = _oracle_rank(l, p, lambda E: dim_brauer_ext_power(l, a, E) > 0)
                result.record(is_projective_ext_power(l, a, p) == (rank == 0), f"ext {l} a={a} p={p}")
    return result


def _test_subgroups(n: int, p: int) -> Iterator[GeneratedPSubgroup]:
    for rank in oracle.elementary_abelians(n, p):
        for generators in rank:
            yield GeneratedPSubgroup.from_raw(generators, p, n)


def check_brauer_counts(max_n: int = 5, max_a: int = 3) -> CheckResult:
    """Orbit-size coefficient counts against one-by-one scans of multisets and sets."""
    result = CheckResult("Brauer dimensions against exhaustive scans")
    for l in partitions_up_to(max_n, min_n=2):
        d = dim_permutation_module(l)
        if d > 12:
            continue
        for p in PRIMES:
            if l.n < p:
                continue
            for P in _test_subgroups(l.n, p):
                ok = dim_brauer_perm(l, P) == oracle.count_fixed_tabloids_by_orbits(l, P)
                for a in range(1, max_a + 1):
                    ok &= dim_brauer_sym_power(l, a, P) == oracle.scan_stable_multisets(l, a, P)
                    if a <= d:
                        ok &= dim_brauer_ext_power(l, a, P) == oracle.scan_stable_sets(l, a, P)
                result.record(ok, f"{l} P={P!r}")
    return result


def check_scott_keys(max_n: int = 6) -> CheckResult:
    """Equal keys exactly when the constructed groups are conjugate."""
    result = CheckResult("Scott class keys agree with conjugacy of the constructed groups")
    for l in partitions_up_to(max_n, min_length=2):
        matrices = list(enumerate_M_lambda(l)) + [diagonal_matrix(l)]
        for p in PRIMES:
            classes: dict = {}
            for M in matrices:
                classes.setdefault(scott_class_key(M, p), []).append(M)
            groups = {M: oracle.build_PM(M, p) for M in matrices}
            ok = all(
                oracle.conjugate_groups(groups[members[0]], groups[M])
                for members in classes.values()
                for M in members[1:]
            )
            leaders = [members[0] for members in classes.values()]
            ok &= not any(
                oracle.conjugate_groups(groups[A], groups[B]) for A, B in itertools.combinations(leaders, 2)
            )
            result.record(ok, f"{l} p={p}")
    return result


def check_stabilizer_sylows(max_n: int = 6) -> CheckResult:
    """The Sylow subgroup of each orbit stabilizer is conjugate to the group built from its matrix."""
    result = CheckResult("orbit stabilizer Sylow subgroups match the constructed groups")
    for l in partitions_up_to(max_n, min_length=2):
        for p in PRIMES:
            ok = True
            for kind in ("sym", "ext"):
                for orbit in oracle.orbit_decompose_square(l, kind, p):
                    sylow = GeneratedPSubgroup.from_raw(orbit.sylow_generators, p, l.n)
                    ok &= oracle.conjugate_groups(sylow, oracle.build_PM(orbit.matrix, p))
            result.record(ok, f"{l} p={p}")
    return result


def _residues_are_special(l: Partition, p: int) -> bool:
    return rearrange(qr_split(l, p)[1]) == (p - 1, 1)


def check_special_orbit(max_n: int = 6) -> CheckResult:
    """For residues (p-1, 1): p-multisets whose common row intersections are q form one orbit
    with stabilizer a Young subgroup of shape q u (p)."""
    result = CheckResult("special p-multiset orbit has Young stabilizer of shape q u (p)")
    for l in partitions_up_to(max_n, min_n=2):
        for p in PRIMES:
            if not _residues_are_special(l, p):
                continue
            q = qr_split(l, p)[0]
            mu = union(q, (p,))
            space = tabloid_space(tuple(l))
            words = space.words
            members = set()
            for chosen in itertools.combinations_with_replacement(range(space.dim), p):
                block = words[list(chosen)]
                agree = np.all(block == block[0], axis=0)
                common = [int(np.sum(agree & (block[0] == row))) for row in range(len(l))]
                if tuple(common) == tuple(q):
                    members.add(chosen)
            start_key = min(members)
            start = words[list(start_key)]
            group = oracle.symmetric_group(l.n)
            index = {w.tobytes(): i for i, w in enumerate(words)}
            orbit = set()
            stabilizer = []
            for g in group:
                # the image of a tabloid with word w under g^-1 has word w∘g
                image = tuple(sorted(index[w.tobytes()] for w in start[:, g]))
                orbit.add(image)
                if image == start_key:
                    stabilizer.append(tuple(g))
            orbit_sizes = [len(o) for o in raw_orbits(stabilizer, l.n)]
            ok = orbit == members
            ok &= len(stabilizer) == math.prod(math.factorial(x) for x in mu)
            ok &= rearrange(orbit_sizes) == mu
            result.record(ok, f"{l} p={p}")
    return result


def check_top_rank_elementary_abelians(max_n: int = 6) -> CheckResult:
    """Elementary abelian subgroups of rank n/p are conjugate to the standard ones."""
    result = CheckResult("rank n/p elementary abelian subgroups are conjugate to standard ones")
    for p in PRIMES:
        for n in range(p, max_n + 1, p):
            ranks = oracle.elementary_abelians(n, p)
            top = ranks[n // p - 1] if len(ranks) >= n // p else ()
            if p > 2:
                models = [standard_subgroups(n, p, "E", n // p)]
            else:
                models = [
                    GeneratedPSubgroup(
                        standard_subgroups(n, 2, "K", k).generators + standard_subgroups(n, 2, "H", k).generators,
                        2,
                        n,
                    )
                    for k in range(n // 4 + 1)
                ]
            for generators in top:
                E = GeneratedPSubgroup.from_raw(generators, p, n)
                result.record(any(oracle.conjugate_groups(E, F) for F in models), f"n={n} p={p} {E!r}")
    return result


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "double-cosets": check_double_cosets,
    "orbit-counts": check_orbit_counts,
    "dimension-conservation": check_dimension_conservation,
    "complexity": check_complexity_and_projectivity,
    "projectivity": check_projectivity_powers,
    "brauer-counts": check_brauer_counts,
    "scott-keys": check_scott_keys,
    "stabilizer-sylows": check_stabilizer_sylows,
    "special-orbit": check_special_orbit,
    "top-rank": check_top_rank_elementary_abelians,
}


def run_battery(names: Iterable[str] | None = None) -> list[CheckResult]:
    selected = list(CHECKS) if names is None else list(names)
    return [CHECKS[name]() for name in selected]
