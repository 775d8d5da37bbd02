"""Closed-form complexities of M^lambda, Y^lambda and of their powers."""

from __future__ import annotations

from .errors import DomainError
from .partitions import Partition, check_prime, padic_expansion, qr_split, rank_young


def nu_p(a: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``a``."""
    check_prime(p)
    if a < 1:
        raise DomainError(f"nu_p needs a >= 1, got {a}")
    exponent = 0
    while a % p == 0:
        a //= p
        exponent += 1
    return exponent


def complexity_perm(l: Partition, p: int) -> int:
    return rank_young(Partition(l), p)


def complexity_young(l: Partition, p: int) -> int:
    l = Partition(l)
    if not l:
        raise DomainError("Young modules are indexed by nonempty partitions here")
    bottom = padic_expansion(l, p)[0]
    return (l.n - bottom.n) // p


def complexity_sym_power(l: Partition, a: int, p: int) -> int:
    l = Partition(l)
    if not l:
        raise DomainError("need a nonempty partition")
    if a < 2:
        raise DomainError(f"symmetric power needs a >= 2, got {a}")
    r = rank_young(l, p)
    u = nu_p(a, p)
    ceiling = l.n // p
    if u == 0:
        return r
    return r + u if r + u <= ceiling else ceiling


def complexity_ext_square(l: Partition, p: int) -> int:
    l = Partition(l)
    if len(l) <= 1:
        raise DomainError("exterior square undefined: lambda = (n) has a one-dimensional M^lambda")
    r = rank_young(l, p)
    if p == 2:
        odd_parts = sum(1 for x in qr_split(l, p)[1] if x)
        return r + 1 if odd_parts >= 2 else r
    if len(l) == 2 and l[0] % p == 0 and l[1] < p:
        return r - 1
    return r


def complexity_projective_power(r: int, a: int, p: int) -> int:
    """Complexity of the a-th symmetric power of a projective module for a group of p-rank r."""
    if r < 0:
        raise DomainError(f"rank must be nonnegative, got {r}")
    if a < 2:
        raise DomainError(f"power a must be >= 2, got {a}")
    return min(nu_p(a, p), r)
