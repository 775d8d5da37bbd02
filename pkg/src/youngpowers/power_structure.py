"""Projectivity of S^a M^lambda and Lambda^a M^lambda, and which Lambda^a M^lambda are indecomposable."""

from __future__ import annotations

import dataclasses
import math

from .brauer import m_values
from .errors import DomainError
from .partitions import Partition, check_prime, format_parts
from .tabloids import dim_permutation_module

KINDS = ("Trivial", "Sign", "Young", "SignedYoung", "PermModule", "Decomposable", "NotApplicable")


@dataclasses.dataclass(frozen=True)
class ModuleLabel:
    """Isomorphism type of a power module, as far as the classification names it.

    ``alpha`` is the Young label (or the first signed-Young label); ``beta`` is
    only used by signed Young modules and holds the one-part partition ``(pb)``.
    """

    kind: str
    alpha: Partition = Partition()
    beta: Partition = Partition()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown module kind {self.kind!r}")
        object.__setattr__(self, "alpha", Partition(self.alpha))
        object.__setattr__(self, "beta", Partition(self.beta))

    @property
    def indecomposable(self) -> bool:
        return self.kind not in ("Decomposable", "NotApplicable")

    def __str__(self) -> str:
        if self.kind == "Young":
            return f"Y^{format_parts(self.alpha)}"
        if self.kind == "SignedYoung":
            return f"Y({format_parts(self.alpha)}|{format_parts(self.beta)})"
        if self.kind == "PermModule":
            return f"M^{format_parts(self.alpha)}"
        return self.kind

    def to_json(self) -> dict:
        return {"kind": self.kind, "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "ModuleLabel":
        return cls(data["kind"], Partition(data.get("alpha", [])), Partition(data.get("beta", [])))


def is_projective_sym_power(l: Partition, a: int, p: int) -> bool:
    check_prime(p)
    l = Partition(l)
    if a < 0:
        raise DomainError(f"power a must be nonnegative, got {a}")
    return l.n < p or (a % p != 0 and all(x < p for x in l))


def is_projective_ext_power(l: Partition, a: int, p: int) -> bool:
    """Projective iff no F_i and no split ``a = x + p*y`` leaves room for a fixed wedge."""
    check_prime(p)
    l = Partition(l)
    d = dim_permutation_module(l)
    if not 2 <= a <= d:
        raise DomainError(f"exterior power needs 2 <= a <= dim M^lambda = {d}, got a = {a}")
    if l.n < p:
        return True
    for fixed, moved in m_values(l, p):
        for y in range(a // p + 1):
            x = a - p * y
            if fixed >= x and moved >= p * y:
                return False
    return True


def f_lambda(l: Partition) -> int:
    """Number of tabloids moved by the transposition (1,2)."""
    l = Partition(l)
    n = l.n
    d = dim_permutation_module(l)
    long_rows = [i for i, x in enumerate(l) if x >= 2]
    if not long_rows:
        return math.factorial(n)
    fixed = 0
    for i in long_rows:
        rest = math.prod(math.factorial(x) for j, x in enumerate(l) if j != i)
        fixed += math.factorial(n - 2) // (math.factorial(l[i] - 2) * rest)
    return d - fixed


def two_row_indecomposable(n: int, k: int) -> bool:
    """Whether ``k`` satisfies the binary congruence that makes M^(n-k,k) indecomposable at p = 2.

    With ``2^m <= n < 2^(m+1)`` and ``2^(i-1) <= k < 2^i`` the condition is
    ``1 <= i <= m`` and ``k = (n - 2^m)/2 mod 2^(i-1)``.
    """
    if n < 2 or k < 1:
        return False
    m = n.bit_length() - 1
    i = k.bit_length()
    if i > m:
        return False
    return (k - (n - 2**m) // 2) % 2 ** (i - 1) == 0


def classify_ext_power(l: Partition, a: int, p: int) -> ModuleLabel:
    check_prime(p)
    l = Partition(l)
    n = l.n
    d = dim_permutation_module(l)
    if not 2 <= a <= d:
        raise DomainError(f"exterior power needs 2 <= a <= dim M^lambda = {d}, got a = {a}")
    if a == d:
        if p == 2 or f_lambda(l) % 4 == 0:
            return ModuleLabel("Trivial")
        return ModuleLabel("Sign")
    hook = l == (n - 1, 1)
    if p == 2 and n % 2 == 0 and a == d - 1 and len(l) == 2 and not hook:
        if two_row_indecomposable(n, l[1]):
            return ModuleLabel("Young", l)
    if hook and a < n and n % p == 0:
        if p > 2:
            b, r = divmod(a, p)
            return ModuleLabel("SignedYoung", Partition((n - a,) + (1,) * r), Partition((p * b,) if b else ()))
        if two_row_indecomposable(n, min(n - a, a)):
            return ModuleLabel("Young", Partition(sorted((n - a, a), reverse=True)))
    return ModuleLabel("Decomposable")


def is_indecomposable_sym_power(l: Partition, a: int) -> bool:
    if a < 2:
        raise DomainError(f"symmetric power needs a >= 2, got {a}")
    return len(Partition(l)) <= 1
