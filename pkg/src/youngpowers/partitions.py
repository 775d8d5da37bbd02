"""Partitions and compositions as immutable integer tuples.

A :class:`Composition` is any finite sequence of nonnegative integers and a
:class:`Partition` is a composition whose parts are positive and
non-increasing.  Both are plain tuples underneath, so equality and hashing are
structural and the empty tuple plays the role of the empty partition.
"""

from __future__ import annotations

import dataclasses
import itertools
import re
from typing import Iterable, Iterator

from .errors import DomainError

EMPTY_SYMBOL = "∅"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, int(p**0.5) + 1))


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"p must be a prime, got {p!r}")
    return p


class Composition(tuple):
    """A finite sequence of nonnegative integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise DomainError(f"parts must be nonnegative integers, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{tuple(self)!r}"

    def __str__(self) -> str:
        return format_parts(self)


class Partition(Composition):
    """A non-increasing sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(x == 0 for x in self):
            raise DomainError(f"a partition has positive parts, got {tuple(self)!r}")
        if any(a < b for a, b in zip(self, self[1:])):
            raise DomainError(f"partition parts must be non-increasing, got {tuple(self)!r}")
        return self


def rearrange(c: Iterable[int]) -> Partition:
    """Sort the nonzero parts of ``c`` into a partition."""
    return Partition(sorted((x for x in c if x), reverse=True))


def union(a: Iterable[int], b: Iterable[int]) -> Partition:
    return rearrange(itertools.chain(a, b))


def add(a: Iterable[int], b: Iterable[int]) -> Composition:
    """Componentwise sum, the shorter sequence padded with zeros."""
    return Composition(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0))


def scale(k: int, c: Iterable[int]) -> Composition:
    return Composition(k * x for x in c)


def trim(c: Iterable[int]) -> tuple[int, ...]:
    parts = list(c)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """Whether ``a`` is dominated by ``b``."""
    if sum(a) != sum(b):
        raise DomainError(f"dominance compares partitions of equal size, got {a} and {b}")
    total_a = total_b = 0
    for x, y in itertools.zip_longest(a, b, fillvalue=0):
        total_a += x
        total_b += y
        if total_a > total_b:
            return False
    return True


def is_p_restricted(l: Iterable[int], p: int) -> bool:
    parts = list(l) + [0]
    return all(x - y < p for x, y in zip(parts, parts[1:]))


def digits(x: int, p: int) -> list[int]:
    """Base-``p`` digits of ``x``, least significant first."""
    out = []
    while x:
        x, r = divmod(x, p)
        out.append(r)
    return out


@dataclasses.dataclass(frozen=True)
class PadicExpansion:
    """Layers ``lambda(0), lambda(1), ...`` with ``sum p**i lambda(i) == lambda``."""

    layers: tuple[Partition, ...]
    p: int

    def reconstruct(self) -> Partition:
        total: Composition = Composition()
        for i, layer in enumerate(self.layers):
            total = add(total, scale(self.p**i, layer))
        return Partition(total)

    def __getitem__(self, i: int) -> Partition:
        return self.layers[i] if i < len(self.layers) else Partition()


def padic_expansion(l: Partition, p: int) -> PadicExpansion:
    """Split ``l`` into p-restricted layers via the digits of its part differences."""
    check_prime(p)
    l = Partition(l)
    if not l:
        raise DomainError("the p-adic expansion needs a nonempty partition")
    differences = [x - y for x, y in zip(l, l[1:] + (0,))]
    difference_digits = [digits(d, p) for d in differences]
    depth = max(len(ds) for ds in difference_digits)
    layers = []
    for i in range(depth):
        column = [ds[i] if i < len(ds) else 0 for ds in difference_digits]
        # suffix sums turn digits of differences back into parts
        parts = list(itertools.accumulate(reversed(column)))[::-1]
        layers.append(Partition(trim(parts)))
    return PadicExpansion(tuple(layers), p)


def qr_split(l: Iterable[int], p: int) -> tuple[Composition, Composition]:
    """Return ``(q, r)`` with ``q_i = p * (l_i // p)`` and ``r_i = l_i % p``."""
    check_prime(p)
    q = Composition(p * (x // p) for x in l)
    r = Composition(x % p for x in l)
    return q, r


def rank_young(l: Iterable[int], p: int) -> int:
    """p-rank of the Young subgroup with the given row lengths."""
    check_prime(p)
    return sum(x // p for x in l)


def s_lambda(l: Partition, p: int) -> Partition:
    """Label of the Scott module summand of M^l, assembled from digit layers."""
    check_prime(p)
    l = Partition(l)
    part_digits = [digits(x, p) for x in l]
    depth = max((len(ds) for ds in part_digits), default=0)
    total: Composition = Composition()
    for c in range(depth):
        size = sum(ds[c] for ds in part_digits if c < len(ds))
        full, rest = divmod(size, p - 1)
        layer = rearrange([p - 1] * full + [rest])
        total = add(total, scale(p**c, layer))
    return Partition(total)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative number {n}")
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


def format_parts(c: Iterable[int], exponential: bool = True) -> str:
    """Render ``(4,2,2)`` as ``(4,2^2)``; the empty sequence prints as the empty-set sign."""
    parts = tuple(c)
    if not parts:
        return EMPTY_SYMBOL
    if not exponential:
        return "(" + ",".join(map(str, parts)) + ")"
    chunks = []
    for value, run in itertools.groupby(parts):
        count = len(list(run))
        chunks.append(f"{value}^{count}" if count > 1 else str(value))
    return "(" + ",".join(chunks) + ")"


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_composition(text: str) -> Composition:
    """Parse ``"5,4,2"``, ``"(4,2^2)"``, ``"∅"`` or ``""``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if body in ("", EMPTY_SYMBOL):
        return Composition()
    parts: list[int] = []
    for token in body.split(","):
        match = _TOKEN.match(token.strip())
        if match is None:
            raise DomainError(f"cannot parse {text!r} as a sequence of nonnegative integers")
        value, count = int(match.group(1)), int(match.group(2) or 1)
        parts.extend([value] * count)
    return Composition(parts)


def parse_partition(text: str) -> Partition:
    return Partition(parse_composition(text))
