"""Double-coset matrices and the Scott summands of S^2 M^lambda and Lambda^2 M^lambda.

Non-identity double cosets of the Young subgroup S_lambda in S_n correspond to
non-diagonal square matrices with row and column sums lambda.  Each matrix M
determines a p-subgroup P_M (built explicitly in :mod:`youngpowers.oracle`),
and the S_n-conjugacy class of P_M is read off from the base-p digits of the
entries of M.  Scott multiplicities are the sizes of these classes.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Iterator

from .errors import DomainError
from .partitions import Partition, check_prime, digits, format_parts, trim


class NatSeq(tuple):
    """Finitely supported sequence of nonnegative integers, trailing zeros dropped."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        return super().__new__(cls, trim(values))

    def __add__(self, other: Iterable[int]) -> "NatSeq":
        return NatSeq(x + y for x, y in itertools.zip_longest(self, other, fillvalue=0))

    def __str__(self) -> str:
        return format_parts(self) if self else "(0)"

    def __repr__(self) -> str:
        return f"NatSeq{tuple(self)!r}"


class NatMatrix(tuple):
    """Square matrix of nonnegative integers stored as a tuple of row tuples."""

    __slots__ = ()

    def __new__(cls, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise DomainError("matrix must be square")
        if any(not isinstance(x, int) or x < 0 for r in rows for x in r):
            raise DomainError("matrix entries must be nonnegative integers")
        return super().__new__(cls, rows)

    @property
    def side(self) -> int:
        return len(self)

    def transpose(self) -> "NatMatrix":
        return NatMatrix(zip(*self)) if self else self

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self) for j, x in enumerate(r) if i != j)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self))

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self for x in r)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(map(str, r)) for r in self) + "]"

    def __repr__(self) -> str:
        return f"NatMatrix({[list(r) for r in self]!r})"


def diagonal_matrix(l: Iterable[int]) -> NatMatrix:
    parts = list(l)
    return NatMatrix([[x if i == j else 0 for j in range(len(parts))] for i, x in enumerate(parts)])


def _matrices_with_margins(rows: tuple[int, ...], columns: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not rows:
        if not any(columns):
            yield []
        return
    first, rest = rows[0], rows[1:]
    room_below = [sum(rest)] * len(columns)

    def fill_row(j: int, left: int, remaining: list[int]) -> Iterator[list[int]]:
        if j == len(columns):
            if left == 0:
                yield []
            return
        # later rows must still be able to fill column j
        low = max(0, remaining[j] - room_below[j])
        for x in range(min(left, remaining[j]), low - 1, -1):
            for tail in fill_row(j + 1, left - x, remaining):
                yield [x] + tail

    for row in fill_row(0, first, list(columns)):
        left_columns = tuple(c - x for c, x in zip(columns, row))
        for lower in _matrices_with_margins(rest, left_columns):
            yield [tuple(row)] + lower


def enumerate_M_lambda(l: Partition) -> tuple[NatMatrix, ...]:
    """Non-diagonal matrices with row and column sums ``l``, in decreasing row-major order."""
    l = Partition(l)
    if len(l) <= 1:
        raise DomainError("lambda = (n) has a single double coset; the matrix set is empty")
    found = (NatMatrix(rows) for rows in _matrices_with_margins(tuple(l), tuple(l)))
    return tuple(sorted((M for M in found if not M.is_diagonal()), key=NatMatrix.flat, reverse=True))


def split_by_symmetry(l: Partition) -> tuple[tuple[NatMatrix, ...], tuple[NatMatrix, ...]]:
    """``(symmetric, representatives)``: the symmetric matrices, and one matrix per transpose pair.

    The representative of a pair is the one that comes first in decreasing row-major order.
    """
    matrices = enumerate_M_lambda(l)
    symmetric = tuple(M for M in matrices if M.is_symmetric())
    representatives = tuple(M for M in matrices if not M.is_symmetric() and M.flat() > M.transpose().flat())
    return symmetric, representatives


def digit_sequences(M: NatMatrix, p: int) -> tuple[NatSeq, NatSeq, NatSeq]:
    """Digit-count sequences ``(D, U, T)`` over the diagonal, strict upper triangle and all entries."""
    check_prime(p)
    M = NatMatrix(M)

    def count(entries: Iterable[int]) -> NatSeq:
        total = NatSeq()
        for x in entries:
            total = total + digits(x, p)
        return total

    m = M.side
    diagonal = count(M[i][i] for i in range(m))
    upper = count(M[i][j] for i in range(m) for j in range(i + 1, m))
    return diagonal, upper, count(M.flat())


def _upper_is_single_power(upper: NatSeq) -> bool:
    return sum(upper) == 1 and upper[-1] == 1


def is_young_PM(M: NatMatrix, p: int) -> bool:
    """Whether P_M is conjugate to a Sylow subgroup of a Young subgroup."""
    check_prime(p)
    M = NatMatrix(M)
    if p > 2 or not M.is_symmetric() or M.is_diagonal():
        return True
    return _upper_is_single_power(digit_sequences(M, p)[1])


def t_prime(M: NatMatrix, p: int) -> NatSeq:
    """Orbit-size counts of P_M: entry k is the number of orbits of size p^k."""
    M = NatMatrix(M)
    diagonal, upper, total = digit_sequences(M, p)
    if p == 2 and M.is_symmetric() and not M.is_diagonal() and _upper_is_single_power(upper):
        return diagonal + NatSeq([0] * len(upper) + [1])
    return total


@dataclasses.dataclass(frozen=True)
class ScottClassKey:
    """Conjugacy-class key of P_M: orbit counts when Young, else the (D, U) pair."""

    side: int
    young: bool
    seq: tuple[NatSeq, ...]

    def to_json(self) -> dict:
        seq = list(self.seq[0]) if self.young else [list(s) for s in self.seq]
        return {"young": self.young, "seq": seq}

    @classmethod
    def from_json(cls, data: dict, side: int) -> "ScottClassKey":
        if data["young"]:
            return cls(side, True, (NatSeq(data["seq"]),))
        return cls(side, False, tuple(NatSeq(s) for s in data["seq"]))

    def __str__(self) -> str:
        if self.young:
            return f"T'={self.seq[0]}"
        return f"D={self.seq[0]}, U={self.seq[1]}"


def scott_class_key(M: NatMatrix, p: int) -> ScottClassKey:
    M = NatMatrix(M)
    if is_young_PM(M, p):
        return ScottClassKey(M.side, True, (t_prime(M, p),))
    diagonal, upper, _ = digit_sequences(M, p)
    return ScottClassKey(M.side, False, (diagonal, upper))


def same_class(A: NatMatrix, B: NatMatrix, p: int) -> bool:
    if NatMatrix(A).side != NatMatrix(B).side:
        raise DomainError("class keys are only comparable for matrices of the same size")
    return scott_class_key(A, p) == scott_class_key(B, p)


def vertex_description(key: ScottClassKey, p: int) -> str:
    if not key.young:
        return f"wreath-type 2-group with {key}"
    orbit_sizes = [p**k for k, count in enumerate(key.seq[0]) for _ in range(count)]
    return f"Sylow_{p} of S_{format_parts(sorted(orbit_sizes, reverse=True))}"


@dataclasses.dataclass(frozen=True)
class ScottClass:
    key: ScottClassKey
    multiplicity: int
    members: tuple[NatMatrix, ...]

    def to_json(self) -> dict:
        return {
            "key": self.key.to_json(),
            "multiplicity": self.multiplicity,
            "members": [[list(r) for r in M] for M in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ScottClass":
        members = tuple(NatMatrix(M) for M in data["members"])
        side = members[0].side if members else 0
        return cls(ScottClassKey.from_json(data["key"], side), data["multiplicity"], members)


def scott_decomposition(l: Partition, kind: str, p: int) -> tuple[ScottClass, ...]:
    """Scott summands of S^2 M^l (``kind="sym"``) or Lambda^2 M^l (``kind="ext"``) with multiplicities.

    Members are listed in decreasing row-major order with the diagonal matrix
    last, and classes are ordered by their first member.
    """
    check_prime(p)
    l = Partition(l)
    if kind not in ("sym", "ext"):
        raise DomainError(f"kind must be 'sym' or 'ext', got {kind!r}")
    if len(l) <= 1:
        if kind == "ext":
            raise DomainError("exterior square undefined: lambda = (n) has a one-dimensional M^lambda")
        pool: tuple[NatMatrix, ...] = (diagonal_matrix(l),)
    else:
        symmetric, representatives = split_by_symmetry(l)
        if kind == "sym":
            pool = symmetric + representatives + (diagonal_matrix(l),)
        elif p == 2:
            pool = symmetric + representatives
        else:
            pool = representatives
    order = {M: i for i, M in enumerate(sorted(pool, key=lambda M: (M.is_diagonal(), [-x for x in M.flat()])))}
    classes: dict[ScottClassKey, list[NatMatrix]] = {}
    for M in sorted(pool, key=order.__getitem__):
        classes.setdefault(scott_class_key(M, p), []).append(M)
    return tuple(ScottClass(key, len(members), tuple(members)) for key, members in classes.items())


def hom_dims(l: Partition, p: int) -> tuple[int, int | None]:
    """Dimensions of the trivial-module Hom spaces into S^2 M^l and Lambda^2 M^l."""
    check_prime(p)
    l = Partition(l)
    if len(l) <= 1:
        return 1, None
    symmetric, representatives = split_by_symmetry(l)
    ext = len(symmetric) + len(representatives) if p == 2 else len(representatives)
    return 1 + len(symmetric) + len(representatives), ext
