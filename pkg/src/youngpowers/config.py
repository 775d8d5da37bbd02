"""Size limits for the exhaustive computations.

The defaults keep every brute-force routine well inside laptop territory.
Callers may adjust them through :func:`limits` or by assigning attributes on
:data:`LIMITS` directly.
"""

from __future__ import annotations

import contextlib
import copy
import dataclasses
from typing import Iterator


@dataclasses.dataclass
class Limits:
    # largest degree n for which tabloids are materialized
    tabloid_degree: int = 12
    # largest group order enumerated element by element
    group_elements: int = 10**6
    # search nodes explored by the Donkin summand test
    donkin_nodes: int = 10**7
    # largest n for which the oracle enumerates all of S_n
    oracle_degree: int = 8
    # largest n for the elementary abelian search, per prime
    elementary_abelian_degree: dict[int, int] = dataclasses.field(
        default_factory=lambda: {2: 6, 3: 7}
    )
    # largest dim M^lambda for which multisets of tabloids are scanned one by one
    scan_dimension: int = 12


LIMITS = Limits()


@contextlib.contextmanager
def limits(**overrides) -> Iterator[Limits]:
    """Temporarily override fields of :data:`LIMITS`."""
    saved = copy.deepcopy(LIMITS)
    try:
        for key, value in overrides.items():
            if not hasattr(LIMITS, key):
                raise AttributeError(f"unknown limit {key!r}")
            setattr(LIMITS, key, value)
        yield LIMITS
    finally:
        for field in dataclasses.fields(Limits):
            setattr(LIMITS, field.name, getattr(saved, field.name))
