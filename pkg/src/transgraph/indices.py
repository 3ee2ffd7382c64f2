"""Degree-based topological indices, computed in exact integers.

M1 is the sum of squared degrees, F the sum of cubed degrees, and M2 the sum
over edges of the product of endpoint degrees.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import IndexOverflowError
from .graph import Graph

INT64_MAX = 2**63 - 1


def _checked(value: int, name: str) -> int:
    # Python ints never wrap; enforce the 64-bit contract explicitly.
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise IndexOverflowError(f"{name} = {value} exceeds the signed 64-bit range")
    return value


@dataclass(frozen=True)
class IndexBundle:
    n: int
    m: int
    m1: int
    m2: int
    f: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def first_zagreb(g: Graph) -> int:
    return _checked(sum(d * d for d in g.degrees), "M1")


def second_zagreb(g: Graph) -> int:
    deg = g.degrees
    return _checked(sum(deg[a] * deg[b] for a, b in g.edges), "M2")


def forgotten(g: Graph) -> int:
    return _checked(sum(d * d * d for d in g.degrees), "F")


def index_bundle(g: Graph) -> IndexBundle:
    deg = g.degrees
    m1 = f = 0
    for d in deg:
        sq = d * d
        m1 += sq
        f += sq * d
    m2 = sum(deg[a] * deg[b] for a, b in g.edges)
    return IndexBundle(
        n=g.n,
        m=g.m,
        m1=_checked(m1, "M1"),
        m2=_checked(m2, "M2"),
        f=_checked(f, "F"),
    )
