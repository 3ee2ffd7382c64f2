"""Simple undirected graphs on 1-based contiguous vertex ids.

A :class:`Graph` is immutable. Edges are stored as ``(a, b)`` tuples with
``a < b``; the canonical edge order (lexicographic on those tuples) gives every
edge a stable integer id, its position in :func:`canonical_edges`.
"""

from __future__ import annotations

import random
import warnings
from collections import deque
from collections.abc import Iterable, Iterator
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import DuplicateEdgeWarning, GenerationError, ParseError, ValidationError

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph with vertices ``1..n``."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValidationError(f"vertex count must be >= 0, got {n}")
        normalized = set()
        for edge in edges:
            a, b = edge
            if a == b:
                raise ValidationError(f"self-loop at vertex {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValidationError(f"edge ({a}, {b}) has an endpoint outside [1, {n}]")
            normalized.add((a, b) if a < b else (b, a))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(normalized)

    @classmethod
    def _trusted(cls, n: int, edges: frozenset[Edge]) -> Graph:
        # Skips validation; callers guarantee normalized, in-range, loop-free pairs.
        g = cls.__new__(cls)
        g.n = n
        g.edges = edges
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex id; slot 0 is an unused empty set."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in canonical order; see :func:`canonical_edges`."""
        return tuple(sorted(self.edges))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex id; slot 0 is 0."""
        deg = [0] * (self.n + 1)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"


def canonical_edges(g: Graph) -> tuple[Edge, ...]:
    """Edges sorted by (min endpoint, max endpoint); position i is edge id i."""
    return g.edge_list


def degree(g: Graph, v: int) -> int:
    if not 1 <= v <= g.n:
        raise ValidationError(f"vertex {v} outside [1, {g.n}]")
    return g.degrees[v]


def complement(g: Graph) -> Graph:
    edges = frozenset(pair for pair in combinations(range(1, g.n + 1), 2) if pair not in g.edges)
    return Graph._trusted(g.n, edges)


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one vertex, otherwise BFS from vertex 1."""
    if g.n <= 1:
        return True
    seen = {1}
    queue = deque([1])
    adj = g.adjacency
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``a b`` pairs.

    Blank lines and lines starting with ``#`` are skipped. Repeated edges
    (in either orientation) are collapsed with a :class:`DuplicateEdgeWarning`.

    Raises:
        ParseError: malformed header or edge line, or wrong number of edge lines.
        ValidationError: loops or endpoints outside ``[1, n]``.
    """
    header: tuple[int, int] | None = None
    pairs: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(f"negative count in header {line!r}", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise ValidationError(f"line {lineno}: self-loop at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValidationError(f"line {lineno}: endpoint outside [1, {n}] in {line!r}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            warnings.warn(
                f"line {lineno}: edge {key[0]}-{key[1]} repeats line {seen[key]}; collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            pairs.append(key)
            continue
        seen[key] = lineno
        pairs.append(key)
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(pairs) != header[1]:
        raise ParseError(f"header declares {header[1]} edges but {len(pairs)} edge lines follow")
    return Graph(header[0], seen)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize ``g`` in the format read by :func:`parse_edge_list`."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{a} {b}" for a, b in canonical_edges(g))
    return "\n".join(lines) + "\n"


def random_graph(
    n: int,
    edge_prob: float | Fraction,
    seed: int,
    require_connected: bool = True,
    max_tries: int = 1000,
) -> Graph:
    """G(n, p) sample from a ``random.Random(seed)`` stream.

    Pairs are visited in canonical order. With ``require_connected`` the draw
    is repeated (continuing the same stream) until a connected graph appears.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if not 0 <= edge_prob <= 1:
        raise ValidationError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    threshold = float(edge_prob)
    for _ in range(max_tries):
        g = Graph._trusted(n, frozenset(pq for pq in pairs if rng.random() < threshold))
        if not require_connected or is_connected(g):
            return g
    raise GenerationError(
        f"no connected graph with n={n}, edge_prob={edge_prob} after {max_tries} tries"
    )


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, by edge count then lexicographic edge set."""
    pairs = list(combinations(range(1, n + 1), 2))
    for k in range(len(pairs) + 1):
        for chosen in combinations(pairs, k):
            yield Graph._trusted(n, frozenset(chosen))
