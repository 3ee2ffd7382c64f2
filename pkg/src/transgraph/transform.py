"""Classical and (r, s)-generalised transformation graphs.

A generalised transformation graph lives on ``r`` copies of V(Q) and ``s``
copies of E(Q). Three sign families decide adjacency:

* ``x[g]`` governs pairs inside vertex copy ``g`` (adjacent / non-adjacent in Q),
* ``y[h]`` governs pairs inside edge copy ``h`` (sharing / not sharing an endpoint),
* ``z[g][h]`` governs vertex-copy ``g`` against edge-copy ``h`` (incident / not).

Pairs in two different vertex copies, or two different edge copies, are never
adjacent.

Vertices of the result are numbered 1..r*n+s*m: vertex layers first, ordered
by (copy, original vertex), then edge layers ordered by (copy, edge id).
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import NamedTuple

from .errors import ValidationError
from .graph import Edge, Graph, canonical_edges


class Sign(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @classmethod
    def parse(cls, text: str) -> tuple[Sign, ...]:
        """``"+-+"`` -> ``(PLUS, MINUS, PLUS)``."""
        try:
            return tuple(cls(ch) for ch in text)
        except ValueError:
            raise ValidationError(f"sign string {text!r} may only contain '+' and '-'") from None


def signs_to_str(signs: Iterable[Sign]) -> str:
    return "".join(s.value for s in signs)


class Family(str, enum.Enum):
    """Uniform-incidence families with stated closed forms."""

    PLUS_INCIDENCE = "plus-incidence"
    MINUS_INCIDENCE = "minus-incidence"

    @property
    def incidence_sign(self) -> Sign:
        return Sign.PLUS if self is Family.PLUS_INCIDENCE else Sign.MINUS


@dataclass(frozen=True)
class TransformSpec:
    x: tuple[Sign, ...]
    y: tuple[Sign, ...]
    z: tuple[tuple[Sign, ...], ...]

    def __post_init__(self):
        if not self.x or not self.y:
            raise ValidationError("r and s must both be >= 1")
        if len(self.z) != len(self.x) or any(len(row) != len(self.y) for row in self.z):
            raise ValidationError(
                f"z must be {len(self.x)}x{len(self.y)}, got rows of lengths {[len(r) for r in self.z]}"
            )

    @property
    def r(self) -> int:
        return len(self.x)

    @property
    def s(self) -> int:
        return len(self.y)

    @classmethod
    def from_strings(cls, x: str, y: str, z: str) -> TransformSpec:
        """Build from sign strings; ``z`` is row-major with ``len(x) * len(y)`` characters."""
        xs, ys, zs = Sign.parse(x), Sign.parse(y), Sign.parse(z)
        r, s = len(xs), len(ys)
        if len(zs) != r * s:
            raise ValidationError(f"z needs r*s = {r * s} signs, got {len(zs)}")
        return cls(xs, ys, tuple(zs[i * s : (i + 1) * s] for i in range(r)))

    @classmethod
    def classical(cls, u: Sign, v: Sign, w: Sign) -> TransformSpec:
        return cls((u,), (v,), ((w,),))

    def flipped(self) -> TransformSpec:
        return TransformSpec(
            tuple(-a for a in self.x),
            tuple(-b for b in self.y),
            tuple(tuple(-c for c in row) for row in self.z),
        )

    def __str__(self) -> str:
        z = "".join(signs_to_str(row) for row in self.z)
        return f"r={self.r} s={self.s} x={signs_to_str(self.x)} y={signs_to_str(self.y)} z={z}"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    r: int
    s: int
    p: int
    q: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValidationError(f"r and s must be >= 1, got r={self.r}, s={self.s}")
        if not 0 <= self.p <= self.r:
            raise ValidationError(f"p={self.p} outside [0, r={self.r}]")
        if not 0 <= self.q <= self.s:
            raise ValidationError(f"q={self.q} outside [0, s={self.s}]")


class LabeledVertex(NamedTuple):
    kind: str  # "V" or "E"
    copy: int  # 1-based copy index g or h
    origin: int  # vertex id for "V", edge id (canonical position) for "E"


VERTEX = "V"
EDGE = "E"


def sign_vector(length: int, plus_positions: Iterable[int]) -> tuple[Sign, ...]:
    """``+`` at the given 1-based positions, ``-`` elsewhere."""
    chosen = set(plus_positions)
    if any(not 1 <= i <= length for i in chosen):
        raise ValidationError(f"positions {sorted(chosen)} outside [1, {length}]")
    return tuple(Sign.PLUS if i in chosen else Sign.MINUS for i in range(1, length + 1))


def leading_signs(length: int, count: int, barred: bool = False) -> tuple[Sign, ...]:
    """``x(p)``: ``+`` in the first ``count`` positions. ``barred`` swaps the signs."""
    if not 0 <= count <= length:
        raise ValidationError(f"count {count} outside [0, {length}]")
    vec = sign_vector(length, range(1, count + 1))
    return tuple(-a for a in vec) if barred else vec


def selected_signs(length: int, positions: Sequence[int], barred: bool = False) -> tuple[Sign, ...]:
    """``x(a(p))``: ``+`` exactly at the strictly increasing ``positions``."""
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ValidationError(f"positions must be strictly increasing, got {list(positions)}")
    vec = sign_vector(length, positions)
    return tuple(-a for a in vec) if barred else vec


def family_to_spec(fs: FamilySpec) -> TransformSpec:
    w = fs.family.incidence_sign
    return TransformSpec(
        leading_signs(fs.r, fs.p),
        leading_signs(fs.s, fs.q),
        tuple((w,) * fs.s for _ in range(fs.r)),
    )


def permute_copies(spec: TransformSpec, vperm: Sequence[int], eperm: Sequence[int]) -> TransformSpec:
    """Reindex copies: new vertex copy ``i`` is old copy ``vperm[i-1]`` (1-based), same for edges."""
    _check_perm(vperm, spec.r, "vperm")
    _check_perm(eperm, spec.s, "eperm")
    return TransformSpec(
        tuple(spec.x[g - 1] for g in vperm),
        tuple(spec.y[h - 1] for h in eperm),
        tuple(tuple(spec.z[g - 1][h - 1] for h in eperm) for g in vperm),
    )


def copy_relabeling(
    vperm: Sequence[int], eperm: Sequence[int]
) -> Callable[[LabeledVertex], LabeledVertex]:
    """Label map from the original construction onto the ``permute_copies`` one."""
    vinv = {old: new for new, old in enumerate(vperm, start=1)}
    einv = {old: new for new, old in enumerate(eperm, start=1)}

    def relabel(v: LabeledVertex) -> LabeledVertex:
        inv = vinv if v.kind == VERTEX else einv
        return LabeledVertex(v.kind, inv[v.copy], v.origin)

    return relabel


def _check_perm(perm: Sequence[int], size: int, name: str) -> None:
    if sorted(perm) != list(range(1, size + 1)):
        raise ValidationError(f"{name} {list(perm)} is not a permutation of 1..{size}")


@dataclass(frozen=True)
class TransformedGraph:
    """A constructed transformation graph plus its vertex labelling."""

    base: Graph
    spec: TransformSpec
    graph: Graph
    labels: tuple[LabeledVertex, ...]  # labels[i] names vertex id i + 1

    @cached_property
    def ids(self) -> dict[LabeledVertex, int]:
        return {lab: i for i, lab in enumerate(self.labels, start=1)}

    def degree_of(self, v: LabeledVertex) -> int:
        try:
            return self.graph.degrees[self.ids[v]]
        except KeyError:
            raise ValidationError(f"{v} is not a vertex of this construction") from None

    def labeled_edges(self) -> set[frozenset[LabeledVertex]]:
        lab = self.labels
        return {frozenset((lab[a - 1], lab[b - 1])) for a, b in self.graph.edges}

    def dot_label(self, v: LabeledVertex) -> str:
        if v.kind == VERTEX:
            return f"v{v.copy}_{v.origin}"
        a, b = self._base_edges[v.origin]
        return f"e{v.copy}_{a}-{b}"

    @cached_property
    def _base_edges(self) -> tuple[Edge, ...]:
        return canonical_edges(self.base)

    def to_dot(self, name: str = "G") -> str:
        names = [self.dot_label(v) for v in self.labels]
        lines = [f"graph {name} {{"]
        lines.extend(f'  "{nm}";' for nm in names)
        lines.extend(f'  "{names[a - 1]}" -- "{names[b - 1]}";' for a, b in sorted(self.graph.edges))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _labels(g: Graph, r: int, s: int) -> tuple[LabeledVertex, ...]:
    return tuple(LabeledVertex(VERTEX, c, a) for c in range(1, r + 1) for a in g.vertices) + tuple(
        LabeledVertex(EDGE, c, e) for c in range(1, s + 1) for e in range(g.m)
    )


def classical_transform(g: Graph, u: Sign, v: Sign, w: Sign) -> TransformedGraph:
    """Q^{uvw} on V(Q) ∪ E(Q), built pair by pair from the three adjacency rules.

    Deliberately independent of :func:`generalized_transform` so the two can
    cross-check each other at r = s = 1.
    """
    edges = canonical_edges(g)
    labels = _labels(g, 1, 1)
    n = g.n
    out = set()
    for i, j in combinations(range(len(labels)), 2):
        a, b = labels[i], labels[j]
        if a.kind == VERTEX and b.kind == VERTEX:
            related, sign = g.has_edge(a.origin, b.origin), u
        elif a.kind == EDGE and b.kind == EDGE:
            related, sign = bool(set(edges[a.origin]) & set(edges[b.origin])), v
        else:
            # a is always the vertex-layer element: vertex ids sort before edge ids
            related, sign = a.origin in edges[b.origin], w
        if related == (sign is Sign.PLUS):
            out.add((i + 1, j + 1))
    spec = TransformSpec.classical(u, v, w)
    return TransformedGraph(g, spec, Graph._trusted(n + g.m, frozenset(out)), labels)


class _BaseTables(NamedTuple):
    vadj: list[Edge]
    vnon: list[Edge]
    eadj: list[Edge]
    enon: list[Edge]
    inc: list[Edge]
    noninc: list[Edge]


@lru_cache(maxsize=256)
def _tables(g: Graph) -> _BaseTables:
    # Pair lists with 1-based vertex ids and 0-based edge ids.
    edges = canonical_edges(g)
    vadj, vnon = [], []
    for pair in combinations(g.vertices, 2):
        (vadj if pair in g.edges else vnon).append(pair)
    eadj, enon = [], []
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        shared = a == c or a == d or b == c or b == d
        (eadj if shared else enon).append((i, j))
    inc, noninc = [], []
    for alpha in g.vertices:
        for e, (a, b) in enumerate(edges):
            (inc if alpha == a or alpha == b else noninc).append((alpha, e))
    return _BaseTables(vadj, vnon, eadj, enon, inc, noninc)


def generalized_transform(g: Graph, spec: TransformSpec) -> TransformedGraph:
    """Q_rs^{xyz}."""
    n, m, r = g.n, g.m, spec.r
    t = _tables(g)
    out: set[Edge] = set()
    for gi, sign in enumerate(spec.x):
        off = gi * n
        out.update((a + off, b + off) for a, b in (t.vadj if sign is Sign.PLUS else t.vnon))
    ebase = r * n + 1
    for hi, sign in enumerate(spec.y):
        off = ebase + hi * m
        out.update((i + off, j + off) for i, j in (t.eadj if sign is Sign.PLUS else t.enon))
    for gi, row in enumerate(spec.z):
        voff = gi * n
        for hi, sign in enumerate(row):
            eoff = ebase + hi * m
            out.update((a + voff, e + eoff) for a, e in (t.inc if sign is Sign.PLUS else t.noninc))
    size = r * n + spec.s * m
    return TransformedGraph(g, spec, Graph._trusted(size, frozenset(out)), _labels(g, r, spec.s))


def expected_degree(g: Graph, spec: TransformSpec, v: LabeledVertex) -> int:
    """Degree of ``v`` in Q_rs^{xyz} predicted from base-graph degrees alone."""
    n, m, deg = g.n, g.m, g.degrees
    if v.kind == VERTEX and 1 <= v.copy <= spec.r and 1 <= v.origin <= n:
        d = deg[v.origin]
        own = d if spec.x[v.copy - 1] is Sign.PLUS else n - 1 - d
        return own + sum(d if z is Sign.PLUS else m - d for z in spec.z[v.copy - 1])
    if v.kind == EDGE and 1 <= v.copy <= spec.s and 0 <= v.origin < m:
        a, b = canonical_edges(g)[v.origin]
        nbrs = deg[a] + deg[b] - 2
        own = nbrs if spec.y[v.copy - 1] is Sign.PLUS else m - 1 - nbrs
        return own + sum(2 if row[v.copy - 1] is Sign.PLUS else n - 2 for row in spec.z)
    raise ValidationError(f"{v} is not a vertex of the transformed graph")


def family_degree(g: Graph, fs: FamilySpec, v: LabeledVertex) -> int:
    """Per-layer degree formulas of the uniform-incidence families."""
    n, m, deg = g.n, g.m, g.degrees
    r, s = fs.r, fs.s
    plus = fs.family is Family.PLUS_INCIDENCE
    if v.kind == VERTEX and 1 <= v.copy <= r and 1 <= v.origin <= n:
        d = deg[v.origin]
        if v.copy <= fs.p:
            return (s + 1) * d if plus else s * m + (1 - s) * d
        return (s - 1) * d + n - 1 if plus else n + s * m - 1 - (s + 1) * d
    if v.kind == EDGE and 1 <= v.copy <= s and 0 <= v.origin < m:
        a, b = canonical_edges(g)[v.origin]
        ends = deg[a] + deg[b]
        if v.copy <= fs.q:
            return ends + 2 * (r - 1) if plus else ends + r * (n - 2) - 2
        return m + 2 * r + 1 - ends if plus else m + r * (n - 2) + 1 - ends
    raise ValidationError(f"{v} is not a vertex of the transformed graph")
