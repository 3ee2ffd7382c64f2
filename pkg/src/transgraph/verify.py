"""Brute-force oracle harness for the closed-form M1 formulas.

The oracle is always the explicit construction followed by a direct sum of
squared degrees. Closed forms are judged against it, never against each other.
"""

from __future__ import annotations

import hashlib
import random
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import sympy

from .closed_form import (
    MINUS_CASES,
    PLUS_CASES,
    PRINTED_SYMBOL_READING,
    ClosedFormInput,
    Variant,
    _corollary1_printed,
    _corollary2_printed,
    _minus_derived,
    _minus_printed,
    _plus_derived,
    _plus_printed,
    case_pq,
    m1_minus_family,
    m1_plus_family,
)
from .errors import ValidationError
from .graph import Graph, all_graphs, complement, random_graph
from .indices import IndexBundle, first_zagreb, index_bundle
from .transform import (
    Family,
    FamilySpec,
    Sign,
    TransformedGraph,
    classical_transform,
    expected_degree,
    family_degree,
    family_to_spec,
    generalized_transform,
)

# Witness search enumerates every labelled graph; 2^10 graphs at n=5 is the ceiling.
MAX_WITNESS_N = 5


def fingerprint(g: Graph) -> dict:
    text = ";".join(f"{a}-{b}" for a, b in g.edge_list)
    return {"n": g.n, "m": g.m, "edges_sha256": hashlib.sha256(text.encode()).hexdigest()[:16]}


@dataclass(frozen=True)
class VerificationRecord:
    graph: dict
    family: str
    r: int
    s: int
    p: int
    q: int
    oracle: int
    derived: int
    as_printed: int
    derived_matches: bool
    printed_matches: bool
    delta_printed: int

    def as_dict(self) -> dict:
        return asdict(self)


def _closed_form(family: Family):
    return m1_plus_family if family is Family.PLUS_INCIDENCE else m1_minus_family


def _evaluate(
    g: Graph, fs: FamilySpec, bundle: IndexBundle | None = None
) -> tuple[VerificationRecord, TransformedGraph]:
    tg = generalized_transform(g, family_to_spec(fs))
    oracle = first_zagreb(tg.graph)
    inp = ClosedFormInput.from_bundle(bundle or index_bundle(g), fs.r, fs.s, fs.p, fs.q)
    formula = _closed_form(fs.family)
    derived = formula(inp, Variant.DERIVED)
    printed = formula(inp, Variant.AS_PRINTED)
    record = VerificationRecord(
        graph=fingerprint(g),
        family=fs.family.value,
        r=fs.r, s=fs.s, p=fs.p, q=fs.q,
        oracle=oracle,
        derived=derived,
        as_printed=printed,
        derived_matches=derived == oracle,
        printed_matches=printed == oracle,
        delta_printed=printed - oracle,
    )
    return record, tg


def verify_instance(g: Graph, fs: FamilySpec) -> VerificationRecord:
    return _evaluate(g, fs)[0]


def _degrees_agree(tg: TransformedGraph, fs: FamilySpec) -> bool:
    g, spec = tg.base, tg.spec
    actual = tg.graph.degrees
    return all(
        actual[i] == expected_degree(g, spec, lab) == family_degree(g, fs, lab)
        for i, lab in enumerate(tg.labels, start=1)
    )


def verify_degree_formulas(g: Graph, fs: FamilySpec) -> bool:
    """Row-form and per-layer family degree formulas both equal constructed degrees."""
    return _degrees_agree(generalized_transform(g, family_to_spec(fs)), fs)


SIGN_TRIPLES = tuple(Sign.parse(f"{u}{v}{w}") for u in "+-" for v in "+-" for w in "+-")


def verify_complement_pairs(g: Graph) -> bool:
    """Q^{uvw} and Q^{-u-v-w} are exact complements for all eight sign triples."""
    for triple in SIGN_TRIPLES:
        a = classical_transform(g, *triple)
        b = classical_transform(g, *(-t for t in triple))
        if a.labels != b.labels or complement(a.graph) != b.graph:
            return False
    return True


# -- erratum adjudication ----------------------------------------------------

_SYMBOLS = sympy.symbols("n m m1 m2 f r s p q", integer=True)
_SYM = dict(zip(("n", "m", "m1", "m2", "f", "r", "s", "p", "q"), _SYMBOLS))


@dataclass(frozen=True)
class PrintedFormula:
    """One published closed form: the general family formula or a boundary case."""

    family: Family
    case: str | None = None  # None: general (p, q); else e.g. "-++"

    @property
    def key(self) -> str:
        return f"{self.family.value}/{self.case or 'general'}"

    def applies(self, r: int, s: int, p: int, q: int) -> bool:
        return self.case is None or (p, q) == case_pq(self.case, r, s)

    def printed(self, b: IndexBundle, r: int, s: int, p: int, q: int) -> int:
        ClosedFormInput.from_bundle(b, r, s, p, q)  # validates ranges
        if self.case is None:
            kernel = _plus_printed if self.family is Family.PLUS_INCIDENCE else _minus_printed
            return kernel(b.n, b.m, b.m1, b.m2, b.f, r, s, p, q)
        kernel = _corollary1_printed if self.family is Family.PLUS_INCIDENCE else _corollary2_printed
        return kernel(self.case, b.n, b.m, b.m1, b.m2, b.f, r, s)

    def pq_choices(self, r: int, s: int) -> Iterable[tuple[int, int]]:
        if self.case is not None:
            yield case_pq(self.case, r, s)
            return
        for p in range(r + 1):
            for q in range(s + 1):
                yield p, q


ALL_FORMULAS = tuple(
    [PrintedFormula(Family.PLUS_INCIDENCE)]
    + [PrintedFormula(Family.PLUS_INCIDENCE, c) for c in PLUS_CASES]
    + [PrintedFormula(Family.MINUS_INCIDENCE)]
    + [PrintedFormula(Family.MINUS_INCIDENCE, c) for c in MINUS_CASES]
)


@lru_cache(maxsize=None)
def symbolic_delta(formula: PrintedFormula) -> sympy.Expr:
    """printed - derived as a factored polynomial in n, m, M1, M2, F, r, s (and p, q)."""
    S = _SYM
    if formula.case is None:
        pr, de = (
            (_plus_printed, _plus_derived)
            if formula.family is Family.PLUS_INCIDENCE
            else (_minus_printed, _minus_derived)
        )
        args = [S[k] for k in ("n", "m", "m1", "m2", "f", "r", "s", "p", "q")]
        return sympy.factor(sympy.expand(pr(*args) - de(*args)))
    p = S["r"] if formula.case[0] == "+" else 0
    q = S["s"] if formula.case[1] == "+" else 0
    base = [S[k] for k in ("n", "m", "m1", "m2", "f", "r", "s")]
    if formula.family is Family.PLUS_INCIDENCE:
        pr = _corollary1_printed(formula.case, *base)
        de = _plus_derived(*base, p, q)
    else:
        pr = _corollary2_printed(formula.case, *base)
        de = _minus_derived(*base, p, q)
    return sympy.factor(sympy.expand(pr - de))


@lru_cache(maxsize=None)
def _delta_fn(formula: PrintedFormula):
    return sympy.lambdify(_SYMBOLS, symbolic_delta(formula), modules=[])


def _delta_text(formula: PrintedFormula) -> str:
    expr = symbolic_delta(formula)
    return "0" if expr == 0 else str(expr)


def _oracle_m1(g: Graph, family: Family, r: int, s: int, p: int, q: int) -> int:
    return first_zagreb(generalized_transform(g, family_to_spec(FamilySpec(family, r, s, p, q))).graph)


def _witness_dict(g: Graph, r, s, p, q, oracle: int, value: int, label: str) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "edges": [list(e) for e in g.edge_list],
        "r": r, "s": s, "p": p, "q": q,
        "oracle": oracle,
        label: value,
        "delta": value - oracle,
    }


def minimal_printed_witness(
    formula: PrintedFormula, max_n: int, r_max: int, s_max: int
) -> dict | None:
    """Smallest graph (n, then m, then edge set) and parameters where the printed value misses the oracle."""
    for n in range(1, min(max_n, MAX_WITNESS_N) + 1):
        for g in all_graphs(n):
            b = index_bundle(g)
            for r in range(1, r_max + 1):
                for s in range(1, s_max + 1):
                    for p, q in formula.pq_choices(r, s):
                        value = formula.printed(b, r, s, p, q)
                        oracle = _oracle_m1(g, formula.family, r, s, p, q)
                        if value != oracle:
                            return _witness_dict(g, r, s, p, q, oracle, value, "printed")
    return None


def minimal_derived_counterexample(
    family: Family, max_n: int, r_max: int, s_max: int
) -> dict | None:
    formula = _closed_form(family)
    for n in range(1, min(max_n, MAX_WITNESS_N) + 1):
        for g in all_graphs(n):
            b = index_bundle(g)
            for r in range(1, r_max + 1):
                for s in range(1, s_max + 1):
                    for p in range(r + 1):
                        for q in range(s + 1):
                            value = formula(ClosedFormInput.from_bundle(b, r, s, p, q))
                            oracle = _oracle_m1(g, family, r, s, p, q)
                            if value != oracle:
                                return _witness_dict(g, r, s, p, q, oracle, value, "derived")
    return None


# -- sweep -------------------------------------------------------------------

@dataclass
class SweepReport:
    graph_count: int = 0
    records: list[VerificationRecord] = field(default_factory=list)
    family_stats: dict = field(default_factory=dict)
    failing: list[VerificationRecord] = field(default_factory=list)
    erratum: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    derived_counterexamples: list = field(default_factory=list)

    @property
    def trial_count(self) -> int:
        return len(self.records)

    @property
    def derived_ok(self) -> bool:
        return all(rec.derived_matches for rec in self.records)

    def summary(self) -> dict:
        return {
            "trial_count": self.trial_count,
            "graph_count": self.graph_count,
            "families": self.family_stats,
            "failing": [rec.as_dict() for rec in self.failing],
            "erratum": self.erratum,
            "checks": self.checks,
            "derived_counterexamples": self.derived_counterexamples,
        }


def _rate(hits: int, total: int) -> float | None:
    return hits / total if total else None


def sweep_graphs(
    graphs: Sequence[Graph],
    r_max: int,
    s_max: int,
    audit_degrees: bool = True,
    check_complements: bool = True,
    minimize: bool = True,
) -> SweepReport:
    """Evaluate every family, (r, s) in [1, r_max] x [1, s_max] and (p, q) in [0, r] x [0, s] on each graph.

    Records come out ordered by graph index, family, then (r, s, p, q).
    """
    if r_max < 1 or s_max < 1:
        raise ValidationError(f"r_max and s_max must be >= 1, got {r_max}, {s_max}")
    report = SweepReport(graph_count=len(graphs))
    degree_failures, complement_failures = [], []
    # (record, graph, bundle) for erratum classification
    evaluated: list[tuple[VerificationRecord, Graph, IndexBundle]] = []
    for gi, g in enumerate(graphs):
        bundle = index_bundle(g)
        if check_complements and not verify_complement_pairs(g):
            complement_failures.append({"graph_index": gi, **fingerprint(g)})
        for family in Family:
            for r in range(1, r_max + 1):
                for s in range(1, s_max + 1):
                    for p in range(r + 1):
                        for q in range(s + 1):
                            fs = FamilySpec(family, r, s, p, q)
                            rec, tg = _evaluate(g, fs, bundle)
                            if audit_degrees and not _degrees_agree(tg, fs):
                                degree_failures.append(
                                    {"graph_index": gi, "family": family.value, "r": r, "s": s, "p": p, "q": q}
                                )
                            report.records.append(rec)
                            evaluated.append((rec, g, bundle))

    for family in Family:
        recs = [rec for rec in report.records if rec.family == family.value]
        d_hits = sum(rec.derived_matches for rec in recs)
        p_hits = sum(rec.printed_matches for rec in recs)
        report.family_stats[family.value] = {
            "records": len(recs),
            "derived_matches": d_hits,
            "printed_matches": p_hits,
            "derived_match_rate": _rate(d_hits, len(recs)),
            "printed_match_rate": _rate(p_hits, len(recs)),
        }
    report.failing = [rec for rec in report.records if not (rec.derived_matches and rec.printed_matches)]
    report.checks = {
        "degree_audit": {"instances": len(report.records) if audit_degrees else 0, "failures": degree_failures},
        "complement_pairs": {
            "graphs": len(graphs) if check_complements else 0,
            "failures": complement_failures,
        },
    }
    report.erratum = _classify_errata(evaluated, r_max, s_max, minimize)
    if minimize:
        for family in Family:
            bad = [(rec, g) for rec, g, _ in evaluated if rec.family == family.value and not rec.derived_matches]
            if bad:
                worst_n = min(g.n for _, g in bad)
                witness = minimal_derived_counterexample(family, worst_n, r_max, s_max)
                if witness is None:
                    rec, g = min(bad, key=lambda t: (t[1].n, t[1].m))
                    witness = _witness_dict(g, rec.r, rec.s, rec.p, rec.q, rec.oracle, rec.derived, "derived")
                report.derived_counterexamples.append({"family": family.value, "witness": witness})
    return report


def _classify_errata(
    evaluated: list[tuple[VerificationRecord, Graph, IndexBundle]],
    r_max: int,
    s_max: int,
    minimize: bool,
) -> dict:
    out = {}
    for formula in ALL_FORMULAS:
        delta_fn = _delta_fn(formula)
        expr = _delta_text(formula)
        instances = mismatches = 0
        observed: dict[str, int] = {}
        worst: tuple[VerificationRecord, Graph] | None = None
        for rec, g, b in evaluated:
            if rec.family != formula.family.value or not formula.applies(rec.r, rec.s, rec.p, rec.q):
                continue
            instances += 1
            printed = formula.printed(b, rec.r, rec.s, rec.p, rec.q)
            if printed == rec.oracle:
                continue
            mismatches += 1
            explained = delta_fn(b.n, b.m, b.m1, b.m2, b.f, rec.r, rec.s, rec.p, rec.q)
            label = expr if explained == printed - rec.oracle else "unexplained"
            observed[label] = observed.get(label, 0) + 1
            if worst is None or (g.n, g.m) < (worst[1].n, worst[1].m):
                worst = (rec, g)
        entry = {
            "formula": formula.key,
            "instances": instances,
            "mismatches": mismatches,
            "status": "untested" if not instances else ("mismatching" if mismatches else "matching"),
            "symbolic_delta": expr,
            "observed_deltas": [{"expression": k, "count": v} for k, v in sorted(observed.items())],
            "witness": None,
        }
        if formula.family is Family.MINUS_INCIDENCE and formula.case is None:
            entry["symbol_reading"] = dict(PRINTED_SYMBOL_READING)
        if worst is not None:
            witness = None
            if minimize:
                witness = minimal_printed_witness(formula, worst[1].n, r_max, s_max)
            if witness is None:
                rec, g = worst
                b = index_bundle(g)
                witness = _witness_dict(
                    g, rec.r, rec.s, rec.p, rec.q, rec.oracle,
                    formula.printed(b, rec.r, rec.s, rec.p, rec.q), "printed",
                )
            entry["witness"] = witness
        out[formula.key] = entry
    return out


def sweep_graph_list(
    n_min: int, n_max: int, trials: int, edge_prob: float, seed: int, require_connected: bool = True
) -> list[Graph]:
    """The deterministic graph sequence used by :func:`sweep`."""
    if n_min < 1 or n_max < n_min:
        raise ValidationError(f"need 1 <= n_min <= n_max, got {n_min}, {n_max}")
    if trials < 0:
        raise ValidationError(f"trials must be >= 0, got {trials}")
    rng = random.Random(seed)
    graphs = []
    for _ in range(trials):
        n = rng.randint(n_min, n_max)
        graphs.append(random_graph(n, edge_prob, rng.getrandbits(64), require_connected))
    return graphs


def sweep(
    n_min: int,
    n_max: int,
    trials: int,
    edge_prob: float,
    seed: int,
    r_max: int,
    s_max: int,
    require_connected: bool = True,
) -> SweepReport:
    graphs = sweep_graph_list(n_min, n_max, trials, edge_prob, seed, require_connected)
    return sweep_graphs(graphs, r_max, s_max)
