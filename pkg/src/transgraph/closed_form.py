"""Closed-form M1 of the uniform-incidence families Q_rs^{x(p)y(q)±}.

Every formula exists in two variants:

``AS_PRINTED``
    The published display, symbol for symbol. In the general minus-incidence formula
    the undefined symbols ``a`` and ``b`` are read as ``n`` and ``m``.
``DERIVED``
    Squares of the per-layer degree formulas summed over the layers, using
    sum_{edges}(d(u)+d(v)) = M1 and sum_{edges}(d(u)+d(v))^2 = F + 2*M2.

The ``_*`` kernels are plain arithmetic over their arguments, so they evaluate
on ints and on sympy symbols alike.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ValidationError
from .indices import IndexBundle

# Undefined symbols in the printed general minus-incidence formula and their reading.
PRINTED_SYMBOL_READING = {"a": "n", "b": "m"}

PLUS_CASES = ("+++", "+-+", "-++", "--+")
MINUS_CASES = ("++-", "+--", "-+-", "---")


class Variant(str, enum.Enum):
    AS_PRINTED = "as-printed"
    DERIVED = "derived"


@dataclass(frozen=True)
class ClosedFormInput:
    n: int
    m: int
    m1: int
    m2: int
    f: int
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

    @classmethod
    def from_bundle(cls, b: IndexBundle, r: int, s: int, p: int, q: int) -> ClosedFormInput:
        return cls(b.n, b.m, b.m1, b.m2, b.f, r, s, p, q)

    def args(self) -> dict:
        return dict(
            n=self.n, m=self.m, m1=self.m1, m2=self.m2, f=self.f,
            r=self.r, s=self.s, p=self.p, q=self.q,
        )


# -- plus incidence ----------------------------------------------------------

def _plus_printed(n, m, m1, m2, f, r, s, p, q):
    k = m + 2 * r + 1
    coeff = p * (s + 1) ** 2 + (r - p) * (s - 1) ** 2 + 4 * q * (r - 1) + 2 * (q - s) * k
    return (
        coeff * m1
        + 2 * s * m2
        + s * f
        + (r - p) * (n * (n - 1) ** 2 + 2 * m * (n - 1) * (s - 1))
        + m * q * (2 * r - 2) ** 2
        + m * (s - q) * k**2
    )


def _plus_derived(n, m, m1, m2, f, r, s, p, q):
    # vertex copy g<=p: (s+1)d        vertex copy g>p: (s-1)d + n-1
    # edge copy h<=q:   D + 2(r-1)    edge copy h>q:   (m+2r+1) - D,  D = d(u)+d(v)
    k = m + 2 * r + 1
    edge_sq = f + 2 * m2
    return (
        p * (s + 1) ** 2 * m1
        + (r - p) * ((s - 1) ** 2 * m1 + 2 * (s - 1) * (n - 1) * (2 * m) + n * (n - 1) ** 2)
        + q * (edge_sq + 2 * 2 * (r - 1) * m1 + m * (2 * (r - 1)) ** 2)
        + (s - q) * (edge_sq - 2 * k * m1 + m * k**2)
    )


def _corollary1_printed(case, n, m, m1, m2, f, r, s):
    k = m + 2 * r + 1
    common = 2 * s * m2 + s * f
    if case == "+++":
        return (r * (s**2 + 6 * s + 1) - 4 * s) * m1 + common + 4 * m * s * (r - 1) ** 2
    if case == "+-+":
        return (r * (s + 1) ** 2 - 2 * s * k) * m1 + common + m * s * k**2
    if case == "-++":
        return (
            (r * (s - 1) ** 2 - 2 * s * k) * m1 + common
            + n * r * (n - 1) ** 2 + 2 * m * r * (n - 1) * (s - 1) + 4 * m * s * (r - 1) ** 2
        )
    if case == "--+":
        return (
            (r * (s - 1) ** 2 - 4 * s * r - 4 * s) * m1 + common
            + n * r * (n - 1) ** 2 + 2 * m * r * (n - 1) * (s - 1) + m * s * k**2
        )
    raise ValidationError(f"unknown plus-incidence case {case!r}")


# -- minus incidence ---------------------------------------------------------

def _minus_printed(n, m, m1, m2, f, r, s, p, q):
    a, b = n, m  # see PRINTED_SYMBOL_READING
    coeff = (
        p * (1 - s) ** 2
        + (r - p) * (s + 1) ** 2
        + 2 * q * (n * r - 2 * r - 2)
        + 2 * (q - s) * (m + r * (a - 2) + 1)
    )
    return (
        coeff * m1
        + 2 * s * m2
        + s * f
        + (r - p) * (n * (n + s * b - 1) ** 2 - 4 * m * (n + s * m - 1) * (s + 1))
        + p * s * m**2 * (n * s + 4 * (1 - s))
        + m * q * (n * r - 2 * r - 2) ** 2
        + m * (s - q) * (m + r * (n - 2) + 1) ** 2
    )


def _minus_derived(n, m, m1, m2, f, r, s, p, q):
    # vertex copy g<=p: s*m + (1-s)d           vertex copy g>p: (n+s*m-1) - (s+1)d
    # edge copy h<=q:   D + r(n-2) - 2         edge copy h>q:   (m+r(n-2)+1) - D
    big = n + s * m - 1
    shift = r * (n - 2) - 2
    k = m + r * (n - 2) + 1
    edge_sq = f + 2 * m2
    return (
        p * ((1 - s) ** 2 * m1 + 2 * s * m * (1 - s) * (2 * m) + n * (s * m) ** 2)
        + (r - p) * ((s + 1) ** 2 * m1 - 2 * big * (s + 1) * (2 * m) + n * big**2)
        + q * (edge_sq + 2 * shift * m1 + m * shift**2)
        + (s - q) * (edge_sq - 2 * k * m1 + m * k**2)
    )


def _corollary2_printed(case, n, m, m1, m2, f, r, s):
    t = n * r - 2 * r - 2
    k = m + r * (n - 2) + 1
    common = 2 * s * m2 + s * f
    if case == "++-":
        return (
            (r * (1 - s) ** 2 + 2 * s * t) * m1 + common
            + n * r * m**2 * s**2 + 4 * r * s * m**2 * (1 - s) + s * m * t**2
        )
    if case == "+--":
        return (
            (r * (1 - s) ** 2 - 2 * s * k) * m1 + common
            + n * r * m**2 * s**2 + 4 * r * s * m**2 * (1 - s) + s * m * k**2
        )
    if case == "-+-":
        return (
            (r * (s + 1) ** 2 + 2 * s * t) * m1 + common
            + n * r * (n + s * m - 1) ** 2 - 4 * m * r * (s + 1) * (n + s * m - 1) + m * s * t**2
        )
    if case == "---":
        return (
            (r * (s + 1) ** 2 - 2 * s * k) * m1 + common
            + n * r * (n + s * m - 1) ** 2 - 4 * m * r * (n + m * s - 1) * (s + 1) + m * s * k**2
        )
    raise ValidationError(f"unknown minus-incidence case {case!r}")


# -- public API --------------------------------------------------------------

def m1_plus_family(inp: ClosedFormInput, variant: Variant = Variant.DERIVED) -> int:
    """M1 of Q_rs^{x(p)y(q)+}."""
    kernel = _plus_derived if Variant(variant) is Variant.DERIVED else _plus_printed
    return kernel(**inp.args())


def m1_minus_family(inp: ClosedFormInput, variant: Variant = Variant.DERIVED) -> int:
    """M1 of Q_rs^{x(p)y(q)-}."""
    kernel = _minus_derived if Variant(variant) is Variant.DERIVED else _minus_printed
    return kernel(**inp.args())


def case_pq(case: str, r: int, s: int) -> tuple[int, int]:
    """(p, q) implied by a named case such as ``"-++"``."""
    return (r if case[0] == "+" else 0, s if case[1] == "+" else 0)


def _check_case(inp: ClosedFormInput, case: str, cases: tuple[str, ...]) -> None:
    if case not in cases:
        raise ValidationError(f"case {case!r} not one of {cases}")
    if (inp.p, inp.q) != case_pq(case, inp.r, inp.s):
        raise ValidationError(
            f"case {case!r} requires (p, q) = {case_pq(case, inp.r, inp.s)}, got ({inp.p}, {inp.q})"
        )


def corollary_plus(inp: ClosedFormInput, case: str, variant: Variant = Variant.DERIVED) -> int:
    _check_case(inp, case, PLUS_CASES)
    if Variant(variant) is Variant.DERIVED:
        return m1_plus_family(inp, Variant.DERIVED)
    return _corollary1_printed(case, inp.n, inp.m, inp.m1, inp.m2, inp.f, inp.r, inp.s)


def corollary_minus(inp: ClosedFormInput, case: str, variant: Variant = Variant.DERIVED) -> int:
    _check_case(inp, case, MINUS_CASES)
    if Variant(variant) is Variant.DERIVED:
        return m1_minus_family(inp, Variant.DERIVED)
    return _corollary2_printed(case, inp.n, inp.m, inp.m1, inp.m2, inp.f, inp.r, inp.s)
