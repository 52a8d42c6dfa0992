"""Graded elements over point, line, and surface with the residue
differential.

An element of weight m has three homogeneous parts, normalized by grouping:
a wedge over Q in degree m (point terms), a wedge over Q(t) in degree m+1
(curve terms), and a wedge over Q(x,y) in degree m+2 (surface terms). The
differential sends surface terms to the sum of their tame symbols over all
support divisors (including the two infinity lines) and curve terms to the
sum over places; point terms die. Surface inputs must present a strict
normal crossing support; no attempt is made to repair one that does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .atoms import AtomRegistry, MultVec, mult_vec, one_minus
from .errors import DegreeMismatch, MixedFields, NotStrictlyRegular
from .expressions import RatFunc
from .places import (Place1, SurfDivisor, chain_point, support, tame_symbol,
                     weil_sum)
from .snc import SncReport, snc_check
from .polynomials import BiPoly, UniPoly
from .wedges import (Wedge, retag, wedge_add, wedge_concat, wedge_of,
                     wedge_scale, wedge_str)

Q = Fraction


@dataclass(frozen=True)
class LambdaElem:
    """Weight-m element with point, curve, and surface parts."""

    m: int
    point: Wedge
    curve: Wedge
    surface: Wedge

    @staticmethod
    def make(m: int, point: Wedge | None = None, curve: Wedge | None = None,
             surface: Wedge | None = None) -> "LambdaElem":
        point = point if point is not None else Wedge.zero("Q", m)
        curve = curve if curve is not None else Wedge.zero("Qt", m + 1)
        surface = surface if surface is not None else Wedge.zero("Qxy", m + 2)
        if point.field != "Q" or curve.field != "Qt" or surface.field != "Qxy":
            raise MixedFields(
                f"parts must live over Q / Q(t) / Q(x,y), got "
                f"{point.field}/{curve.field}/{surface.field}")
        if (point.degree, curve.degree, surface.degree) != (m, m + 1, m + 2):
            raise DegreeMismatch(
                f"weight {m} needs degrees {(m, m + 1, m + 2)}, got "
                f"{(point.degree, curve.degree, surface.degree)}")
        return LambdaElem(m, point, curve, surface)

    @staticmethod
    def zero(m: int) -> "LambdaElem":
        return LambdaElem.make(m)

    @property
    def is_zero(self) -> bool:
        return self.point.is_zero and self.curve.is_zero \
            and self.surface.is_zero

    def add(self, other: "LambdaElem") -> "LambdaElem":
        if self.m != other.m:
            raise DegreeMismatch(f"weight {self.m} vs {other.m}")
        return LambdaElem(self.m, wedge_add(self.point, other.point),
                          wedge_add(self.curve, other.curve),
                          wedge_add(self.surface, other.surface))

    def scale(self, c) -> "LambdaElem":
        return LambdaElem(self.m, wedge_scale(self.point, c),
                          wedge_scale(self.curve, c),
                          wedge_scale(self.surface, c))


def lambda_str(e: LambdaElem) -> str:
    parts = []
    if not e.surface.is_zero:
        parts.append(f"[S: {wedge_str(e.surface)}]")
    if not e.curve.is_zero:
        parts.append(f"[P1: {wedge_str(e.curve)}]")
    if not e.point.is_zero:
        parts.append(f"[pt: {wedge_str(e.point)}]")
    body = " + ".join(parts) if parts else "0"
    return f"m={e.m}; {body}"


# ---------------------------------------------------------------------------
# the differential and its square
# ---------------------------------------------------------------------------


def _surface_to_curve(w: Wedge, reg: AtomRegistry) -> Wedge:
    report = snc_check(w)
    if not report.ok:
        lines = "; ".join(f"{p.kind} at {p.where}" for p in report.problems)
        raise NotStrictlyRegular(f"surface support is not SNC: {lines}")
    total = Wedge.zero("Qt", w.degree - 1)
    for d in support(w):
        total = wedge_add(total, tame_symbol(w, d, reg))
    return total


def differential(e: LambdaElem, reg: AtomRegistry) -> LambdaElem:
    """Divisor-and-place sum of tame symbols, graded piece by piece."""
    new_curve = Wedge.zero("Qt", e.m + 1)
    if not e.surface.is_zero:
        new_curve = _surface_to_curve(e.surface, reg)
    new_point = weil_sum(e.curve, reg) if not e.curve.is_zero \
        else Wedge.zero("Q", e.m)
    return LambdaElem.make(e.m, point=new_point, curve=new_curve)


def d_squared_check(e: LambdaElem, reg: AtomRegistry) -> LambdaElem:
    """differential applied twice; reciprocity says this is 0."""
    return differential(differential(e, reg), reg)


# ---------------------------------------------------------------------------
# chain-level cancellation: the per-point refinement of d^2 = 0
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainGroup:
    point: str
    members: int
    nonzero: int
    sum_is_zero: bool

    @property
    def ok(self) -> bool:
        return self.sum_is_zero and self.nonzero in (0, 2)


@dataclass
class ParshinReport:
    ok: bool
    groups: list[ChainGroup]


def parshin_check(w: Wedge, reg: AtomRegistry) -> ParshinReport:
    """Group the double residues of a strictly regular surface wedge by the
    surface point their chain passes through; each group must cancel on its
    own, with either zero or exactly two nonzero contributions."""
    report = snc_check(w)
    if not report.ok:
        raise NotStrictlyRegular("chain grouping needs an SNC support")
    buckets: dict = {}
    for d in support(w):
        ts_d = tame_symbol(w, d, reg)
        if ts_d.is_zero:
            continue
        for v in support(ts_d):
            key = chain_point(d, v)
            contribution = tame_symbol(ts_d, v, reg)
            buckets.setdefault(key, []).append(contribution)
    groups = []
    for key in sorted(buckets, key=_chain_key_sort):
        contributions = buckets[key]
        total = Wedge.zero("Q", w.degree - 2)
        nonzero = 0
        for c in contributions:
            total = wedge_add(total, c)
            if not c.is_zero:
                nonzero += 1
        groups.append(ChainGroup(_chain_key_str(key), len(contributions),
                                 nonzero, total.is_zero))
    return ParshinReport(ok=all(g.ok for g in groups), groups=groups)


def _chain_key_sort(key) -> tuple:
    def ck(v):
        if isinstance(v, Fraction):
            return (0, v)
        return (1, str(v))
    if isinstance(key, tuple) and len(key) == 2:
        return (0, ck(key[0]), ck(key[1]))
    return (1, str(key))


def _chain_key_str(key) -> str:
    if isinstance(key, tuple) and len(key) == 2 \
            and not isinstance(key[0], str):
        from .expressions import INF
        xs = "inf" if key[0] is INF else str(key[0])
        ys = "inf" if key[1] is INF else str(key[1])
        return f"({xs}, {ys})"
    return str(key)


# ---------------------------------------------------------------------------
# vanishing shadow and the blow-up probe
# ---------------------------------------------------------------------------


def bs_vanishing_check(f: RatFunc, g: RatFunc, cbar: Wedge,
                       reg: AtomRegistry) -> bool:
    """d[P1, f ^ g ^ cbar] = 0: any curve wedge with at most two
    nonconstant slots has vanishing differential, because the constant
    cofactors ride along every residue and reciprocity kills the rest."""
    if cbar.field != "Q":
        raise MixedFields("the tail must be a constant wedge over Q")
    head = wedge_of([mult_vec(f, reg), mult_vec(g, reg)])
    w = wedge_concat(head, retag(cbar, "Qt"))
    return weil_sum(w, reg).is_zero


def blowup_residue(w: Wedge, center: tuple[Fraction, Fraction],
                   reg: AtomRegistry) -> Wedge:
    """Residue along the exceptional curve of one blow-up chart.

    The chart is x = c1 + u, y = c2 + u v after moving the center to the
    origin; the exceptional curve is u = 0 with coordinate v. Every atom
    pulls back to u^k * (g_k(v) + O(u)) with g_k nonzero, so the
    single-uniformizer residue rule applies with unit classes [g_k(v)].
    """
    c1, c2 = Q(center[0]), Q(center[1])
    xv = BiPoly.make({(0, 0): c1, (1, 0): 1})
    yv = BiPoly.make({(0, 0): c2, (1, 1): 1})
    pulled: dict = {}

    def pull(atom) -> tuple[int, MultVec]:
        if atom not in pulled:
            if not hasattr(atom, "poly") or not isinstance(atom.poly, BiPoly):
                pulled[atom] = (0, MultVec.make("Qv", {atom: Q(1)}))
            else:
                sub = atom.poly.substitute(xv, yv)
                k = min(i for (i, _), _ in sub.terms)
                layer = {j: c for (i, j), c in sub.terms if i == k}
                n = max(layer)
                gk = UniPoly.make([layer.get(s, Q(0)) for s in range(n + 1)])
                pulled[atom] = (k, mult_vec(RatFunc.make(gk), reg, "Qv"))
        return pulled[atom]

    total = Wedge.zero("Qv", w.degree - 1)
    for key, coeff in w.terms:
        data = [pull(a) for a in key]
        if all(k == 0 for k, _ in data):
            continue
        if w.degree == 1:
            total = wedge_add(total, Wedge.scalar("Qv", coeff * data[0][0]))
            continue
        for i, (k, _) in enumerate(data):
            if k == 0:
                continue
            cof = wedge_of([data[j][1] for j in range(len(key)) if j != i])
            sign = -1 if i % 2 else 1
            total = wedge_add(total, wedge_scale(cof, coeff * k * sign))
    return total


def blowup_as_curve(w: Wedge) -> Wedge:
    """Reinterpret a residue over Q(v) as a curve wedge over Q(t) so the
    curve differential can consume it."""
    return retag(w, "Qt")


# ---------------------------------------------------------------------------
# named curve elements
# ---------------------------------------------------------------------------


def totaro_wedge(a, consts, reg: AtomRegistry) -> Wedge:
    """t ^ (1-t) ^ (1-a/t) ^ cbar over Q(t) for a rational a outside
    {0, 1}; consts is the tuple of nonzero constant slots."""
    a = Q(a)
    if a in (0, 1):
        raise ValueError("parameter must avoid 0 and 1")
    t = RatFunc.var()
    slots = [mult_vec(t, reg), one_minus(t, reg),
             one_minus(RatFunc.const(a) / t, reg)]
    for c in consts:
        slots.append(mult_vec(Q(c), reg, "Qt"))
    return wedge_of(slots)


def totaro_element(a, consts, reg: AtomRegistry) -> LambdaElem:
    m = 2 + len(tuple(consts))
    return LambdaElem.make(m, curve=totaro_wedge(a, consts, reg))
