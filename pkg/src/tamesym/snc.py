"""Strict normal crossing checker for configurations of rational divisors
on the product of two projective lines.

Every divisor in the supported vocabulary (vertical and horizontal lines,
graphs of rational functions in either direction) is smooth, so the two
things that can go wrong are a non-transversal pairwise meeting and three
or more divisors through one point. The checker enumerates a finite
candidate set that provably contains every intersection point: pairwise
finite solutions plus all boundary points (where a divisor meets the
infinity lines), then tests membership of every divisor at every candidate
through the four affine charts.

Points with algebraic coordinates are handled as clusters: an irreducible
polynomial q together with the other coordinate expressed as a rational
function of the first (or the infinite marker). Membership and
transversality are decided modulo q, which settles all conjugate points at
once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .expressions import INF, RatFunc, ratfunc_str
from .places import (GraphX, GraphY, HLine, SurfDivisor, VLine,
                     defining_bipoly, finite_support_divisors)
from .polynomials import BiPoly, UniPoly, factor_uni, poly_str
from .wedges import Wedge

Q = Fraction


@dataclass(frozen=True)
class ClusterX:
    """Conjugate points (xi, y_expr(xi)) over the roots xi of q; y_expr of
    None marks y = infinity on the whole cluster."""

    q: UniPoly
    y_expr: RatFunc | None

    def sort_key(self) -> tuple:
        ek = ("inf",) if self.y_expr is None else self.y_expr.key()
        return (2, self.q.key(), ek)

    def __str__(self) -> str:
        y = "inf" if self.y_expr is None else ratfunc_str(self.y_expr, "x")
        return f"({poly_str(self.q, 'x')}=0, y={y})"


@dataclass(frozen=True)
class ClusterY:
    q: UniPoly
    x_expr: RatFunc | None

    def sort_key(self) -> tuple:
        ek = ("inf",) if self.x_expr is None else self.x_expr.key()
        return (3, self.q.key(), ek)

    def __str__(self) -> str:
        x = "inf" if self.x_expr is None else ratfunc_str(self.x_expr, "y")
        return f"(x={x}, {poly_str(self.q, 'y')}=0)"


def _coord_key(v) -> tuple:
    return (1,) if v is INF else (0, v)


def _point_key(pt) -> tuple:
    return (_coord_key(pt[0]), _coord_key(pt[1]))


def _point_str(pt) -> str:
    return f"({'inf' if pt[0] is INF else pt[0]}, " \
           f"{'inf' if pt[1] is INF else pt[1]})"


@dataclass(frozen=True)
class SncProblem:
    kind: str  # "tangency" or "triple"
    where: str
    divisors: tuple[str, ...]


@dataclass
class SncReport:
    ok: bool
    divisors: list[SurfDivisor]
    problems: list[SncProblem]
    candidates_checked: int


# ---------------------------------------------------------------------------
# charts and membership
# ---------------------------------------------------------------------------


def _chart_poly(d: SurfDivisor, x_inf: bool, y_inf: bool) -> BiPoly:
    g = defining_bipoly(d)
    if x_inf:
        g = g.invert_x()
    if y_inf:
        g = g.invert_y()
    return g


def _local_coords(pt) -> tuple[bool, bool, Fraction, Fraction]:
    x_inf = pt[0] is INF
    y_inf = pt[1] is INF
    a = Q(0) if x_inf else pt[0]
    b = Q(0) if y_inf else pt[1]
    return x_inf, y_inf, a, b


def _through_point(d: SurfDivisor, pt) -> bool:
    x_inf, y_inf, a, b = _local_coords(pt)
    return _chart_poly(d, x_inf, y_inf).evaluate(a, b) == 0


def _clear_compose(p: UniPoly, num: UniPoly, den: UniPoly) -> UniPoly:
    """den^deg(p) * p(num/den)."""
    d = max(p.degree, 0)
    acc = UniPoly(())
    for i in range(d + 1):
        acc = acc + (num**i * den**(d - i)).scale(p.coeff(i))
    return acc


def _through_cluster_x(d: SurfDivisor, cl: ClusterX) -> bool:
    q = cl.q
    e = cl.y_expr
    if isinstance(d, VLine):
        return False  # rational abscissa cannot be a root of q
    if isinstance(d, HLine):
        if e is None:
            return False
        return ((e.num - e.den.scale(d.c)) % q).is_zero
    if isinstance(d, GraphY):
        if e is None:
            return (d.den % q).is_zero
        if (d.den % q).is_zero:
            return False
        lhs = d.num * e.den - e.num * d.den
        return (lhs % q).is_zero
    # GraphX: need psi(e(x)) = x identically modulo q
    if e is None:
        return False  # psi at infinity is a rational point or infinite
    a = _clear_compose(d.num, e.num, e.den)
    b = _clear_compose(d.den, e.num, e.den)
    nc = a * e.den ** max(d.den.degree, 0)
    dc = b * e.den ** max(d.num.degree, 0)
    if (dc % q).is_zero:
        return False
    return ((nc - dc * UniPoly.var()) % q).is_zero


def _through_cluster_y(d: SurfDivisor, cl: ClusterY) -> bool:
    q = cl.q
    e = cl.x_expr
    if isinstance(d, HLine):
        return False
    if isinstance(d, VLine):
        if e is None:
            return False
        return ((e.num - e.den.scale(d.c)) % q).is_zero
    if isinstance(d, GraphX):
        if e is None:
            return (d.den % q).is_zero
        if (d.den % q).is_zero:
            return False
        lhs = d.num * e.den - e.num * d.den
        return (lhs % q).is_zero
    if isinstance(d, GraphY):
        if e is None:
            return False
        a = _clear_compose(d.num, e.num, e.den)
        b = _clear_compose(d.den, e.num, e.den)
        nc = a * e.den ** max(d.den.degree, 0)
        dc = b * e.den ** max(d.num.degree, 0)
        if (dc % q).is_zero:
            return False
        return ((nc - dc * UniPoly.var()) % q).is_zero
    return False


# ---------------------------------------------------------------------------
# transversality
# ---------------------------------------------------------------------------


def _jacobian_det(g1: BiPoly, g2: BiPoly) -> BiPoly:
    return g1.partial_x() * g2.partial_y() - g1.partial_y() * g2.partial_x()


def _transversal_at_point(d1: SurfDivisor, d2: SurfDivisor, pt) -> bool:
    x_inf, y_inf, a, b = _local_coords(pt)
    det = _jacobian_det(_chart_poly(d1, x_inf, y_inf),
                        _chart_poly(d2, x_inf, y_inf))
    return det.evaluate(a, b) != 0


def _transversal_at_cluster_x(d1, d2, cl: ClusterX) -> bool:
    y_inf = cl.y_expr is None
    det = _jacobian_det(_chart_poly(d1, False, y_inf),
                        _chart_poly(d2, False, y_inf))
    if y_inf:
        reduced = det.subst_y(0) % cl.q
    else:
        reduced = det.eval_y_ratfunc(cl.y_expr.num, cl.y_expr.den) % cl.q
    return not reduced.is_zero


def _transversal_at_cluster_y(d1, d2, cl: ClusterY) -> bool:
    x_inf = cl.x_expr is None
    det = _jacobian_det(_chart_poly(d1, x_inf, False),
                        _chart_poly(d2, x_inf, False))
    if x_inf:
        reduced = det.subst_x(0) % cl.q
    else:
        reduced = det.eval_x_ratfunc(cl.x_expr.num, cl.x_expr.den) % cl.q
    return not reduced.is_zero


# ---------------------------------------------------------------------------
# candidate generation
# ---------------------------------------------------------------------------


def _roots_and_factors(f: UniPoly) -> tuple[list[Fraction], list[UniPoly]]:
    """Rational roots and the monic irreducible factors of degree >= 2."""
    if f.is_zero or f.degree <= 0:
        return [], []
    _, factors = factor_uni(f)
    roots: list[Fraction] = []
    hard: list[UniPoly] = []
    for p, _mult in factors:
        if p.degree == 1:
            roots.append(-p.coeff(0))
        else:
            hard.append(p)
    return roots, hard


def _boundary_candidates(d: SurfDivisor, points: set, cx: set, cy: set) -> None:
    if isinstance(d, VLine):
        points.add((d.c, INF))
        return
    if isinstance(d, HLine):
        points.add((INF, d.c))
        return
    if isinstance(d, GraphY):
        points.add((INF, d.phi().evaluate_at_infinity()))
        roots, hard = _roots_and_factors(d.den)
        for r in roots:
            points.add((r, INF))
        for q in hard:
            cx.add(ClusterX(q, None))
        return
    if isinstance(d, GraphX):
        points.add((d.psi().evaluate_at_infinity(), INF))
        roots, hard = _roots_and_factors(d.den)
        for r in roots:
            points.add((INF, r))
        for q in hard:
            cy.add(ClusterY(q, None))


def _pair_candidates(d1: SurfDivisor, d2: SurfDivisor,
                     points: set, cx: set, cy: set) -> None:
    """Finite-chart intersection candidates of a pair. Meetings with an
    infinite coordinate are boundary points of both parties and are already
    in the candidate set."""
    if d1.sort_key() > d2.sort_key():
        d1, d2 = d2, d1
    if isinstance(d1, VLine):
        if isinstance(d2, HLine):
            points.add((d1.c, d2.c))
        elif isinstance(d2, GraphY):
            yv = d2.phi().evaluate(d1.c)
            if yv is not INF:
                points.add((d1.c, yv))
        elif isinstance(d2, GraphX):
            f = d2.num - d2.den.scale(d1.c)
            roots, hard = _roots_and_factors(f)
            for r in roots:
                points.add((d1.c, r))
            for q in hard:
                cy.add(ClusterY(q, RatFunc.const(d1.c)))
        return
    if isinstance(d1, HLine):
        if isinstance(d2, GraphY):
            f = d2.num - d2.den.scale(d1.c)
            roots, hard = _roots_and_factors(f)
            for r in roots:
                points.add((r, d1.c))
            for q in hard:
                cx.add(ClusterX(q, RatFunc.const(d1.c)))
        elif isinstance(d2, GraphX):
            xv = d2.psi().evaluate(d1.c)
            if xv is not INF:
                points.add((xv, d1.c))
        return
    if isinstance(d1, GraphY) and isinstance(d2, GraphY):
        r = d1.num * d2.den - d2.num * d1.den
        roots, hard = _roots_and_factors(r)
        for x0 in roots:
            if d1.den.evaluate(x0) != 0:
                points.add((x0, d1.phi().evaluate(x0)))
            # a shared pole meets at (x0, inf): boundary of both
        for q in hard:
            if (d1.den % q).is_zero:
                cx.add(ClusterX(q, None))
            else:
                cx.add(ClusterX(q, d1.phi()))
        return
    if isinstance(d1, GraphY) and isinstance(d2, GraphX):
        # x = psi(phi(x)); clear phi's denominator out of psi's parts
        a = _clear_compose(d2.num, d1.num, d1.den)
        b = _clear_compose(d2.den, d1.num, d1.den)
        nc = a * d1.den ** max(d2.den.degree, 0)
        dc = b * d1.den ** max(d2.num.degree, 0)
        eqn = nc - dc * UniPoly.var()
        roots, hard = _roots_and_factors(eqn)
        for x0 in roots:
            if d1.den.evaluate(x0) != 0:
                points.add((x0, d1.phi().evaluate(x0)))
        for q in hard:
            if not (d1.den % q).is_zero:
                cx.add(ClusterX(q, d1.phi()))
            # factors of phi's denominator give y = inf clusters, which the
            # boundary pass already contributed
        return
    if isinstance(d1, GraphX) and isinstance(d2, GraphX):
        r = d1.num * d2.den - d2.num * d1.den
        roots, hard = _roots_and_factors(r)
        for y0 in roots:
            if d1.den.evaluate(y0) != 0:
                points.add((d1.psi().evaluate(y0), y0))
        for q in hard:
            if (d1.den % q).is_zero:
                cy.add(ClusterY(q, None))
            else:
                cy.add(ClusterY(q, d1.psi()))


# ---------------------------------------------------------------------------
# the checker
# ---------------------------------------------------------------------------


def snc_check(arg) -> SncReport:
    """Check a surface wedge (or an explicit divisor list) for strict
    normal crossings: pairwise transversal meetings and no triple points.
    """
    if isinstance(arg, Wedge):
        divisors = finite_support_divisors(arg)
    else:
        seen = set()
        divisors = []
        for d in arg:
            if d not in seen:
                seen.add(d)
                divisors.append(d)
        divisors.sort(key=lambda d: d.sort_key())

    points: set = set()
    cx: set = set()
    cy: set = set()
    for d in divisors:
        _boundary_candidates(d, points, cx, cy)
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            _pair_candidates(divisors[i], divisors[j], points, cx, cy)

    problems: list[SncProblem] = []

    for pt in sorted(points, key=_point_key):
        members = [d for d in divisors if _through_point(d, pt)]
        if len(members) >= 3:
            problems.append(SncProblem(
                "triple", _point_str(pt), tuple(str(d) for d in members)))
        elif len(members) == 2:
            if not _transversal_at_point(members[0], members[1], pt):
                problems.append(SncProblem(
                    "tangency", _point_str(pt),
                    tuple(str(d) for d in members)))
    for cl in sorted(cx, key=lambda c: c.sort_key()):
        members = [d for d in divisors if _through_cluster_x(d, cl)]
        if len(members) >= 3:
            problems.append(SncProblem(
                "triple", str(cl), tuple(str(d) for d in members)))
        elif len(members) == 2:
            if not _transversal_at_cluster_x(members[0], members[1], cl):
                problems.append(SncProblem(
                    "tangency", str(cl), tuple(str(d) for d in members)))
    for cl in sorted(cy, key=lambda c: c.sort_key()):
        members = [d for d in divisors if _through_cluster_y(d, cl)]
        if len(members) >= 3:
            problems.append(SncProblem(
                "triple", str(cl), tuple(str(d) for d in members)))
        elif len(members) == 2:
            if not _transversal_at_cluster_y(members[0], members[1], cl):
                problems.append(SncProblem(
                    "tangency", str(cl), tuple(str(d) for d in members)))

    return SncReport(ok=not problems, divisors=divisors, problems=problems,
                     candidates_checked=len(points) + len(cx) + len(cy))
