"""Exact univariate and bivariate polynomial arithmetic over Q.

Everything here is stdlib-only and exact: coefficients are fractions.Fraction,
and no operation ever rounds. The irreducibility checker is deliberately
tiered; it certifies an answer or raises Inconclusive, it never guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .errors import Inconclusive

Q = Fraction


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational number, got {type(v).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial with Fraction coefficients, ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(seq) -> "UniPoly":
        cs = [_as_fraction(c) for c in seq]
        while cs and cs[-1] == 0:
            cs.pop()
        return UniPoly(tuple(cs))

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly.make([c])

    @staticmethod
    def var() -> "UniPoly":
        return UniPoly.make([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Q(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.make([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.make([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly.make(out)

    def scale(self, c) -> "UniPoly":
        c = _as_fraction(c)
        if c == 0:
            return UniPoly(())
        return UniPoly(tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return UniPoly(()), self
        quot = [Q(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = top / lead
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= q * b
        return UniPoly.make(quot), UniPoly.make(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("polynomial division was not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def derivative(self) -> "UniPoly":
        return UniPoly.make([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly(())
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c)
        return acc

    def reversed_coeffs(self) -> "UniPoly":
        """x^deg * p(1/x); used for behavior at infinity."""
        return UniPoly.make(tuple(reversed(self.coeffs)))

    def shift(self, a) -> "UniPoly":
        """p(x + a)."""
        return self.compose(UniPoly.make([a, 1]))

    def primitive_int(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write p = content * q with q integer-coefficient, primitive,
        positive leading coefficient. Returns (content, coeffs of q)."""
        if self.is_zero:
            return Q(0), ()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Q(g, den), tuple(v // g for v in ints)

    def key(self) -> tuple:
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        return poly_str(self, "t")


def poly_str(p: UniPoly, var: str) -> str:
    """Canonical text form, highest degree first, explicit '*' and '^'."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        if i == 0:
            body = str(c) if c > 0 else str(-c)
        else:
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            if i == 1:
                body = f"{head}{var}"
            else:
                body = f"{head}{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def gcd_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def lcm_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    if f.is_zero or g.is_zero:
        return UniPoly(())
    return (f * g).exact_div(gcd_uni(f, g)).monic()


def resultant_uni(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant via the Sylvester determinant, exact."""
    if f.is_zero or g.is_zero:
        return Q(0)
    n, m = f.degree, g.degree
    if n == 0:
        return f.leading**m
    if m == 0:
        return g.leading**n
    size = n + m
    rows: list[list[Fraction]] = []
    fdesc = list(reversed(f.coeffs))
    gdesc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([Q(0)] * i + fdesc + [Q(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Q(0)] * i + gdesc + [Q(0)] * (size - m - 1 - i))
    # Gaussian elimination with exact fractions
    det = Q(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Q(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] * inv
            for c in range(col, size):
                rows[r][c] -= factor * rows[col][c]
    return det


def multiplicity_at(f: UniPoly, root) -> int:
    """Order of vanishing of f at a rational point."""
    root = _as_fraction(root)
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    lin = UniPoly.make([-root, 1])
    k = 0
    while True:
        q, r = f.divmod(lin)
        if not r.is_zero:
            return k
        f = q
        k += 1


def multiplicity_of_factor(f: UniPoly, q: UniPoly) -> int:
    """Order of the (irreducible) factor q in f."""
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    k = 0
    while True:
        quo, rem = f.divmod(q)
        if not rem.is_zero:
            return k
        f = quo
        k += 1


def rational_roots(f: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted ascending."""
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    if f.degree == 0:
        return []
    _, ints = f.primitive_int()
    # strip powers of t first
    low = 0
    while ints[low] == 0:
        low += 1
    out: list[tuple[Fraction, int]] = []
    if low:
        out.append((Q(0), low))
        ints = ints[low:]
    if len(ints) > 1:
        a0, an = abs(ints[0]), abs(ints[-1])
        seen: set[Fraction] = set()
        for p in _divisors(a0):
            for q in _divisors(an):
                for cand in (Q(p, q), Q(-p, q)):
                    if cand in seen:
                        continue
                    seen.add(cand)
                    poly = UniPoly.make(ints)
                    if poly.evaluate(cand) == 0:
                        out.append((cand, multiplicity_at(poly, cand)))
    out.sort(key=lambda t: t[0])
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: f = lc * prod(a_i^i) with the a_i squarefree, monic,
    pairwise coprime. Returns the nontrivial (a_i, i) pairs."""
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []
    df = f.derivative()
    a = gcd_uni(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        a_i = gcd_uni(b, d)
        if a_i.degree > 0:
            out.append((a_i.monic(), i))
        b = b.exact_div(a_i)
        c = d.exact_div(a_i)
        i += 1
    return out


# -- irreducibility ---------------------------------------------------------


def _first_primes(n: int) -> list[int]:
    primes: list[int] = []
    cand = 2
    while len(primes) < n:
        if all(cand % p for p in primes):
            primes.append(cand)
        cand += 1
    return primes


_PRIME_POOL = _first_primes(60)


def _mod_trim(cs: list[int], p: int) -> list[int]:
    cs = [c % p for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mod_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _mod_trim(out, p)


def _mod_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * y) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _mod_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _mod_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _mod_powmod_x(q: int, f: list[int], p: int) -> list[int]:
    """x^q mod f over F_p by square and multiply."""
    result = [1]
    base = _mod_rem([0, 1], f, p)
    while q:
        if q & 1:
            result = _mod_rem(_mod_mul(result, base, p), f, p)
        base = _mod_rem(_mod_mul(base, base, p), f, p)
        q >>= 1
    return result


def _mod_exact_div(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        out[shift] = coef
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * y) % p
        while a and a[-1] == 0:
            a.pop()
    return _mod_trim(out, p)


def _factor_degree_pattern(ints: tuple[int, ...], p: int) -> list[int] | None:
    """Multiset of irreducible-factor degrees of f mod p, or None if p is a
    bad prime (leading coefficient vanishes or f mod p not squarefree)."""
    f = _mod_trim(list(ints), p)
    if len(f) != len(ints):
        return None
    deriv = _mod_trim([i * c % p for i, c in enumerate(f)][1:], p)
    if not deriv or len(_mod_gcd(f, deriv, p)) != 1:
        return None
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    degrees: list[int] = []
    d = 0
    h = [0, 1]  # x, reduced as we go
    h = _mod_rem(h, f, p)
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            degrees.append(len(f) - 1)
            break
        h = _mod_powmod_x(p, f, p) if d == 1 else h
        if d > 1:
            # raise previous h to the p-th power mod f
            hp = [1]
            base = h
            q = p
            while q:
                if q & 1:
                    hp = _mod_rem(_mod_mul(hp, base, p), f, p)
                base = _mod_rem(_mod_mul(base, base, p), f, p)
                q >>= 1
            h = hp
        diff = _mod_trim([(a - b) % p for a, b in
                          zip(h + [0] * 2, [0, 1] + [0] * len(h))], p)
        g = _mod_gcd(f, diff, p)
        if len(g) > 1:
            count = (len(g) - 1) // d
            degrees.extend([d] * count)
            f = _mod_exact_div(f, g, p)
            h = _mod_rem(h, f, p)
    return degrees


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _deg4_monic_splits(g: UniPoly) -> tuple[UniPoly, UniPoly] | None:
    """Integer quadratic-pair factorization of a monic integer quartic with
    no rational roots; None if there is none (certifying irreducibility)."""
    g3, g2, g1, g0 = (int(g.coeff(3)), int(g.coeff(2)),
                      int(g.coeff(1)), int(g.coeff(0)))
    for b in _divisors(g0) + [-d for d in _divisors(g0)]:
        if g0 % b:
            continue
        d = g0 // b
        # a + c = g3, a*c = g2 - b - d; a, c integer roots of z^2 - g3 z + s
        s = g2 - b - d
        disc = g3 * g3 - 4 * s
        if disc < 0:
            continue
        root = _int_sqrt(disc)
        if root is None:
            continue
        for a in {(g3 + root) // 2, (g3 - root) // 2}:
            if (g3 + root) % 2 and (g3 - root) % 2:
                break
            c = g3 - a
            if a * d + b * c == g1:
                return (UniPoly.make([b, a, 1]), UniPoly.make([d, c, 1]))
    return None


def _int_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def irreducible_check_uni(f: UniPoly) -> bool:
    """Certified irreducibility over Q for nonconstant f.

    Degrees 1-4 are always decided. Degree >= 5 uses factor-degree patterns
    modulo the first usable primes; if those cannot rule out a proper factor,
    Inconclusive is raised rather than guessing. False always comes with an
    actual witness (a root or an exhibited factorization path).
    """
    if f.degree < 1:
        raise ValueError("irreducibility is asked of nonconstant polynomials")
    if f.degree == 1:
        return True
    if rational_roots(f):
        return False
    if f.degree <= 3:
        return True  # no rational root and degree <= 3
    _, ints = f.primitive_int()
    if f.degree == 4:
        # monic transform keeps the factorization structure
        a4 = ints[-1]
        g = UniPoly.make([ints[0] * a4**3, ints[1] * a4**2, ints[2] * a4,
                          ints[3], 1])
        return _deg4_monic_splits(g) is None
    if gcd_uni(f, f.derivative()).degree > 0:
        return False  # repeated factor
    n = f.degree
    feasible: set[int] | None = None
    used = 0
    for p in _PRIME_POOL:
        pattern = _factor_degree_pattern(ints, p)
        if pattern is None:
            continue
        used += 1
        sums = {s for s in _subset_sums(pattern) if 0 < s < n}
        feasible = sums if feasible is None else (feasible & sums)
        if not feasible:
            return True
        if used >= 25:
            break
    raise Inconclusive(
        f"cannot certify irreducibility of degree-{n} polynomial "
        f"{poly_str(f, 't')}: feasible proper factor degrees {sorted(feasible or [])}")


def factor_uni(f: UniPoly, known: tuple[UniPoly, ...] = ()) -> tuple[Fraction, list[tuple[UniPoly, int]]]:
    """Factor f into monic irreducibles: f = c * prod(q_i^e_i).

    `known` supplies monic irreducibles seen before (they are trial-divided
    first, which lets products of registered nonlinear atoms factor without a
    general engine). Raises Inconclusive when a leftover cannot be certified.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    c = f.leading
    out: list[tuple[UniPoly, int]] = []
    for part, power in squarefree_decomposition(f):
        for root, _ in rational_roots(part):
            out.append((UniPoly.make([-root, 1]), power))
            part = part.exact_div(UniPoly.make([-root, 1]))
        for q in known:
            if q.degree <= 1 or part.degree < q.degree:
                continue
            quo, rem = part.divmod(q)
            if rem.is_zero:
                out.append((q, power))
                part = quo
        part = _factor_hard(part, out, power)
        if part.degree > 0:
            raise Inconclusive(
                f"cannot finish factoring {poly_str(f, 't')}: stuck at "
                f"{poly_str(part, 't')}")
    out.sort(key=lambda t: t[0].key())
    return c, out


def _factor_hard(part: UniPoly, out: list, power: int) -> UniPoly:
    """Handle the rootless leftover of one squarefree slice."""
    if part.degree <= 0:
        return part
    if part.degree <= 3:
        out.append((part.monic(), power))
        return UniPoly.const(1)
    if part.degree == 4:
        _, ints = part.primitive_int()
        a4 = ints[-1]
        g = UniPoly.make([ints[0] * a4**3, ints[1] * a4**2, ints[2] * a4,
                          ints[3], 1])
        split = _deg4_monic_splits(g)
        if split is None:
            out.append((part.monic(), power))
        else:
            # undo the monic transform: roots were scaled by a4
            for quad in split:
                q = UniPoly.make([quad.coeff(0), quad.coeff(1) * a4,
                                  a4 * a4]).monic()
                if irreducible_check_uni(q):
                    out.append((q, power))
                else:
                    for root, _ in rational_roots(q):
                        out.append((UniPoly.make([-root, 1]), power))
        return UniPoly.const(1)
    if irreducible_check_uni(part):  # may raise Inconclusive
        out.append((part.monic(), power))
        return UniPoly.const(1)
    return part


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiPoly:
    """Polynomial in x and y; sparse map (x_exp, y_exp) -> Fraction."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @staticmethod
    def make(mapping) -> "BiPoly":
        items = []
        for (i, j), c in (mapping.items() if isinstance(mapping, dict) else mapping):
            c = _as_fraction(c)
            if c != 0:
                items.append(((i, j), c))
        merged: dict[tuple[int, int], Fraction] = {}
        for key, c in items:
            merged[key] = merged.get(key, Q(0)) + c
        return BiPoly(tuple(sorted((k, v) for k, v in merged.items() if v != 0)))

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly.make({(0, 0): c})

    @staticmethod
    def var_x() -> "BiPoly":
        return BiPoly.make({(1, 0): 1})

    @staticmethod
    def var_y() -> "BiPoly":
        return BiPoly.make({(0, 1): 1})

    @staticmethod
    def from_uni(p: UniPoly, var: str) -> "BiPoly":
        if var == "x":
            return BiPoly.make({(i, 0): c for i, c in enumerate(p.coeffs)})
        if var == "y":
            return BiPoly.make({(0, i): c for i, c in enumerate(p.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_x(self) -> int:
        return max((k[0] for k, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((k[1] for k, _ in self.terms), default=-1)

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, Q(0)) + c
        return BiPoly.make(d)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        return BiPoly(tuple((k, -c) for k, c in self.terms))

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        d: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, Q(0)) + c1 * c2
        return BiPoly.make(d)

    def scale(self, c) -> "BiPoly":
        c = _as_fraction(c)
        if c == 0:
            return BiPoly(())
        return BiPoly(tuple((k, c * v) for k, v in self.terms))

    def __pow__(self, n: int) -> "BiPoly":
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, a, b) -> Fraction:
        a, b = _as_fraction(a), _as_fraction(b)
        return sum((c * a**i * b**j for (i, j), c in self.terms), Q(0))

    def subst_x(self, a) -> UniPoly:
        """g(a, y) as a polynomial in y."""
        a = _as_fraction(a)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            out[j] = out.get(j, Q(0)) + c * a**i
        n = max(out, default=-1)
        return UniPoly.make([out.get(k, Q(0)) for k in range(n + 1)])

    def subst_y(self, b) -> UniPoly:
        """g(x, b) as a polynomial in x."""
        b = _as_fraction(b)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            out[i] = out.get(i, Q(0)) + c * b**j
        n = max(out, default=-1)
        return UniPoly.make([out.get(k, Q(0)) for k in range(n + 1)])

    def y_coefficients(self) -> list[UniPoly]:
        """Coefficients of y^0 .. y^deg_y, each a polynomial in x."""
        cols: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self.terms:
            cols.setdefault(j, {})[i] = c
        out = []
        for j in range(self.deg_y + 1):
            col = cols.get(j, {})
            n = max(col, default=-1)
            out.append(UniPoly.make([col.get(k, Q(0)) for k in range(n + 1)]))
        return out

    def x_coefficients(self) -> list[UniPoly]:
        cols: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self.terms:
            cols.setdefault(i, {})[j] = c
        out = []
        for i in range(self.deg_x + 1):
            col = cols.get(i, {})
            n = max(col, default=-1)
            out.append(UniPoly.make([col.get(k, Q(0)) for k in range(n + 1)]))
        return out

    def eval_y_ratfunc(self, num: UniPoly, den: UniPoly) -> UniPoly:
        """den^deg_y * g(x, num/den), a polynomial in x."""
        dy = self.deg_y
        acc = UniPoly(())
        for j, cj in enumerate(self.y_coefficients()):
            acc = acc + cj * num**j * den ** (dy - j)
        return acc

    def eval_x_ratfunc(self, num: UniPoly, den: UniPoly) -> UniPoly:
        """den^deg_x * g(num/den, y), a polynomial in y."""
        dx = self.deg_x
        acc = UniPoly(())
        for i, ci in enumerate(self.x_coefficients()):
            acc = acc + ci * num**i * den ** (dx - i)
        return acc

    def invert_x(self) -> "BiPoly":
        """u^deg_x * g(1/u, y): the closure's equation in the 1/x chart."""
        dx = self.deg_x
        return BiPoly.make({(dx - i, j): c for (i, j), c in self.terms})

    def invert_y(self) -> "BiPoly":
        dy = self.deg_y
        return BiPoly.make({(i, dy - j): c for (i, j), c in self.terms})

    def partial_x(self) -> "BiPoly":
        return BiPoly.make({(i - 1, j): c * i for (i, j), c in self.terms if i})

    def partial_y(self) -> "BiPoly":
        return BiPoly.make({(i, j - 1): c * j for (i, j), c in self.terms if j})

    def substitute(self, xv: "BiPoly", yv: "BiPoly") -> "BiPoly":
        """g(xv, yv) where xv, yv are polynomials in fresh variables."""
        acc = BiPoly(())
        for (i, j), c in self.terms:
            acc = acc + (xv**i * yv**j).scale(c)
        return acc

    def primitive_int(self) -> tuple[Fraction, "BiPoly"]:
        """content * primitive with integer coefficients; the leading
        coefficient in (x, y) lexicographic order is positive."""
        if self.is_zero:
            return Q(0), self
        den = 1
        for _, c in self.terms:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = {k: int(c * den) for k, c in self.terms}
        g = 0
        for v in ints.values():
            g = int_gcd(g, v)
        lead_key = max(ints)
        if ints[lead_key] < 0:
            g = -g
        return Q(g, den), BiPoly.make({k: Fraction(v, g) for k, v in ints.items()})

    def key(self) -> tuple:
        return (self.deg_x, self.deg_y, self.terms)

    def __str__(self) -> str:
        return bipoly_str(self)


def bipoly_str(p: BiPoly, xname: str = "x", yname: str = "y") -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for (i, j), c in sorted(p.terms, reverse=True):
        pieces = []
        mag = abs(c)
        if i:
            pieces.append(xname if i == 1 else f"{xname}^{i}")
        if j:
            pieces.append(yname if j == 1 else f"{yname}^{j}")
        if not pieces or mag != 1:
            pieces.insert(0, str(mag))
        body = "*".join(pieces)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def bipoly_pseudo_divmod(g: BiPoly, h: BiPoly) -> tuple[BiPoly, BiPoly, int]:
    """Pseudo-division in y: lc_y(h)^k * g = q*h + r with deg_y r < deg_y h."""
    dh = h.deg_y
    if dh < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    lc = BiPoly.from_uni(h.y_coefficients()[-1], "x")
    q = BiPoly(())
    r = g
    k = 0
    while r.deg_y >= dh and not r.is_zero:
        rc = BiPoly.from_uni(r.y_coefficients()[-1], "x")
        shift = BiPoly.make({(0, r.deg_y - dh): 1})
        q = q * lc + rc * shift
        r = r * lc - rc * shift * h
        k += 1
    return q, r, k


def bipoly_exact_div(g: BiPoly, h: BiPoly) -> BiPoly | None:
    """g / h in Q[x, y] if h divides g exactly (h nonconstant in y), else None."""
    q, r, k = bipoly_pseudo_divmod(g, h)
    if not r.is_zero:
        return None
    # divide q by lc_y(h)^k, coefficientwise in y
    lc = h.y_coefficients()[-1]
    denom = lc**k
    cols = q.y_coefficients()
    out: dict[tuple[int, int], Fraction] = {}
    for j, col in enumerate(cols):
        if col.is_zero:
            continue
        quo, rem = col.divmod(denom)
        if not rem.is_zero:
            return None
        for i, c in enumerate(quo.coeffs):
            if c != 0:
                out[(i, j)] = c
    return BiPoly.make(out)
