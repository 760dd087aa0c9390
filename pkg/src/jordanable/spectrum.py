"""Monic irreducible polynomials, the dilation action, companion matrices.

Irreducibility over Q is certified autonomously only up to degree 3
(absence of rational roots); higher degrees must be asserted through
hints.  Two companion conventions are supported: the general form
(epsilon=1) and the rotation-scaling 2x2 form (epsilon=0) for quadratics
that split as (X-a)^2 + b^2 with rational a, b.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ConventionError, UnfactoredRemainder
from .field import Matrix, Polynomial, poly_divmod, poly_gcd, solve_linear, span_contains, _frac


class Certification(Enum):
    PROVEN = "proven"
    HINTED = "hinted"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def rational_roots(p: Polynomial) -> list[Fraction]:
    """All rational roots of p, by the rational-root theorem."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    roots = []
    q = p
    while q.coeff(0) == 0 and q.degree >= 1:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        q = Polynomial(q.coeffs[1:])
    if q.degree < 1:
        return sorted(roots)
    denom_lcm = 1
    for c in q.coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in q.coeffs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if r not in roots and q(r) == 0:
                    roots.append(r)
    return sorted(roots)


@dataclass(frozen=True)
class IrreduciblePoly:
    """A monic irreducible polynomial, with how irreducibility was certified."""

    poly: Polynomial
    certification: Certification

    @staticmethod
    def check(poly: Polynomial) -> "IrreduciblePoly":
        """Certify irreducibility autonomously; only possible for degree <= 3."""
        if not poly.is_monic or poly.degree < 1:
            raise ValueError(f"not a monic polynomial of positive degree: {poly}")
        if poly.degree == 1:
            return IrreduciblePoly(poly, Certification.PROVEN)
        if poly.degree > 3:
            raise ValueError(
                f"degree {poly.degree} irreducibility cannot be proven here; "
                "pass it as a hint"
            )
        if rational_roots(poly):
            raise ValueError(f"{poly} has a rational root, hence is reducible")
        return IrreduciblePoly(poly, Certification.PROVEN)

    @staticmethod
    def hinted(poly: Polynomial) -> "IrreduciblePoly":
        """Accept a user-asserted irreducible of any degree."""
        if not poly.is_monic or poly.degree < 1:
            raise ValueError(f"not a monic polynomial of positive degree: {poly}")
        if poly.degree <= 3:
            return IrreduciblePoly.check(poly)
        if rational_roots(poly):
            raise ValueError(f"hint {poly} has a rational root, hence is reducible")
        return IrreduciblePoly(poly, Certification.HINTED)

    @property
    def degree(self) -> int:
        return int(self.poly.degree)

    def sort_key(self):
        # higher-degree factors come first, matching the reference layouts
        return (-self.degree, self.poly.coeffs)

    def __lt__(self, other: "IrreduciblePoly") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return str(self.poly)


X_POLY = Polynomial((0, 1))


def x_irreducible() -> IrreduciblePoly:
    return IrreduciblePoly(X_POLY, Certification.PROVEN)


@dataclass(frozen=True)
class Convention:
    """Companion-form convention selector (epsilon in {0, 1})."""

    epsilon: int = 1

    def __post_init__(self):
        if self.epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")


EPS1 = Convention(1)
EPS0 = Convention(0)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    np = math.isqrt(x.numerator)
    dp = math.isqrt(x.denominator)
    if np * np == x.numerator and dp * dp == x.denominator:
        return Fraction(np, dp)
    return None


def rotation_parameters(p: Polynomial) -> tuple[Fraction, Fraction]:
    """Write a monic quadratic as (X-a)^2 + b^2 with rational a, b >= 0."""
    if p.degree != 2 or not p.is_monic:
        raise ConventionError(f"epsilon=0 needs a monic quadratic, got {p}")
    a = -p.coeff(1) / 2
    b2 = p.coeff(0) - a * a
    b = _rational_sqrt(b2)
    if b is None:
        raise ConventionError(
            f"{p} does not split as (X-a)^2+b^2 with rational b; epsilon=0 unavailable"
        )
    return a, b


@dataclass(frozen=True)
class CompanionMatrix:
    matrix: Matrix
    source: IrreduciblePoly
    convention: Convention


def companion(p: IrreduciblePoly, conv: Convention = EPS1) -> CompanionMatrix:
    """Matrix realization of a root of p acting on Q[X]/(p)."""
    d = p.degree
    if d == 1:
        m = Matrix(1, 1, [-p.poly.coeff(0)])
    elif conv.epsilon == 0:
        if d != 2:
            raise ConventionError("epsilon=0 companion form exists only for degree 2")
        a, b = rotation_parameters(p.poly)
        m = Matrix.from_rows([[a, -b], [b, a]])
    else:
        rows = [[Fraction(0)] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = Fraction(1)
        for i in range(d):
            rows[i][d - 1] = -p.poly.coeff(i)
        m = Matrix.from_rows(rows)
    return CompanionMatrix(m, p, conv)


def ext_basis_matrices(p: IrreduciblePoly, conv: Convention = EPS1) -> list[Matrix]:
    """F-matrices of the standard F-basis of the extension field Q[X]/(p).

    For epsilon=1 these are the powers x_p^k, k < deg p; for epsilon=0 they
    are {id, (x_p - a)/b}, matching the rotation-scaling coordinates.
    """
    xp = companion(p, conv).matrix
    d = p.degree
    if conv.epsilon == 0 and d == 2:
        a, b = rotation_parameters(p.poly)
        return [Matrix.identity(2), (xp - Matrix.identity(2).scale(a)).scale(1 / b)]
    return [xp**k for k in range(d)]


def star_poly(lam, p: Polynomial) -> Polynomial:
    """Dilation action: coefficient k is scaled by lam**(deg p - k)."""
    lam = _frac(lam)
    if lam == 0:
        raise ValueError("dilation by zero")
    if p.is_zero:
        return p
    d = int(p.degree)
    return Polynomial(lam ** (d - k) * p.coeff(k) for k in range(d + 1))


def star_irreducible(lam, p: IrreduciblePoly) -> IrreduciblePoly:
    return IrreduciblePoly(star_poly(lam, p.poly), p.certification)


def minimal_polynomial(t: Matrix) -> Polynomial:
    """Lowest-degree monic P with P(t) = 0, by first Krylov dependence."""
    if t.rows != t.cols:
        raise ValueError("minimal polynomial of non-square matrix")
    n = t.rows
    if n == 0:
        return Polynomial.one()
    powers = [Matrix.identity(n)]
    vecs: list[tuple] = []
    while True:
        v = powers[-1].vec()
        if vecs and span_contains(vecs, v):
            break
        if not vecs and all(x == 0 for x in v):
            break
        vecs.append(v)
        powers.append(powers[-1] * t)
        if len(powers) > n + 1:
            raise AssertionError("no Krylov dependence below dimension bound")
    k = len(vecs)
    sol = solve_linear(Matrix.column_stack([list(v) for v in vecs]), list(powers[k].vec()))
    assert sol is not None
    coeffs = [-c for c in sol[0]] + [Fraction(1)]
    return Polynomial(coeffs)


def _squarefree_parts(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun decomposition: returns [(s_i, i)] with p = prod s_i^i, s_i squarefree."""
    out = []
    g = poly_gcd(p, p.derivative())
    w = poly_divmod(p, g)[0]
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, g)
        s = poly_divmod(w, y)[0]
        if s.degree >= 1:
            out.append((s, i))
        w = y
        g = poly_divmod(g, y)[0]
        i += 1
    return out


def _lagrange(points: list[tuple[Fraction, Fraction]]) -> Polynomial:
    total = Polynomial.zero()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial.constant(yi)
        for j, (xj, _yj) in enumerate(points):
            if i == j:
                continue
            term = term * Polynomial((-xj, 1)).scale(1 / (xi - xj))
        total = total + term
    return total


def _find_small_factor(f: Polynomial) -> Polynomial | None:
    """A monic factor of degree 2 or 3 of a monic integer polynomial.

    Kronecker's method: a monic integer factor g must satisfy g(t) | f(t)
    at integer points, so interpolating divisor combinations at 0, 1, -1
    (and 2 for cubics) enumerates every candidate.  f is assumed to have
    no rational roots, hence nonzero values at the sample points.
    """
    from itertools import product as iproduct

    for deg in (2, 3):
        if f.degree <= deg:
            return None
        pts = [Fraction(t) for t in (0, 1, -1, 2)[: deg + 1]]
        divisor_lists = []
        for t in pts:
            v = f(t)
            assert v != 0 and v.denominator == 1
            ds = _divisors(int(v))
            divisor_lists.append([Fraction(s * d) for d in ds for s in (1, -1)])
        for combo in iproduct(*divisor_lists):
            g = _lagrange(list(zip(pts, combo)))
            if g.degree != deg or not g.is_monic:
                continue
            if any(c.denominator != 1 for c in g.coeffs):
                continue
            if poly_divmod(f, g)[1].is_zero:
                return g
    return None


def _split_residual(part: Polynomial) -> list[Polynomial]:
    """Split a rational monic residual (no rational roots) into monic
    factors of degree <= 3 where possible, via an integer rescaling."""
    out = []
    while part.degree >= 4:
        denom_lcm = 1
        for c in part.coeffs:
            denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
        scaled = star_poly(denom_lcm, part)
        g_scaled = _find_small_factor(scaled)
        if g_scaled is None:
            return out + [part]
        g = star_poly(Fraction(1, denom_lcm), g_scaled)
        out.append(g)
        part = poly_divmod(part, g)[0]
    if part.degree >= 1:
        out.append(part)
    return out


def factor_with_hints(
    p: Polynomial, hints: list[IrreduciblePoly] | None = None
) -> dict[IrreduciblePoly, int]:
    """Factor a monic polynomial into certified irreducibles.

    Degree <= 3 factors are found autonomously (rational roots plus
    Kronecker interpolation); higher-degree irreducible factors must
    appear among the hints, otherwise the unfactored residual is
    reported as an error.
    """
    if p.is_zero or not p.is_monic:
        raise ValueError(f"can only factor monic nonzero polynomials, got {p}")
    hints = hints or []
    factors: dict[IrreduciblePoly, int] = {}

    def add(f: IrreduciblePoly, e: int):
        factors[f] = factors.get(f, 0) + e

    for part, mult in _squarefree_parts(p):
        for h in hints:
            q, r = poly_divmod(part, h.poly)
            if r.is_zero:
                add(h, mult)
                part = q
        for root in rational_roots(part):
            lin = IrreduciblePoly.check(Polynomial((-root, 1)))
            while True:
                q, r = poly_divmod(part, lin.poly)
                if not r.is_zero:
                    break
                add(lin, mult)
                part = q
        for piece in _split_residual(part) if part.degree >= 4 else [part]:
            if piece.degree >= 4:
                raise UnfactoredRemainder(piece)
            if piece.degree >= 1:
                add(IrreduciblePoly.check(piece), mult)

    check = Polynomial.one()
    for f, e in factors.items():
        check = check * f.poly**e
    assert check == p, "internal factorization mismatch"
    return dict(sorted(factors.items(), key=lambda kv: kv[0].sort_key()))


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\s*\d+(?:/\d+)?|[+-])?\s*\*?\s*"
    r"(?P<var>X)?\s*(?:(?:\^|\*\*)\s*(?P<exp>\d+))?\s*$"
)


def parse_poly(text: str) -> Polynomial:
    """Parse the human syntax 'X^3 - 2' (also accepts '**' and '*')."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    terms = []
    buf = ""
    for ch in s.replace("−", "-"):
        if ch in "+-" and buf.strip() and not buf.rstrip().endswith(("^", "*", "/", "+", "-")):
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef_text = (m.group("coef") or "+1").replace(" ", "")
        if coef_text in ("+", "-"):
            if m.group("var") is None:
                raise ValueError(f"dangling sign {term!r} in {text!r}")
            coef_text += "1"
        coef = Fraction(coef_text)
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            if m.group("exp") is not None:
                raise ValueError(f"exponent without variable in {term!r}")
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    n = max(coeffs) + 1
    return Polynomial(coeffs.get(k, Fraction(0)) for k in range(n))
