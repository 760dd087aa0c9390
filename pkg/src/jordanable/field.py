"""Exact field arithmetic and exact dense linear algebra.

The ground field is Q, realized by :class:`fractions.Fraction`.  Simple
algebraic extensions Q[X]/(p) are provided by :class:`ExtElement`.  All
types are immutable values and all functions are pure; there is no
floating point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

NEG_INF = float("-inf")  # degree of the zero polynomial


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Polynomial:
    """Dense univariate polynomial over Q, coefficient i of X**i.

    The zero polynomial is the empty coefficient vector with degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial((c,))

    # -- basic queries -----------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        return Polynomial(c * a for a in self.coeffs)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, x):
        """Evaluate by Horner; works for Fractions, ExtElements and Matrices."""
        if isinstance(x, Matrix):
            acc = Matrix.zeros(x.rows, x.cols)
            ident = Matrix.identity(x.rows)
            for c in reversed(self.coeffs):
                acc = acc * x + ident.scale(c)
            return acc
        acc = x - x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparison, hashing, display ---------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                xk = "X" if k == 1 else f"X^{k}"
                if c == 1:
                    term = xk
                elif c == -1:
                    term = f"-{xk}"
                else:
                    term = f"{c}*{xk}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db, lead = b.degree, b.leading
    q = [Fraction(0)] * max(len(a.coeffs) - db, 0)
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        k = len(r) - 1 - db
        q[k] = c
        for i, bc in enumerate(b.coeffs):
            r[k + i] -= c * bc
        while r and r[-1] == 0:
            r.pop()
    return Polynomial(q), Polynomial(r)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero else a


def poly_xgcd(a: Polynomial, b: Polynomial):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic or zero."""
    r0, r1 = a, b
    s0, s1 = Polynomial.one(), Polynomial.zero()
    t0, t1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    c = 1 / r0.leading
    return r0.scale(c), s0.scale(c), t0.scale(c)


class ExtElement:
    """Element of the simple extension Q[X]/(p), p monic irreducible."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: Polynomial, modulus: Polynomial):
        if not modulus.is_monic or modulus.degree < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if residue.degree >= modulus.degree:
            residue = poly_divmod(residue, modulus)[1]
        self.residue = residue
        self.modulus = modulus

    def _check(self, other: "ExtElement"):
        if self.modulus != other.modulus:
            raise ValueError("extension field mismatch")

    def __add__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        return ExtElement(self.residue + other.residue, self.modulus)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        self._check(other)
        return ExtElement(self.residue - other.residue, self.modulus)

    def __neg__(self) -> "ExtElement":
        return ExtElement(-self.residue, self.modulus)

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            self._check(other)
            return ExtElement(self.residue * other.residue, self.modulus)
        return ExtElement(self.residue.scale(other), self.modulus)

    def __rmul__(self, other):
        return ExtElement(self.residue.scale(other), self.modulus)

    def __truediv__(self, other: "ExtElement") -> "ExtElement":
        return self * ext_inverse(other)

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtElement)
            and self.modulus == other.modulus
            and self.residue == other.residue
        )

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __repr__(self) -> str:
        return f"ExtElement({self.residue} mod {self.modulus})"


def ext_inverse(e: ExtElement) -> ExtElement:
    """Multiplicative inverse in Q[X]/(p) via extended gcd."""
    if e.is_zero:
        raise ZeroDivisionError("zero element of extension field")
    g, s, _ = poly_xgcd(e.residue, e.modulus)
    if g.degree != 0:
        raise ValueError(
            f"residue shares factor {g} with modulus: modulus is not irreducible"
        )
    return ExtElement(s, e.modulus)


class Matrix:
    """Immutable dense matrix with exact entries, row-major storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        es = tuple(_frac(x) for x in entries)
        if len(es) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = es

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return Matrix(r, c, [x for row in rows for x in row])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix(r, c, [0] * (r * c))

    @staticmethod
    def diagonal(values: Sequence) -> "Matrix":
        n = len(values)
        return Matrix(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def block_diag(blocks: Sequence["Matrix"]) -> "Matrix":
        r = sum(b.rows for b in blocks)
        c = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * c for _ in range(r)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[i0 + i][j0 + j] = b[i, j]
            i0 += b.rows
            j0 += b.cols
        return Matrix.from_rows(out)

    @staticmethod
    def column_stack(columns: Sequence[Sequence]) -> "Matrix":
        c = len(columns)
        r = len(columns[0]) if c else 0
        return Matrix(r, c, [columns[j][i] for i in range(r) for j in range(c)])

    # -- access -------------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def vec(self) -> tuple:
        """Column-stacked vectorization."""
        return tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))

    @staticmethod
    def unvec(v: Sequence, rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [v[j * rows + i] for i in range(rows) for j in range(cols)])

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = [Fraction(0)] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a == 0:
                    continue
                ob = k * other.cols
                for j in range(other.cols):
                    out[i * other.cols + j] += a * other.entries[ob + j]
        return Matrix(self.rows, other.cols, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of non-square matrix")
        out = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((self[i, j] * _frac(v[j]) for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def kron(self, other: "Matrix") -> "Matrix":
        """Block matrix with self's entries multiplying copies of other."""
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [Fraction(0)] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if a == 0:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        out[(i * other.rows + k) * c + j * other.cols + l] = a * other[k, l]
        return Matrix(r, c, out)

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def row_reduce(m: Matrix):
    """Reduced row echelon form with kernel and transform.

    Returns (rank, rref, kernel_basis, transform) where transform*m = rref,
    kernel_basis spans the right nullspace, and rank + len(kernel) = cols.
    """
    a = m.to_rows()
    t = Matrix.identity(m.rows).to_rows()
    rank = 0
    pivots: list[int] = []
    for col in range(m.cols):
        piv = None
        for i in range(rank, m.rows):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        t[rank], t[piv] = t[piv], t[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        t[rank] = [x * inv for x in t[rank]]
        for i in range(m.rows):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
                t[i] = [x - f * y for x, y in zip(t[i], t[rank])]
        pivots.append(col)
        rank += 1
        if rank == m.rows:
            break
    pivot_set = set(pivots)
    kernel = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][free]
        kernel.append(tuple(v))
    return rank, Matrix.from_rows(a) if m.rows else m, kernel, Matrix.from_rows(t) if m.rows else Matrix.identity(0)


def matrix_rank(m: Matrix) -> int:
    return row_reduce(m)[0]


def solve_linear(m: Matrix, b: Sequence) -> Optional[tuple[tuple, list[tuple]]]:
    """Solve m*x = b exactly.

    Returns (particular, nullspace_basis), or None when b is outside the
    column space.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = Matrix(m.rows, m.cols + 1,
                 [x for i in range(m.rows) for x in (*m.row(i), _frac(b[i]))])
    rank, rref, _, _ = row_reduce(aug)
    pivots = []
    for i in range(rank):
        row = rref.row(i)
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    if pivots and pivots[-1] == m.cols:
        return None  # pivot in the augmented column: inconsistent
    particular = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        particular[pc] = rref[i, m.cols]
    _, _, kernel, _ = row_reduce(m)
    return tuple(particular), kernel


def invert(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    rank, _, _, t = row_reduce(m)
    if rank != m.rows:
        raise ValueError("matrix is singular")
    return t


def determinant(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    rows = [[_frac(x) for x in row] for row in m.to_rows()]
    n = m.rows
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def span_contains(basis: list[tuple], v: Sequence) -> bool:
    """Membership of v in the span of the given vectors."""
    if not basis:
        return all(_frac(x) == 0 for x in v)
    mat = Matrix.column_stack([list(b) for b in basis])
    return solve_linear(mat, list(v)) is not None


def independent(vectors: list[Sequence]) -> bool:
    if not vectors:
        return True
    mat = Matrix.column_stack([list(v) for v in vectors])
    return matrix_rank(mat) == len(vectors)
