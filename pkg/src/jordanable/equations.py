"""Structured solution spaces of the three operator equations.

The solvers never run a generic linear solve: each solution space is
assembled from intertwiner bases and the structural matrices V_n, U_n,
P_n, W_p^eps, then every basis element is checked by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ZeroMultiplicityFunction
from .field import Matrix, _frac, invert, span_contains
from .jordan import Block, JordanForm, canonical_form, similarity_transform
from .multiplicity import MultiplicityFunction
from .spectrum import (
    Convention,
    EPS1,
    IrreduciblePoly,
    companion,
    ext_basis_matrices,
    star_irreducible,
    x_irreducible,
)


@dataclass(frozen=True)
class SolutionSpace:
    """An affine space offset + span(basis) of matrices of one shape."""

    shape: tuple[int, int]
    basis: tuple[Matrix, ...]
    offset: Optional[Matrix] = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        if (m.rows, m.cols) != self.shape:
            return False
        if self.offset is not None:
            m = m - self.offset
        if m.is_zero:
            return True
        return span_contains([b.vec() for b in self.basis], m.vec())

    def __str__(self) -> str:
        kind = "affine" if self.offset is not None else "linear"
        return f"SolutionSpace({kind}, shape={self.shape}, dim={self.dim})"


def v_matrix(n: int, lam) -> Matrix:
    """V_n(lam) = diag(lam, lam^2, ..., lam^n)."""
    lam = _frac(lam)
    if lam == 0:
        raise ValueError("V_n is only defined for nonzero scalars")
    return Matrix.diagonal([lam ** (k + 1) for k in range(n)])


def u_matrix(n: int) -> Matrix:
    """U_n = diag(n-1, n-2, ..., 0); satisfies U_n N_n - N_n U_n = N_n."""
    return Matrix.diagonal([Fraction(n - 1 - k) for k in range(n)])


def p_matrix(n: int) -> Matrix:
    """P_n: antidiagonal ones; P_n N_n = N_n^T P_n and P_n^2 = id."""
    return Matrix(n, n, [1 if i + j == n - 1 else 0 for i in range(n) for j in range(n)])


def w_matrix(p: IrreduciblePoly, conv: Convention = EPS1) -> Matrix:
    """W_p^eps: the symmetric matrix with W x_p = x_p^T W.

    Entry (i,j) is 0 below the antidiagonal, 1 on it, and mu_{i+j-d+1}
    above it, where mu_n = -a_{d-n} - sum_{k<n} a_{d-n+k} mu_k; for
    eps=0 the mu_1 entries are dropped to match the rotation-scaling
    companion form.
    """
    d = p.degree
    if d == 1:
        return Matrix.identity(1)
    if conv.epsilon == 0:
        companion(p, conv)  # raises ConventionError when eps=0 is unavailable
    mu = [Fraction(0)] * d  # mu[n] for n = 1..d-1
    for n in range(1, d):
        mu[n] = -p.poly.coeff(d - n) - sum(
            p.poly.coeff(d - n + k) * mu[k] for k in range(1, n)
        )
    entries = []
    for i in range(d):
        for j in range(d):
            s = i + j - (d - 1)
            if s < 0:
                entries.append(Fraction(0))
            elif s == 0:
                entries.append(Fraction(1))
            elif s == 1:
                entries.append(Fraction(conv.epsilon) * mu[1])
            else:
                entries.append(mu[s])
    return Matrix(d, d, entries)


def nilpotent_intertwiners(m: int, n: int) -> SolutionSpace:
    """All B with B N_m = N_n B: shifted-diagonal matrices, dim min(m,n).

    The entries of a solution are constant along diagonals j - i = d and
    vanish unless max(0, m-n) <= d <= m-1.
    """
    if m < 1 or n < 1:
        raise ValueError("block sizes must be >= 1")
    basis = []
    for d in range(max(0, m - n), m):
        entries = [
            1 if j - i == d else 0 for i in range(n) for j in range(m)
        ]
        basis.append(Matrix(n, m, entries))
    return SolutionSpace((n, m), tuple(basis))


def jordan_intertwiners(
    p: IrreduciblePoly,
    m: int,
    q: IrreduciblePoly,
    n: int,
    conv: Convention = EPS1,
) -> SolutionSpace:
    """All B with B J(q,m) = J(p,n) B; zero space unless p = q.

    For p = q each basis element is a nilpotent intertwiner tensored with
    an extension-basis matrix, giving dimension deg p * min(m, n).
    """
    shape = (n * p.degree, m * q.degree)
    if p != q:
        return SolutionSpace(shape, ())
    ext = ext_basis_matrices(p, conv)
    basis = [
        b.kron(e)
        for b in nilpotent_intertwiners(m, n).basis
        for e in ext
    ]
    return SolutionSpace(shape, tuple(basis))


def _embed(big_rows: int, big_cols: int, small: Matrix, r0: int, c0: int) -> Matrix:
    entries = [Fraction(0)] * (big_rows * big_cols)
    for i in range(small.rows):
        for j in range(small.cols):
            entries[(r0 + i) * big_cols + c0 + j] = small[i, j]
    return Matrix(big_rows, big_cols, entries)


def _paired_intertwiners(
    blocks: list[Block], conv: Convention, target_poly
) -> list[Matrix]:
    """Full-size basis of R with R J(aleph) = J' R.

    J' is block diagonal with block i equal to J(target_poly(p_i), n_i);
    the (i, j) sub-block of R is a jordan intertwiner and vanishes unless
    target_poly(p_i) = p_j.
    """
    dim = sum(b.size for b in blocks)
    out = []
    for bi in blocks:
        pi = target_poly(bi.p)
        for bj in blocks:
            if pi != bj.p:
                continue
            local = jordan_intertwiners(pi, bj.n, pi, bi.n, conv)
            for b in local.basis:
                out.append(_embed(dim, dim, b, bi.offset, bj.offset))
    return out


def commutant(j: JordanForm) -> SolutionSpace:
    """All X with X J = J X, in the structured block basis."""
    basis = _paired_intertwiners(j.blocks, j.convention, lambda p: p)
    return SolutionSpace((j.dim, j.dim), tuple(basis))


def v_aleph(lam, a: MultiplicityFunction, conv: Convention = EPS1) -> Matrix:
    """V(lam; aleph) = direct sum of V_n(1/lam) tensor V_deg(lam|lam|^(eps-1))."""
    lam = _frac(lam)
    if lam == 0:
        raise ValueError("V(lam; aleph) is only defined for nonzero lam")
    scale = lam if conv.epsilon == 1 else lam / abs(lam)
    blocks = []
    for (p, n), mult in a.items():
        piece = v_matrix(n, 1 / lam).kron(v_matrix(p.degree, scale))
        blocks.extend([piece] * mult)
    return Matrix.block_diag(blocks)


def u_aleph(a: MultiplicityFunction) -> Matrix:
    """U(aleph) = direct sum of U_n blocks; defined for supp aleph = {X}."""
    if any(p != x_irreducible() for p in a.supp):
        raise ValueError("U(aleph) requires support {X}")
    blocks = []
    for (_p, n), mult in a.items():
        blocks.extend([u_matrix(n)] * mult)
    return Matrix.block_diag(blocks)


def w_aleph(a: MultiplicityFunction, conv: Convention = EPS1) -> Matrix:
    """W(aleph) = direct sum of P_n tensor W_p^eps; symmetric and invertible."""
    blocks = []
    for (p, n), mult in a.items():
        piece = p_matrix(n).kron(w_matrix(p, conv))
        blocks.extend([piece] * mult)
    return Matrix.block_diag(blocks)


def solve_lambda_comm(
    t,
    lam,
    hints: list[IrreduciblePoly] | None = None,
    conv: Convention = EPS1,
) -> SolutionSpace:
    """All X with X T = lam T X, for nonzero lam.

    In Jordan coordinates the space is V(lam; aleph) times the intertwiner
    space pairing each block (p, n) with blocks (lam*p, m).
    """
    lam = _frac(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if isinstance(t, JordanForm):
        j = t
        s = s_inv = None
    else:
        s, j = similarity_transform(t, hints, conv)
        s_inv = invert(s)
        conv = j.convention
    v = v_aleph(lam, j.aleph, j.convention)
    raw = _paired_intertwiners(
        j.blocks, j.convention, lambda p: star_irreducible(lam, p)
    )
    basis = []
    tm = t.matrix if isinstance(t, JordanForm) else t
    for r in raw:
        x = v * r
        if s is not None:
            x = s_inv * x * s
        assert x * tm == (tm * x).scale(lam), "lambda-commutation check failed"
        basis.append(x)
    return SolutionSpace((tm.rows, tm.cols), tuple(basis))


def solve_inhom_comm(
    t: Matrix, hints: list[IrreduciblePoly] | None = None
) -> Optional[SolutionSpace]:
    """All Y with Y T - T Y = T, or None when T is not nilpotent.

    Solvable exactly when supp aleph_T = {X}; then one solution is the
    conjugated U(aleph) and the rest differ by commutant elements.
    """
    if t.is_zero:
        raise ValueError("T must be nonzero")
    s, j = similarity_transform(t, hints)
    if any(p != x_irreducible() for p in j.aleph.supp):
        return None
    s_inv = invert(s)
    offset = s_inv * u_aleph(j.aleph) * s
    assert offset * t - t * offset == t, "inhomogeneous check failed"
    basis = []
    for c in commutant(j).basis:
        y = s_inv * c * s
        assert y * t == t * y
        basis.append(y)
    return SolutionSpace((t.rows, t.cols), tuple(basis), offset)


def solve_transpose_pair(
    a: MultiplicityFunction, conv: Convention = EPS1
) -> SolutionSpace:
    """All Z with Z J(aleph) + J(aleph)^T Z = 0, in the Jordan basis.

    Every solution is W(aleph) times a (-1)-intertwiner, so the space is
    W(aleph) applied to the lambda = -1 solution space.
    """
    if a.is_zero:
        raise ZeroMultiplicityFunction("transpose pair needs a nonzero function")
    j = canonical_form(a, conv)
    w = w_aleph(a, conv)
    jt = j.matrix.transpose()
    basis = []
    for x in solve_lambda_comm(j, -1).basis:
        z = w * x
        assert (z * j.matrix + jt * z).is_zero, "transpose-pair check failed"
        basis.append(z)
    return SolutionSpace((j.dim, j.dim), tuple(basis))
