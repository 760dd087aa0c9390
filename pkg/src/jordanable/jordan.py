"""Jordan blocks, canonical forms, multiplicity extraction and similarity.

The canonical form attached to a multiplicity function is the direct sum
of blocks J(p,n) = x_p (block diagonal) + nilpotent shift (identity blocks
on the block superdiagonal), laid out in a fixed deterministic order:
(deg p, coefficients of p, n ascending, copy index ascending).  Within a
block, coordinate (m, k) is the k-th extension coordinate of the m-th
chain vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ZeroMultiplicityFunction
from .field import (
    Matrix,
    Polynomial,
    invert,
    matrix_rank,
    poly_divmod,
    poly_xgcd,
    row_reduce,
    solve_linear,
    span_contains,
)
from .multiplicity import MultiplicityFunction
from .spectrum import (
    Convention,
    EPS1,
    IrreduciblePoly,
    companion,
    ext_basis_matrices,
    factor_with_hints,
    minimal_polynomial,
)


def nilpotent_shift(n: int) -> Matrix:
    """N_n: ones on the superdiagonal."""
    return Matrix(n, n, [1 if j == i + 1 else 0 for i in range(n) for j in range(n)])


def jordan_block(p: IrreduciblePoly, n: int, conv: Convention = EPS1) -> Matrix:
    """J(p,n): companion blocks on the diagonal, identity superdiagonal."""
    d = p.degree
    xp = companion(p, conv).matrix
    return Matrix.identity(n).kron(xp) + nilpotent_shift(n).kron(Matrix.identity(d))


@dataclass(frozen=True)
class BlockIndex:
    """Label of one coordinate of a canonical form."""

    p: IrreduciblePoly
    n: int
    alpha: int  # which copy of J(p,n), 0-based
    m: int  # chain position, 1..n
    k: int  # extension coordinate, 0..deg p - 1

    def __str__(self) -> str:
        return f"e[{self.alpha + 1}]^({self.m},{self.k})({self.p};{self.n})"


@dataclass(frozen=True)
class Block:
    """One J(p,n) copy inside a canonical form, with its coordinate range."""

    p: IrreduciblePoly
    n: int
    alpha: int
    offset: int

    @property
    def size(self) -> int:
        return self.n * self.p.degree

    def coord(self, m: int, k: int) -> int:
        return self.offset + (m - 1) * self.p.degree + k


def block_layout(a: MultiplicityFunction) -> list[Block]:
    blocks = []
    offset = 0
    for (p, n), mult in a.items():
        for alpha in range(mult):
            blocks.append(Block(p, n, alpha, offset))
            offset += n * p.degree
    return blocks


@dataclass(frozen=True)
class JordanForm:
    matrix: Matrix
    aleph: MultiplicityFunction
    convention: Convention
    index: tuple[BlockIndex, ...]

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def blocks(self) -> list[Block]:
        return block_layout(self.aleph)


def canonical_form(a: MultiplicityFunction, conv: Convention = EPS1) -> JordanForm:
    """J(aleph): the direct sum of all blocks in canonical order."""
    if a.is_zero:
        raise ZeroMultiplicityFunction("canonical form of the zero function")
    blocks = block_layout(a)
    matrix = Matrix.block_diag([jordan_block(b.p, b.n, conv) for b in blocks])
    index = tuple(
        BlockIndex(b.p, b.n, b.alpha, m, k)
        for b in blocks
        for m in range(1, b.n + 1)
        for k in range(b.p.degree)
    )
    return JordanForm(matrix, a, conv, index)


def _kernel_dims(t: Matrix, p: Polynomial, upto: int) -> list[int]:
    """dim ker p(t)^n for n = 0..upto."""
    a = p(t)
    dims = [0]
    power = Matrix.identity(t.rows)
    for _ in range(upto):
        power = power * a
        dims.append(t.cols - matrix_rank(power))
    return dims


def multiplicity_of(
    t: Matrix, hints: list[IrreduciblePoly] | None = None
) -> MultiplicityFunction:
    """Extract the multiplicity function of a square matrix.

    For each irreducible factor p of the minimal polynomial with exponent
    e, the count of length-n blocks is read off the kernel filtration of
    p(t): deg(p) * aleph(p,n) = 2 dim ker p(t)^n - dim ker p(t)^(n+1)
    - dim ker p(t)^(n-1).
    """
    if t.rows != t.cols:
        raise ValueError("multiplicity function of non-square matrix")
    factors = factor_with_hints(minimal_polynomial(t), hints)
    entries = []
    for p, e in factors.items():
        dims = _kernel_dims(t, p.poly, e + 1)
        for n in range(1, e + 1):
            num = 2 * dims[n] - dims[n + 1] - dims[n - 1]
            if num % p.degree:
                raise AssertionError("kernel filtration not a multiple of deg p")
            if num:
                entries.append((p, n, num // p.degree))
    a = MultiplicityFunction(entries)
    assert a.dim == t.rows, "block dimensions do not fill the space"
    return a


def _poly_compose_mod(f: Polynomial, g: Polynomial, mod: Polynomial) -> Polynomial:
    """f(g) reduced modulo mod, by Horner."""
    acc = Polynomial.zero()
    for c in reversed(f.coeffs):
        acc = poly_divmod(acc * g + Polynomial.constant(c), mod)[1]
    return acc


def lift_root(p: IrreduciblePoly, e: int) -> Polynomial:
    """A polynomial u with u = X mod p and p(u) = 0 mod p^e (Newton lift)."""
    mod = p.poly**e
    u = Polynomial.x()
    for _ in range(max(e - 1, 0).bit_length() + 1):
        pu = _poly_compose_mod(p.poly, u, mod)
        if pu.is_zero:
            break
        dpu = _poly_compose_mod(p.poly.derivative(), u, mod)
        g, s, _ = poly_xgcd(dpu, mod)
        assert g.degree == 0, "p' not invertible modulo p^e"
        u = poly_divmod(u - pu * s, mod)[1]
    assert _poly_compose_mod(p.poly, u, mod).is_zero
    return u


def _ext_basis_ops(
    p: IrreduciblePoly, xhat: Matrix, conv: Convention
) -> list[Matrix]:
    """Matrices of the extension-basis elements acting through the lifted root."""
    if conv.epsilon == 0 and p.degree == 2:
        from .spectrum import rotation_parameters

        a, b = rotation_parameters(p.poly)
        i_hat = (xhat - Matrix.identity(xhat.rows).scale(a)).scale(Fraction(1) / b)
        return [Matrix.identity(xhat.rows), i_hat]
    return [xhat**k for k in range(p.degree)]


def _chain_tops(
    t: Matrix,
    p: IrreduciblePoly,
    e: int,
    counts: dict[int, int],
    basis_ops: list[Matrix],
) -> dict[int, list[tuple]]:
    """Choose chain-top vectors of each height for the factor p.

    At height n a valid top must avoid the span of ker p(t)^(n-1), of
    p(t) ker p(t)^(n+1), and of the extension-field spans of tops already
    chosen at this height; that span is closed under the lifted-root
    action, so avoiding it guarantees independence over the extension.
    """
    a = p.poly(t)
    kers = []
    power = Matrix.identity(t.rows)
    for _n in range(e + 1):
        kers.append(row_reduce(power)[2])
        power = power * a
    tops: dict[int, list[tuple]] = {}
    for n in range(e, 0, -1):
        want = counts.get(n, 0)
        tops[n] = []
        if want == 0:
            continue
        guard: list[tuple] = list(kers[n - 1])
        guard.extend(a.apply(v) for v in kers[min(n + 1, e)])
        for cand in kers[n]:
            if len(tops[n]) == want:
                break
            if guard and span_contains(guard, cand):
                continue
            tops[n].append(cand)
            for op in basis_ops:
                guard.append(op.apply(cand))
        if len(tops[n]) != want:
            raise AssertionError("could not find enough chain tops")
    return tops


def similarity_transform(
    t: Matrix,
    hints: list[IrreduciblePoly] | None = None,
    conv: Convention = EPS1,
) -> tuple[Matrix, JordanForm]:
    """An invertible S with S t S^-1 = J(aleph_t), plus the canonical form."""
    a = multiplicity_of(t, hints)
    if a.is_zero:
        # the zero-dimensional matrix; S is empty
        j = JordanForm(t, a, conv, ())
        return Matrix.identity(0), j
    factors = {}
    for (p, n), m in a.items():
        factors.setdefault(p, {})[n] = m
    columns: dict[tuple[IrreduciblePoly, int], list[list]] = {}
    for p, counts in factors.items():
        e = max(counts)
        u = lift_root(p, e)
        xhat = u(t)
        nil = t - xhat
        basis_ops = _ext_basis_ops(p, xhat, conv)
        tops = _chain_tops(t, p, e, counts, basis_ops)
        for n in sorted(counts):
            for v in tops.get(n, []):
                chain_cols = []
                for m in range(1, n + 1):
                    em = (nil ** (n - m)).apply(v)
                    for op in basis_ops:
                        chain_cols.append(list(op.apply(em)))
                columns.setdefault((p, n), []).append(chain_cols)
    ordered: list[list] = []
    for (p, n), _m in a.items():
        for chain_cols in columns[(p, n)]:
            ordered.extend(chain_cols)
    s_inv = Matrix.column_stack(ordered)
    s = invert(s_inv)
    j = canonical_form(a, conv)
    assert s * t == j.matrix * s, "similarity postcondition failed"
    return s, j


@dataclass(frozen=True)
class InvariantSubspaceSpec:
    """A target multiplicity function together with mixing coefficients.

    ``mu`` maps (p, n, beta, k, alpha, shift) to a rational coefficient;
    the generated chain eta^m uses, for each source block (p, k, alpha),
    the chain vector at position m - shift scaled by that coefficient.
    """

    beth: MultiplicityFunction
    mu: dict[tuple[IrreduciblePoly, int, int, int, int, int], Fraction]


def _xi_chains(j: JordanForm) -> dict[tuple[IrreduciblePoly, int, int], list[tuple]]:
    """Per block, the chain basis with p(J) xi^m = xi^(m-1)."""
    out = {}
    dim = j.dim
    pj_cache: dict[IrreduciblePoly, Matrix] = {}
    for b in j.blocks:
        pj = pj_cache.setdefault(b.p, b.p.poly(j.matrix))
        top = [Fraction(0)] * dim
        top[b.coord(b.n, 0)] = Fraction(1)
        chain = [tuple(top)]
        for _ in range(b.n - 1):
            chain.append(pj.apply(chain[-1]))
        chain.reverse()  # chain[m-1] = xi^m
        out[(b.p, b.n, b.alpha)] = chain
    return out


def _ext_action(j: JordanForm, p: IrreduciblePoly, k: int) -> Matrix:
    """Block-diagonal action of the k-th extension-basis element on p-blocks."""
    blocks = []
    basis = ext_basis_matrices(p, j.convention)
    for b in j.blocks:
        if b.p == p:
            blocks.append(Matrix.identity(b.n).kron(basis[k]))
        else:
            blocks.append(Matrix.zeros(b.size, b.size))
    return Matrix.block_diag(blocks)


def invariant_subspace_from(
    j: JordanForm, spec: InvariantSubspaceSpec
) -> list[tuple]:
    """Basis of the invariant subspace generated by the mu-combinations."""
    xi = _xi_chains(j)
    vectors: list[tuple] = []
    for (p, n), mult in spec.beth.items():
        for beta in range(mult):
            witnessed = any(
                key[0] == p and key[1] == n and key[2] == beta and key[5] == 0
                and key[3] >= n and val != 0
                for key, val in spec.mu.items()
            )
            if not witnessed:
                raise ValueError(
                    f"no nonzero top coefficient for chain ({p}, {n}, {beta}); "
                    "the generated subspace cannot have that block"
                )
            etas = []
            for m in range(1, n + 1):
                eta = [Fraction(0)] * j.dim
                for (pp, nn, bb, k, alpha, shift), val in spec.mu.items():
                    if (pp, nn, bb) != (p, n, beta) or val == 0:
                        continue
                    l = m - shift
                    if l < 1 or l > min(k, m):
                        continue
                    chain = xi.get((p, k, alpha))
                    if chain is None:
                        raise ValueError(f"no source block ({p}, {k}, {alpha})")
                    eta = [x + val * y for x, y in zip(eta, chain[l - 1])]
                etas.append(tuple(eta))
            for eta in etas:
                for k in range(p.degree):
                    vectors.append(_ext_action(j, p, k).apply(eta))
    if matrix_rank(Matrix.column_stack([list(v) for v in vectors])) != len(vectors):
        raise ValueError("generated vectors are linearly dependent")
    return vectors


def check_invariant_and_restrict(
    t: Matrix, w: Sequence[Sequence], hints: list[IrreduciblePoly] | None = None
) -> Optional[MultiplicityFunction]:
    """Multiplicity function of t restricted to span(w), or None if not invariant."""
    vectors = [list(v) for v in w]
    if not vectors:
        return MultiplicityFunction(())
    mat = Matrix.column_stack(vectors)
    if matrix_rank(mat) != len(vectors):
        raise ValueError("dependent spanning set")
    coeffs = []
    for v in vectors:
        sol = solve_linear(mat, t.apply(v))
        if sol is None:
            return None
        coeffs.append(list(sol[0]))
    restriction = Matrix.column_stack(coeffs)
    return multiplicity_of(restriction, hints)
