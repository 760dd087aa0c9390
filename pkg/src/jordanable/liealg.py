"""Almost Abelian Lie algebras A(aleph) = F e0 |x V with ad_e0 = J(aleph).

Coordinates are always (e0, V) with V in the canonical Jordan block
order, so a vector has length 1 + dim aleph and a structure map has that
square shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DecomposableUnsupported,
    HeisenbergDeferred,
    ZeroMultiplicityFunction,
)
from .field import Matrix, _frac, invert, matrix_rank, row_reduce, span_contains
from .jordan import (
    BlockIndex,
    block_layout,
    canonical_form,
    similarity_transform,
)
from .multiplicity import (
    DilationGroup,
    MultiplicityFunction,
    dilation_symmetries,
    projectively_equal,
)
from .equations import (
    SolutionSpace,
    commutant,
    solve_lambda_comm,
    solve_transpose_pair,
    u_aleph,
    v_aleph,
)
from .spectrum import Convention, EPS1, IrreduciblePoly, star_irreducible, x_irreducible


@dataclass(frozen=True)
class LabeledVector:
    """A coordinate vector together with its basis label (None = e0)."""

    label: Optional[BlockIndex]
    vector: tuple

    def __str__(self) -> str:
        name = "e0" if self.label is None else str(self.label)
        return f"{name}: {self.vector}"


class AlmostAbelianAlgebra:
    """A(aleph): one outer generator e0 acting on the Abelian ideal V."""

    def __init__(self, aleph: MultiplicityFunction, conv: Convention = EPS1):
        self.aleph = aleph
        self.form = canonical_form(aleph, conv)

    @property
    def convention(self) -> Convention:
        return self.form.convention

    @property
    def dimension(self) -> int:
        return 1 + self.form.dim

    @property
    def labels(self) -> tuple:
        return (None,) + self.form.index

    @property
    def is_heisenberg(self) -> bool:
        return self.aleph.entries == {(x_irreducible(), 2): 1}

    def unit(self, coord: int) -> tuple:
        v = [Fraction(0)] * self.dimension
        v[coord] = Fraction(1)
        return tuple(v)

    def __repr__(self) -> str:
        return f"AlmostAbelianAlgebra({self.aleph})"


def bracket(l: AlmostAbelianAlgebra, x: Sequence, y: Sequence) -> tuple:
    """[a e0 + u, b e0 + w] = a J w - b J u, living in V."""
    if len(x) != l.dimension or len(y) != l.dimension:
        raise ValueError("vectors must be in e0 + V coordinates")
    a, u = _frac(x[0]), [_frac(c) for c in x[1:]]
    b, w = _frac(y[0]), [_frac(c) for c in y[1:]]
    ju = l.form.matrix.apply(u)
    jw = l.form.matrix.apply(w)
    return (Fraction(0),) + tuple(a * cw - b * cu for cw, cu in zip(jw, ju))


def centre(l: AlmostAbelianAlgebra) -> list[LabeledVector]:
    """Z(L) = ker ad_e0: the bottom chain vectors of the X blocks."""
    out = []
    xp = x_irreducible()
    for b in l.form.blocks:
        if b.p == xp:
            label = BlockIndex(b.p, b.n, b.alpha, 1, 0)
            out.append(LabeledVector(label, l.unit(1 + b.coord(1, 0))))
    return out


def lower_central_series(l: AlmostAbelianAlgebra, k: int) -> list[LabeledVector]:
    """L_(k) = image of ad_e0^k: non-X blocks entirely, X chains cut by k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    xp = x_irreducible()
    for b in l.form.blocks:
        top = b.n - k if b.p == xp else b.n
        for m in range(1, top + 1):
            for j in range(b.p.degree):
                label = BlockIndex(b.p, b.n, b.alpha, m, j)
                out.append(LabeledVector(label, l.unit(1 + b.coord(m, j))))
    return out


def is_nilpotent(l: AlmostAbelianAlgebra) -> bool:
    """Nilpotent exactly when the support is {X}."""
    xp = x_irreducible()
    return all(p == xp for p in l.aleph.supp)


def decompose(l: AlmostAbelianAlgebra) -> tuple[MultiplicityFunction, int]:
    """Split off W = the (X,1) copies; the rest stays in L0."""
    xp = x_irreducible()
    w_dim = l.aleph(xp, 1)
    l0 = MultiplicityFunction(
        (p, n, m) for (p, n), m in l.aleph.items() if (p, n) != (xp, 1)
    )
    return l0, w_dim


def classify_iso(
    t1: Matrix,
    t2: Matrix,
    hints: list[IrreduciblePoly] | None = None,
    conv: Convention = EPS1,
) -> Optional[tuple[Fraction, Matrix]]:
    """Isomorphism test for A(aleph_T1) vs A(aleph_T2).

    Returns (lam, M) with lam * aleph_T1 = aleph_T2 and M invertible
    satisfying M T1 M^-1 = T2 / lam, or None when no dilation matches.
    """
    if t1.is_zero or t2.is_zero:
        raise ValueError("classification needs nonzero operators")
    s1, j1 = similarity_transform(t1, hints, conv)
    s2, j2 = similarity_transform(t2, hints, conv)
    lam = projectively_equal(j1.aleph, j2.aleph)
    if lam is None:
        return None
    v = v_aleph(lam, j1.aleph, conv)
    perm = _block_permutation(lam, j1.aleph, j2.aleph)
    m = invert(s2) * perm * invert(v) * s1
    assert (m * t1).scale(lam) == t2 * m, "classification witness check failed"
    assert matrix_rank(m) == m.rows
    return lam, m


def _block_permutation(
    lam: Fraction, a1: MultiplicityFunction, a2: MultiplicityFunction
) -> Matrix:
    """Permutation taking the dilated blocks of a1 (in a1 order) to a2 order."""
    src = block_layout(a1)
    dilated = [(star_irreducible(lam, b.p), b.n, b.offset) for b in src]
    dim = a1.dim
    entries = [Fraction(0)] * (dim * dim)
    used = [False] * len(dilated)
    for tgt in block_layout(a2):
        for i, (q, n, offset) in enumerate(dilated):
            if used[i] or (q, n) != (tgt.p, tgt.n):
                continue
            used[i] = True
            for t in range(tgt.size):
                entries[(tgt.offset + t) * dim + offset + t] = Fraction(1)
            break
        else:
            raise AssertionError("no block match despite equal orbits")
    return Matrix(dim, dim, entries)


def _reject_special(l: AlmostAbelianAlgebra, allow_decomposable: bool = False):
    if l.is_heisenberg:
        raise HeisenbergDeferred()
    if not allow_decomposable and decompose(l)[1] > 0:
        raise DecomposableUnsupported(
            "decomposable algebra: use compose_decomposable"
        )


@dataclass(frozen=True)
class AutomorphismSpace:
    """Aut(L) for indecomposable non-Heisenberg L.

    An automorphism is (nu 0; gamma Delta) with nu in Dil(aleph), gamma
    free in V and Delta an invertible nu-intertwiner; for each nu the
    Delta candidates form the linear space delta_space(nu), with
    invertibility left as a rank predicate.
    """

    algebra: AlmostAbelianAlgebra
    dil: DilationGroup
    gamma_dim: int

    def delta_space(self, nu) -> SolutionSpace:
        nu = _frac(nu)
        if nu not in self.dil:
            raise ValueError(f"{nu} is not in Dil(aleph)")
        return solve_lambda_comm(self.algebra.form, nu)

    @property
    def families(self) -> list[tuple[Fraction, SolutionSpace]]:
        if self.dil.all_scalars:
            raise ValueError("Dil(aleph) is all of the scalar group; pick a nu")
        return [(nu, self.delta_space(nu)) for nu in self.dil.elements]

    @staticmethod
    def is_invertible(delta: Matrix) -> bool:
        return delta.rows == delta.cols and matrix_rank(delta) == delta.rows

    def assemble(self, nu, delta: Matrix, gamma: Sequence) -> Matrix:
        """The full automorphism matrix (nu 0; gamma Delta), validated."""
        nu = _frac(nu)
        if not self.is_invertible(delta):
            raise ValueError("Delta must be invertible")
        if not self.delta_space(nu).contains(delta):
            raise ValueError("Delta is not a nu-intertwiner")
        n = self.algebra.dimension
        rows = [[nu] + [Fraction(0)] * (n - 1)]
        for i in range(n - 1):
            rows.append([_frac(gamma[i])] + list(delta.row(i)))
        phi = Matrix.from_rows(rows)
        assert is_automorphism(self.algebra, phi)
        return phi


def automorphism_space(l: AlmostAbelianAlgebra) -> AutomorphismSpace:
    """Structured description of Aut(L); L indecomposable, not Heisenberg."""
    _reject_special(l)
    return AutomorphismSpace(l, dilation_symmetries(l.aleph), l.form.dim)


def _gamma_unit(l: AlmostAbelianAlgebra, i: int) -> Matrix:
    n = l.dimension
    entries = [Fraction(0)] * (n * n)
    entries[(1 + i) * n] = Fraction(1)
    return Matrix(n, n, entries)


def _embed_v_map(l: AlmostAbelianAlgebra, delta: Matrix) -> Matrix:
    """Extend a V -> V map by zero on e0 to a full coordinate matrix."""
    n = l.dimension
    entries = [Fraction(0)] * (n * n)
    for i in range(delta.rows):
        for j in range(delta.cols):
            entries[(1 + i) * n + 1 + j] = delta[i, j]
    return Matrix(n, n, entries)


def _unit_matrix(n: int, i: int, j: int) -> Matrix:
    entries = [Fraction(0)] * (n * n)
    entries[i * n + j] = Fraction(1)
    return Matrix(n, n, entries)


def is_derivation(l: AlmostAbelianAlgebra, d: Matrix) -> bool:
    """D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    n = l.dimension
    units = [l.unit(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d.apply(bracket(l, units[i], units[j]))
            rhs1 = bracket(l, d.apply(units[i]), units[j])
            rhs2 = bracket(l, units[i], d.apply(units[j]))
            if any(a != b + c for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def is_automorphism(l: AlmostAbelianAlgebra, phi: Matrix) -> bool:
    """phi invertible with phi[x,y] = [phi x, phi y] on all basis pairs."""
    n = l.dimension
    if matrix_rank(phi) != n:
        return False
    units = [l.unit(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = phi.apply(bracket(l, units[i], units[j]))
            rhs = bracket(l, phi.apply(units[i]), phi.apply(units[j]))
            if lhs != rhs:
                return False
    return True


def derivation_space(l: AlmostAbelianAlgebra) -> SolutionSpace:
    """Der(L) as an explicit basis of full coordinate matrices.

    Indecomposable case: (0 0; gamma Delta) with Delta in the commutant,
    plus, when L is nilpotent, one extra direction (alpha 0; 0 alpha U).
    Decomposable L = L0 + W is assembled from Der(L0) and the maps
    W -> Z(L0), L0/(L0)_(1) -> W and W -> W.
    """
    if l.is_heisenberg:
        raise HeisenbergDeferred()
    l0_aleph, w_dim = decompose(l)
    if w_dim == 0:
        basis = [_gamma_unit(l, i) for i in range(l.form.dim)]
        basis.extend(_embed_v_map(l, c) for c in commutant(l.form).basis)
        if is_nilpotent(l):
            alpha = _embed_v_map(l, u_aleph(l.aleph))
            n = l.dimension
            alpha = alpha + _unit_matrix(n, 0, 0)
            basis.append(alpha)
        for d in basis:
            assert is_derivation(l, d), "derivation identity failed"
        return SolutionSpace((l.dimension, l.dimension), tuple(basis))
    return SolutionSpace(
        (l.dimension, l.dimension), tuple(compose_decomposable(l, "der").full_basis())
    )


def _l0_coord_map(l: AlmostAbelianAlgebra) -> tuple[list[int], list[int]]:
    """Indices of the L0 coordinates (e0 first) and of the W coordinates."""
    xp = x_irreducible()
    l0 = [0]
    w = []
    for b in l.form.blocks:
        coords = [1 + b.coord(m, k) for m in range(1, b.n + 1) for k in range(b.p.degree)]
        if b.p == xp and b.n == 1:
            w.extend(coords)
        else:
            l0.extend(coords)
    return l0, w


@dataclass(frozen=True)
class CompositeSpace:
    """Aut/Der of a decomposable L = L0 + W, in block-map form.

    The inner description covers phi00 on L0; the unit bases list the
    admissible corner maps: phi01 sends W into Z(L0), phi10 kills
    (L0)_(1), phi11 acts on W (invertible for automorphisms).  All
    matrices are full L-coordinate matrices.
    """

    algebra: AlmostAbelianAlgebra
    kind: str  # "aut" or "der"
    l0_algebra: AlmostAbelianAlgebra
    l0_space: object  # AutomorphismSpace or SolutionSpace
    phi01_basis: tuple
    phi10_basis: tuple
    phi11_basis: tuple
    l0_coords: tuple
    w_coords: tuple

    def full_basis(self) -> list[Matrix]:
        """For kind 'der': basis of the full derivation space."""
        if self.kind != "der":
            raise ValueError("full_basis is only linear for derivations")
        basis = [self._embed_l0(d) for d in self.l0_space.basis]
        basis.extend(self.phi01_basis + self.phi10_basis + self.phi11_basis)
        for d in basis:
            assert is_derivation(self.algebra, d), "derivation identity failed"
        return basis

    def _embed_l0(self, m0: Matrix) -> Matrix:
        n = self.algebra.dimension
        entries = [Fraction(0)] * (n * n)
        for i, gi in enumerate(self.l0_coords):
            for j, gj in enumerate(self.l0_coords):
                entries[gi * n + gj] = m0[i, j]
        return Matrix(n, n, entries)

    def assemble_automorphism(
        self, nu, delta: Matrix, gamma: Sequence, phi10, phi11: Matrix
    ) -> Matrix:
        """Full automorphism from L0 data plus the corner maps, validated.

        phi10 is a coefficient vector over phi10_basis; phi01 is forced
        to zero whenever Z(L0) = 0 and is likewise given by coefficients
        otherwise (appended to phi10 for simplicity is avoided: pass a
        pair when needed).
        """
        if self.kind != "aut":
            raise ValueError("assemble_automorphism needs kind 'aut'")
        phi00 = self.l0_space.assemble(nu, delta, gamma)
        full = self._embed_l0(phi00)
        for c, b in zip(phi10, self.phi10_basis):
            full = full + b.scale(_frac(c))
        w = len(self.w_coords)
        if matrix_rank(phi11) != w:
            raise ValueError("phi11 must be invertible")
        n = self.algebra.dimension
        entries = [Fraction(0)] * (n * n)
        for i in range(w):
            for j in range(w):
                entries[self.w_coords[i] * n + self.w_coords[j]] = phi11[i, j]
        full = full + Matrix(n, n, entries)
        assert is_automorphism(self.algebra, full)
        return full


def compose_decomposable(l: AlmostAbelianAlgebra, kind: str) -> CompositeSpace:
    """Aut/Der description of a decomposable L = L0 + W (w_dim >= 1)."""
    if kind not in ("aut", "der"):
        raise ValueError("kind must be 'aut' or 'der'")
    l0_aleph, w_dim = decompose(l)
    if w_dim < 1:
        raise ValueError("algebra is indecomposable; use aut/der directly")
    if l0_aleph.is_zero:
        raise ZeroMultiplicityFunction(
            "Abelian algebra: not almost Abelian, no structure to compose"
        )
    l0 = AlmostAbelianAlgebra(l0_aleph, l.convention)
    if l0.is_heisenberg:
        raise HeisenbergDeferred()
    l0_coords, w_coords = _l0_coord_map(l)
    n = l.dimension

    # phi01: W -> Z(L0)
    centre_coords = [
        1 + b.coord(1, 0)
        for b in l.form.blocks
        if b.p == x_irreducible() and b.n > 1
    ]
    phi01 = tuple(
        _unit_matrix(n, z, w) for w in w_coords for z in centre_coords
    )
    # phi10: L0 -> W vanishing on (L0)_(1) = JV0 (the brackets of L0)
    xp = x_irreducible()
    cokernel_coords = [0]
    for b in l.form.blocks:
        if b.p == xp and b.n > 1:
            for k in range(b.p.degree):
                cokernel_coords.append(1 + b.coord(b.n, k))
    phi10 = tuple(
        _unit_matrix(n, w, c) for w in w_coords for c in cokernel_coords
    )
    phi11 = tuple(
        _unit_matrix(n, wi, wj) for wi in w_coords for wj in w_coords
    )
    if kind == "aut":
        l0_space: object = automorphism_space(l0)
    else:
        l0_space = derivation_space(l0)
    return CompositeSpace(
        l, kind, l0, l0_space, phi01, phi10, phi11,
        tuple(l0_coords), tuple(w_coords),
    )


@dataclass(frozen=True)
class CasimirElement:
    """A symmetric matrix A with A J + J^T A = 0, displayed as a form."""

    matrix: Matrix

    @property
    def display(self) -> str:
        terms = []
        d = self.matrix.rows
        for i in range(d):
            if self.matrix[i, i]:
                terms.append(_term(self.matrix[i, i], f"x{i + 1}^2"))
            for j in range(i + 1, d):
                if self.matrix[i, j]:
                    terms.append(_term(2 * self.matrix[i, j], f"x{i + 1}*x{j + 1}"))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __str__(self) -> str:
        return f"Q = {self.display}"


def _term(c: Fraction, sym: str) -> str:
    if c == 1:
        return sym
    if c == -1:
        return "-" + sym
    return f"{c}*{sym}"


def casimir_basis(l: AlmostAbelianAlgebra) -> list[CasimirElement]:
    """Basis of the quadratic Casimirs: symmetric A with A J + J^T A = 0."""
    space = solve_transpose_pair(l.aleph, l.convention)
    if not space.basis:
        return []
    # impose symmetry: kernel of c -> sum c_i (B_i - B_i^T)
    cols = [list((b - b.transpose()).vec()) for b in space.basis]
    kernel = row_reduce(Matrix.column_stack(cols))[2]
    j = l.form.matrix
    jt = j.transpose()
    out = []
    for coeffs in kernel:
        a = Matrix.zeros(j.rows, j.cols)
        for c, b in zip(coeffs, space.basis):
            a = a + b.scale(c)
        assert a == a.transpose()
        assert (a * j + jt * a).is_zero
        out.append(CasimirElement(a))
    return out


def _independent_or_raise(vectors: list[list]) -> Matrix:
    m = Matrix.column_stack(vectors)
    if matrix_rank(m) != len(vectors):
        raise ValueError("dependent spanning set")
    return m


def check_subalgebra(l: AlmostAbelianAlgebra, vectors: Sequence[Sequence]) -> bool:
    """True when span(vectors) is closed under the bracket."""
    vecs = [[_frac(c) for c in v] for v in vectors]
    _independent_or_raise(vecs)
    span = [tuple(v) for v in vecs]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if not span_contains(span, bracket(l, vecs[i], vecs[j])):
                return False
    return True


def check_ideal(l: AlmostAbelianAlgebra, vectors: Sequence[Sequence]) -> bool:
    """True when [L, span(vectors)] lies inside span(vectors)."""
    vecs = [[_frac(c) for c in v] for v in vectors]
    _independent_or_raise(vecs)
    span = [tuple(v) for v in vecs]
    for i in range(l.dimension):
        unit = l.unit(i)
        for v in vecs:
            if not span_contains(span, bracket(l, unit, v)):
                return False
    return True
