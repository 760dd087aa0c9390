"""The 3-dimensional algebra with ad_e0 = diag(1, -1).

Walks through every structure computation on the smallest interesting
example: one generator e0 acting on a plane with eigenvalues +1 and -1.
"""

from fractions import Fraction

from jordanable import (
    AlmostAbelianAlgebra,
    aleph,
    automorphism_space,
    casimir_basis,
    centre,
    check_ideal,
    check_subalgebra,
    derivation_space,
    dilation_symmetries,
    is_nilpotent,
    lower_central_series,
    parse_poly,
    IrreduciblePoly,
)
from jordanable.serialize import pretty_matrix


def irr(text):
    return IrreduciblePoly.check(parse_poly(text))


def main():
    a = aleph((irr("X - 1"), 1, 1), (irr("X + 1"), 1, 1))
    l = AlmostAbelianAlgebra(a)
    print(f"multiplicity function: {a}")
    print("ad_e0 = J(aleph):")
    print(pretty_matrix(l.form.matrix))
    print()

    print(f"centre dimension: {len(centre(l))}  (trivial: no X blocks)")
    print(f"nilpotent: {is_nilpotent(l)}")
    for k in (1, 2, 3):
        print(f"L_({k}) dimension: {len(lower_central_series(l, k))}  (all of V)")
    print()

    dil = dilation_symmetries(a)
    print(f"Dil(aleph) = {dil.elements}: the aleph is symmetric under X -> -X")
    aut = automorphism_space(l)
    for nu, space in aut.families:
        print(f"automorphism family nu = {nu}: Delta space of dimension {space.dim}")
        for b in space.basis:
            print(pretty_matrix(b))
    sample = aut.assemble(-1, _m([[0, 2], [3, 0]]), [1, -1])
    print("a sample automorphism (nu = -1, antidiagonal Delta, gamma = (1,-1)):")
    print(pretty_matrix(sample))
    print()

    der = derivation_space(l)
    print(f"Der(L) has dimension {der.dim}:")
    for d in der.basis:
        print(pretty_matrix(d))
        print()

    cas = casimir_basis(l)
    print(f"quadratic Casimirs: dimension {len(cas)}")
    for c in cas:
        print(f"  {c}")
    print()

    print("subalgebra / ideal predicates:")
    axis = [(0, 1, 0)]
    print(f"  span{{v1}}: subalgebra {check_subalgebra(l, axis)}, "
          f"ideal {check_ideal(l, axis)}")
    line = [(1, 0, 0)]
    print(f"  span{{e0}}: subalgebra {check_subalgebra(l, line)}, "
          f"ideal {check_ideal(l, line)}")


def _m(rows):
    from jordanable import Matrix

    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


if __name__ == "__main__":
    main()
