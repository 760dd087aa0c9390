"""Casimirs of a rotation pair in the eps = 0 convention.

The multiplicity function (1x(X^2+1)^1, 1x(X^2+4)^1) gives a 5-dim
algebra whose operator acts as two rotation-scaling blocks; its two
quadratic Casimirs are the sums of squares on each plane.
"""

from jordanable import (
    AlmostAbelianAlgebra,
    EPS0,
    aleph,
    casimir_basis,
    parse_poly,
    IrreduciblePoly,
)
from jordanable.serialize import pretty_matrix


def irr(text):
    return IrreduciblePoly.check(parse_poly(text))


def main():
    a = aleph((irr("X^2 + 1"), 1, 1), (irr("X^2 + 4"), 1, 1))
    l = AlmostAbelianAlgebra(a, EPS0)
    print(f"aleph = {a}  (eps = 0: rotation-scaling companion blocks)")
    print("J(aleph):")
    print(pretty_matrix(l.form.matrix, [2]))
    print()
    cas = casimir_basis(l)
    print(f"quadratic Casimirs: dimension {len(cas)}")
    for c in cas:
        print(f"  {c}")
    print()
    print("each basis element is a scalar on one rotation plane, so the")
    print("general Casimir is a*(x1^2 + x2^2) + c*(x3^2 + x4^2).")


if __name__ == "__main__":
    main()
