"""The three operator equations, solved in closed form and cross-checked.

Starts from a scrambled integer matrix, recovers its canonical form,
then solves X T = lam T X, Y T - T Y = T and Z J + J^T Z = 0, comparing
each structured answer against the brute-force Kronecker oracle.
"""

import random
from fractions import Fraction

from jordanable import (
    aleph,
    canonical_form,
    multiplicity_of,
    nilpotent_shift,
    parse_poly,
    similarity_transform,
    solve_inhom_comm,
    solve_lambda_comm,
    solve_transpose_pair,
    IrreduciblePoly,
)
from jordanable.field import invert
from jordanable.oracle import EquationSpec, brute_solve, random_unimodular
from jordanable.serialize import pretty_matrix


def irr(text):
    return IrreduciblePoly.check(parse_poly(text))


def main():
    # scramble a canonical form with a random unimodular conjugation
    a = aleph((irr("X - 1"), 1, 1), (irr("X + 1"), 1, 1), (irr("X"), 2, 1))
    j = canonical_form(a)
    r = random_unimodular(random.Random(4), j.dim, 18)
    t = invert(r) * j.matrix * r
    print("scrambled T:")
    print(pretty_matrix(t))
    print(f"extracted multiplicity function: {multiplicity_of(t)}")
    s, jf = similarity_transform(t)
    assert s * t == jf.matrix * s
    print("recovered canonical form:")
    print(pretty_matrix(jf.matrix, [1, 2]))
    print()

    for lam in (Fraction(-1), Fraction(2)):
        space = solve_lambda_comm(t, lam)
        oracle = brute_solve(EquationSpec.lambda_comm(t, lam))
        print(f"X T = {lam} T X: dimension {space.dim} "
              f"(oracle agrees: {space.dim == oracle.dim})")
    print()

    print("Y T - T Y = T is solvable only for nilpotent T:")
    print(f"  this T: {solve_inhom_comm(t) is not None}")
    n = nilpotent_shift(3)
    space = solve_inhom_comm(n)
    print(f"  N_3: offset Y = diag(2,1,0) plus a {space.dim}-dim commutant")
    print(pretty_matrix(space.offset))
    print()

    z = solve_transpose_pair(a)
    oracle = brute_solve(EquationSpec.transpose_pair(j.matrix))
    print(f"Z J + J^T Z = 0: dimension {z.dim} "
          f"(oracle agrees: {z.dim == oracle.dim})")
    for b in z.basis:
        assert (b * j.matrix + j.matrix.transpose() * b).is_zero


if __name__ == "__main__":
    main()
