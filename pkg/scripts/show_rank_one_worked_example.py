#!/usr/bin/env python3
"""Walk through the full pipeline on the one-dimensional Jordan algebra.

Prints every intermediate object: bracket table, moment maps, the three
representation operators, the formal-weight operators, and the solved
weight parameter.  Useful as a readable end-to-end sanity check.
"""

import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from starcayley import (
    DiscreteSeries,
    GradedLieAlgebra,
    StarRepresentation,
    SymplecticChart,
    make_rank_one,
    solve_equivalence,
)
from starcayley.hds import compare_with_closed_form, special_nu_value


def main() -> None:
    g = GradedLieAlgebra(make_rank_one(), mu=Fraction(1))
    print(f"dim g = {g.dim}, beta(o,o) = {g.beta(g.base_point(), g.base_point())}")

    print("\nbracket table (nonzero [e_i, e_j], i < j):")
    for (i, j), nz in sorted(g.bracket_table.items()):
        terms = " + ".join(f"{c}*e{k}" for k, c in sorted(nz.items()))
        print(f"  [e{i}, e{j}] = {terms}")

    ch = SymplecticChart(g)
    print("\nmoment maps:")
    for i, lam in enumerate(ch.moment):
        print(f"  lambda[{i}] = {lam}")

    srep = StarRepresentation(g)
    print("\nrepresentation operators:")
    for i, op in enumerate(srep.rho_basis()):
        print(f"  rho[{i}] = {op}")

    ds = DiscreteSeries(g)
    print("\nformal-weight operators (V + m*S):")
    for i, op in enumerate(ds.dpi_basis()):
        print(f"  dpi[{i}] = ({op.v})  +  m * ({op.s})")

    eq = solve_equivalence(g, srep.rho_basis(), ds)
    cmpr = compare_with_closed_form(g, eq.m_star)
    print(f"\nintertwiner: alpha = {eq.alpha}")
    print(f"solved weight m* = {eq.m_star}")
    print(f"closed-form weight = {cmpr.m_closed}  ({cmpr.match}, factor {cmpr.factor})")
    nu0, vanishes = special_nu_value(g)
    print(f"special parameter value nu0 = {nu0}; numerator vanishes: {vanishes}")


if __name__ == "__main__":
    main()
