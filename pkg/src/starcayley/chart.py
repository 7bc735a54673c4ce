"""Symplectic chart on the orbit of the base point, and moment maps.

Coordinates (l^1..l^n, m^1..m^n) are attached to a symplectic basis
L_a of g(-1) and its omega-dual L'_a in g(1).  The chart is

    phi(l, m) = exp(ad(sum l^a L_a)) exp(ad(sum m^a L'_a)) . o

which terminates because both ad's are nilpotent on the graded algebra.
Moment maps are the coordinate functions lambda_A = beta(phi, A); the
Poisson bracket is the canonical one in these coordinates, and the key
structural fact is lambda_[A,B] = {lambda_A, lambda_B}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .kkt import GradedLieAlgebra, LieElement
from .poly import Poly, VarSet
from .scalars import Scalar


def l_coordinate_names(n: int) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    return tuple(f"l{a + 1}" for a in range(n)), tuple(f"m{a + 1}" for a in range(n))


def scalar_abs(s: Scalar) -> Fraction:
    """Sum of |re| + |im| over all nu-coefficients; zero iff s is zero."""
    return sum((abs(c.re) + abs(c.im) for c in s.coeffs.values()), Fraction(0))


def poly_abs(p: Poly) -> Fraction:
    return sum((scalar_abs(c) for c in p.terms.values()), Fraction(0))


def lift_element(x: LieElement, vs: VarSet) -> LieElement:
    """Rational element -> element with constant-polynomial coordinates."""
    return LieElement(
        [Poly.const(vs, c) for c in x.u],
        [[Poly.const(vs, c) for c in row] for row in x.t],
        [Poly.const(vs, c) for c in x.v],
    )


def exp_ad(g: GradedLieAlgebra, x: LieElement, y: LieElement, max_steps: int = 8) -> LieElement:
    """exp(ad x) . y for nilpotent ad x; raises if the series fails to stop."""
    total = y
    term = y
    for k in range(1, max_steps + 1):
        term = g.bracket(x, term).scale(Fraction(1, k))
        if term.is_zero():
            return total
        total = total.add(term)
    raise ValueError("ad series did not terminate; element is not nilpotent here")


@dataclass
class SymplecticChart:
    g: GradedLieAlgebra

    vs: VarSet = field(init=False)
    l_names: Tuple[str, ...] = field(init=False)
    m_names: Tuple[str, ...] = field(init=False)
    L: List[LieElement] = field(init=False)
    Lp: List[LieElement] = field(init=False)
    phi: LieElement = field(init=False)
    moment: List[Poly] = field(init=False)

    def __post_init__(self):
        g = self.g
        n = g.n
        self.l_names, self.m_names = l_coordinate_names(n)
        self.vs = VarSet(self.l_names + self.m_names)
        self.L, self.Lp = g.symplectic_basis()

        lsym = self._combination(self.L, self.l_names)
        msym = self._combination(self.Lp, self.m_names)
        o = lift_element(g.base_point(), self.vs)
        self.phi = exp_ad(g, lsym, exp_ad(g, msym, o))
        self.moment = [
            self._pair_with_basis(i) for i in range(g.dim)
        ]

    def _combination(self, elts: List[LieElement], names: Tuple[str, ...]) -> LieElement:
        acc = lift_element(self.g.zero(), self.vs)
        for e, name in zip(elts, names):
            acc = acc.add(lift_element(e, self.vs).scale(Poly.var(self.vs, name)))
        return acc

    def _pair_with_basis(self, i: int) -> Poly:
        return self.g.beta(self.phi, lift_element(self.g.basis_element(i), self.vs))

    # -- moment maps -----------------------------------------------------
    def moment_map(self, x: LieElement) -> Poly:
        """lambda_x = beta(phi, x) for a rational element x, by linearity."""
        acc = Poly.zero(self.vs)
        for c, lam in zip(self.g.to_coords(x), self.moment):
            if c != 0:
                acc = acc + lam * c
        return acc

    def poisson(self, p: Poly, q: Poly) -> Poly:
        acc = Poly.zero(self.vs)
        for la, ma in zip(self.l_names, self.m_names):
            acc = acc + p.diff(la) * q.diff(ma) - p.diff(ma) * q.diff(la)
        return acc

    # -- verification -----------------------------------------------------
    def hamiltonicity_residual(self) -> Tuple[Fraction, int]:
        """Sum over all basis pairs of |lambda_[bi,bj] - {lambda_i, lambda_j}|,
        plus the count of failing pairs."""
        res = Fraction(0)
        bad = 0
        for i in range(self.g.dim):
            for j in range(i + 1, self.g.dim):
                lhs = Poly.zero(self.vs)
                for k, c in self.g.bracket_coords(i, j).items():
                    lhs = lhs + self.moment[k] * c
                d = lhs - self.poisson(self.moment[i], self.moment[j])
                r = poly_abs(d)
                if r:
                    bad += 1
                    res += r
        return res, bad

    def max_moment_degree(self) -> int:
        return max(p.total_degree() for p in self.moment)
