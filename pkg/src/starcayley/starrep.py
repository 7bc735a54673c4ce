"""The star representation on holomorphic polynomials.

For each Lie algebra element A = (u, T, v) one forms, with a symbolic point
z in g(-1),

    h_A(z)   = A_t + (degree-0 part of [A_v, z])          (matrix, linear in z)
    l_A(z)   = A_u + [A_t, z] + 1/2 [z, [z, A_v]]          (vector, quadratic)
    tau_A(z) = (1/2 nu) (beta(h_A(z), o) + nu spur(h_A(z)))

and the first-order operator  rho(A) = tau_A + sum_a l_A(z)^a d/dz^a.

Everything is computed from the bracket with polynomial coordinate vectors;
the closed tube-domain formulas (u + Tz + P(z)v, and h = kappa * Dl) are
kept as independently verified invariants with measured constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .chart import SymplecticChart, lift_element, poly_abs
from .kkt import GradedLieAlgebra, LieElement
from .poly import Poly, VarSet, scalar_ratio
from .scalars import Scalar
from .weyl import WeylOperator, fourier_conjugate, holomorphic_frame, left_star_operator, uses_only


def z_names(n: int) -> Tuple[str, ...]:
    return tuple(f"z{a + 1}" for a in range(n))


@dataclass
class StarRepresentation:
    g: GradedLieAlgebra

    zvs: VarSet = field(init=False)
    z_elt: LieElement = field(init=False)
    _o: LieElement = field(init=False)
    _L: List[LieElement] = field(init=False)
    _Lp: List[LieElement] = field(init=False)

    def __post_init__(self):
        g = self.g
        self.zvs = VarSet(z_names(g.n))
        self.z_elt = lift_element(g.zero(), self.zvs)
        self.z_elt.u = [Poly.var(self.zvs, x) for x in self.zvs.names]
        self._o = lift_element(g.base_point(), self.zvs)
        L, Lp = g.symplectic_basis()
        self._L = [lift_element(x, self.zvs) for x in L]
        self._Lp = [lift_element(x, self.zvs) for x in Lp]

    # -- the three building blocks ------------------------------------------
    def _split(self, a: LieElement) -> Tuple[LieElement, LieElement, LieElement]:
        g = self.g
        return (
            lift_element(g.element(u=a.u), self.zvs),
            lift_element(g.element(t=a.t), self.zvs),
            lift_element(g.element(v=a.v), self.zvs),
        )

    def h_poly(self, a: LieElement) -> List[List[Poly]]:
        """Matrix-valued polynomial h_A(z), linear in z."""
        _, at, av = self._split(a)
        return at.add(self.g.bracket(av, self.z_elt)).t

    def l_poly(self, a: LieElement) -> List[Poly]:
        """Vector-valued polynomial l_A(z), quadratic in z."""
        au, at, av = self._split(a)
        g = self.g
        quad = g.bracket(self.z_elt, g.bracket(self.z_elt, av)).scale(Fraction(1, 2))
        return au.add(g.bracket(at, self.z_elt)).add(quad).u

    def spur_poly(self, h: List[List[Poly]]) -> Poly:
        """Trace of ad restricted to g(-1): sum_a omega([h, L_a], L'_a)."""
        g = self.g
        helt = LieElement([Poly.zero(self.zvs)] * g.n, h, [Poly.zero(self.zvs)] * g.n)
        acc = Poly.zero(self.zvs)
        for La, Lpa in zip(self._L, self._Lp):
            acc = acc + g.beta(self._o, g.bracket(g.bracket(helt, La), Lpa))
        return acc

    def tau_scalar(self, a: LieElement) -> Poly:
        h = self.h_poly(a)
        g = self.g
        helt = LieElement([Poly.zero(self.zvs)] * g.n, h, [Poly.zero(self.zvs)] * g.n)
        inner = g.beta(helt, self._o) + self.spur_poly(h) * Scalar.nu(1)
        return inner * Scalar.nu(-1, Fraction(1, 2))

    def rho_hat(self, a: LieElement) -> WeylOperator:
        op = WeylOperator.from_poly(self.tau_scalar(a))
        for i, comp in enumerate(self.l_poly(a)):
            d = [0] * self.g.n
            d[i] = 1
            op = op + WeylOperator(self.zvs, {(e, tuple(d)): c for e, c in comp.terms.items()})
        return op

    def rho_basis(self) -> List[WeylOperator]:
        return [self.rho_hat(self.g.basis_element(i)) for i in range(self.g.dim)]

    # -- invariants -------------------------------------------------------
    def tube_field(self, a: LieElement) -> List[Poly]:
        """Independent closed form u + Tz + P(z)v for cross-checking l_poly."""
        A = self.g.jordan
        zvec = [Poly.var(self.zvs, x) for x in self.zvs.names]
        lifted_t = [[Poly.const(self.zvs, c) for c in row] for row in a.t]
        tz = [sum((row[j] * zvec[j] for j in range(self.g.n)), Poly.zero(self.zvs)) for row in lifted_t]
        pv = [Poly.zero(self.zvs)] * self.g.n
        if any(c != 0 for c in a.v):
            P = A.quadratic_rep(zvec)
            pv = [
                sum((row[j] * a.v[j] for j in range(self.g.n)), Poly.zero(self.zvs))
                for row in P
            ]
        return [Poly.const(self.zvs, a.u[i]) + tz[i] + pv[i] for i in range(self.g.n)]

    def field_residual(self) -> Fraction:
        res = Fraction(0)
        for i in range(self.g.dim):
            b = self.g.basis_element(i)
            for p, q in zip(self.l_poly(b), self.tube_field(b)):
                res += poly_abs(p - q)
        return res

    def measure_kappa_h(self) -> Tuple[Optional[Scalar], Fraction]:
        """Constant kappa with h_A(z) = kappa * D(l_A)(z) across the basis."""
        kappa: Optional[Scalar] = None
        res = Fraction(0)
        for i in range(self.g.dim):
            b = self.g.basis_element(i)
            h = self.h_poly(b)
            lp = self.l_poly(b)
            dmat = [[lp[c].diff(x) for x in self.zvs.names] for c in range(self.g.n)]
            for r in range(self.g.n):
                for c in range(self.g.n):
                    if kappa is None and not dmat[r][c].is_zero():
                        kappa = scalar_ratio(h[r][c], dmat[r][c])
                        if kappa is None:
                            return None, Fraction(1)
                    if kappa is not None:
                        res += poly_abs(h[r][c] - dmat[r][c] * kappa)
        return (kappa, res) if res == 0 else (None, res)


def verify_rho_homomorphism(g: GradedLieAlgebra, rho: List[WeylOperator]) -> Tuple[int, Fraction]:
    """Measure the sign s with [rho(A), rho(B)] = s * rho([A,B]) over all
    basis pairs; returns (s, residual). s = +1 reports a homomorphism,
    s = -1 an anti-homomorphism, s = 0 neither."""

    def residual_for(sign: int) -> Fraction:
        res = Fraction(0)
        from .chart import scalar_abs

        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                comm = rho[i] * rho[j] - rho[j] * rho[i]
                target = WeylOperator.zero(rho[0].vs)
                for k, c in g.bracket_coords(i, j).items():
                    target = target + rho[k].scale(Fraction(sign) * c)
                diff = comm - target
                res += sum(scalar_abs(c) for c in diff.terms.values())
        return res

    for sign in (1, -1):
        r = residual_for(sign)
        if r == 0:
            return sign, r
    return 0, min(residual_for(1), residual_for(-1))


@dataclass
class StarTransformResult:
    index: int
    holomorphic: bool
    matches_rho: bool
    matches_rho_flipped_sign: bool
    residual: Fraction


def star_transform_operator(ch: SymplecticChart, index: int) -> Tuple[WeylOperator, VarSet]:
    """D_A = holomorphic-frame(Fourier((1/2 nu) left-star(lambda_A)))."""
    lam = ch.moment[index]
    op = left_star_operator(lam, ch.l_names, ch.m_names).scale(Scalar.nu(-1, Fraction(1, 2)))
    fop, fvs = fourier_conjugate(op, ch.l_names, ch.m_names)
    eta = tuple(x for x in fvs.names if x not in ch.l_names)
    return holomorphic_frame(fop, ch.l_names, eta)


def embed_z_operator(op: WeylOperator, target: VarSet) -> WeylOperator:
    """Extend an operator in the z-variables to the (z, zbar) variable set."""
    pad = len(target.names) - len(op.vs.names)
    return WeylOperator(
        target,
        {(a + (0,) * pad, b + (0,) * pad): c for (a, b), c in op.terms.items()},
    )


def verify_star_transform(
    ch: SymplecticChart, srep: StarRepresentation, rho: List[WeylOperator]
) -> List[StarTransformResult]:
    """Compare the Fourier-transformed star operators against rho, per basis
    element; also records whether the exact relation D_A = -rho(A)|nu->-nu
    holds (the measured outcome under this code's conventions)."""
    from .chart import scalar_abs

    out = []
    n = srep.g.n
    for i in range(srep.g.dim):
        d_op, hvs = star_transform_operator(ch, i)
        holo = uses_only(d_op, hvs.names[:n])
        r_emb = embed_z_operator(rho[i], hvs)
        diff = d_op - r_emb
        res = sum(scalar_abs(c) for c in diff.terms.values())
        alt = d_op + r_emb.flip_nu()
        out.append(
            StarTransformResult(
                index=i,
                holomorphic=holo,
                matches_rho=diff.is_zero(),
                matches_rho_flipped_sign=alt.is_zero(),
                residual=res,
            )
        )
    return out
