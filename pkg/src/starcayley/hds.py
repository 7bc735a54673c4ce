"""Derived holomorphic discrete series operators and the equivalence solver.

For X = (u, T, v) the conformal field on the tube domain is
X(z) = u + Tz + P(z)v with Tr DX(z) = Tr T + 2 tau(z, v).  The weight-m
operator is

    dpi_m(X) = -m (r/n) Tr DX(z) - sum_a X(z)^a d/dz^a

with m kept formal: each operator is stored as a pair (V, S) meaning
V + m*S, and homomorphism checks are done per power of m.  The solver
searches an intertwining automorphism alpha in {+id, -id, +theta, -theta}
matching the star representation against dpi, then solves for the unique
weight m* by exact division, and compares with the closed-form candidate
(beta(o,o) + n nu c) / (4 nu r c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .chart import poly_abs, scalar_abs
from .kkt import GradedLieAlgebra, LieElement
from .poly import Poly, VarSet, scalar_ratio
from .scalars import NotDivisible, Scalar
from .starrep import StarRepresentation, z_names
from .weyl import WeylOperator


class NoEquivalence(ValueError):
    def __init__(self, msg: str, residual: Fraction):
        super().__init__(msg)
        self.residual = residual


@dataclass
class FormalWeightOperator:
    """V + m * S with a formal weight m; S is a multiplication operator."""

    v: WeylOperator
    s: WeylOperator

    def sub(self, other: "FormalWeightOperator") -> "FormalWeightOperator":
        return FormalWeightOperator(self.v - other.v, self.s - other.s)

    def is_zero(self) -> bool:
        return self.v.is_zero() and self.s.is_zero()

    def residual(self) -> Fraction:
        return sum(scalar_abs(c) for c in self.v.terms.values()) + sum(
            scalar_abs(c) for c in self.s.terms.values()
        )


@dataclass
class DiscreteSeries:
    g: GradedLieAlgebra

    def __post_init__(self):
        self.zvs = VarSet(z_names(self.g.n))
        self._zvec = [Poly.var(self.zvs, x) for x in self.zvs.names]

    def field(self, a: LieElement) -> List[Poly]:
        """X(z) = u + Tz + P(z)v, from the Jordan data directly."""
        A = self.g.jordan
        n = self.g.n
        comps = []
        P = A.quadratic_rep(self._zvec) if any(c != 0 for c in a.v) else None
        for i in range(n):
            acc = Poly.const(self.zvs, a.u[i])
            for j in range(n):
                if a.t[i][j] != 0:
                    acc = acc + self._zvec[j] * a.t[i][j]
            if P is not None:
                for j in range(n):
                    if a.v[j] != 0:
                        acc = acc + P[i][j] * a.v[j]
            comps.append(acc)
        return comps

    def trace_d_field(self, a: LieElement) -> Poly:
        """Tr DX(z), computed by differentiating the field components."""
        comps = self.field(a)
        acc = Poly.zero(self.zvs)
        for i, x in enumerate(self.zvs.names):
            acc = acc + comps[i].diff(x)
        return acc

    def trace_d_closed(self, a: LieElement) -> Poly:
        """Cross-check: Tr T + 2 tau(z, v)."""
        from .linalg import trace

        A = self.g.jordan
        acc = Poly.const(self.zvs, trace(a.t))
        tau_zv = A.tau(self._zvec, [Poly.const(self.zvs, c) for c in a.v])
        return acc + tau_zv * Fraction(2)

    def dpi(self, a: LieElement) -> FormalWeightOperator:
        n = self.g.n
        v_op = WeylOperator.zero(self.zvs)
        for i, comp in enumerate(self.field(a)):
            d = [0] * n
            d[i] = 1
            v_op = v_op - WeylOperator(
                self.zvs, {(e, tuple(d)): c for e, c in comp.terms.items()}
            )
        scalar = self.trace_d_field(a) * Fraction(-self.g.jordan.rank, n)
        return FormalWeightOperator(v_op, WeylOperator.from_poly(scalar))

    def dpi_basis(self) -> List[FormalWeightOperator]:
        return [self.dpi(self.g.basis_element(i)) for i in range(self.g.dim)]

    def dpi_at_weight(self, a: LieElement, m: Scalar) -> WeylOperator:
        op = self.dpi(a)
        return op.v + op.s.scale(m)


def verify_dpi_homomorphism(g: GradedLieAlgebra, ops: List[FormalWeightOperator]) -> Tuple[int, Fraction]:
    """[dpi(X), dpi(Y)] = s * dpi([X,Y]) identically in the formal weight;
    returns (sign s, residual).  Mult-operator commutators vanish, so the
    m^2 part is identically zero and the check splits by powers of m."""

    def residual_for(sign: int) -> Fraction:
        res = Fraction(0)
        vs = ops[0].v.vs
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                m0 = ops[i].v * ops[j].v - ops[j].v * ops[i].v
                m1 = (ops[i].v * ops[j].s - ops[j].s * ops[i].v) - (
                    ops[j].v * ops[i].s - ops[i].s * ops[j].v
                )
                t0 = WeylOperator.zero(vs)
                t1 = WeylOperator.zero(vs)
                for k, c in g.bracket_coords(i, j).items():
                    t0 = t0 + ops[k].v.scale(Fraction(sign) * c)
                    t1 = t1 + ops[k].s.scale(Fraction(sign) * c)
                for d in (m0 - t0, m1 - t1):
                    res += sum(scalar_abs(c) for c in d.terms.values())
        return res

    for sign in (1, -1):
        r = residual_for(sign)
        if r == 0:
            return sign, r
    return 0, min(residual_for(1), residual_for(-1))


# ---------------------------------------------------------------------------
# equivalence solver
# ---------------------------------------------------------------------------


def _automorphism_candidates(g: GradedLieAlgebra):
    yield "+id", lambda a: a
    yield "-id", lambda a: a.scale(Fraction(-1))
    yield "+theta", g.theta
    yield "-theta", lambda a: g.theta(a).scale(Fraction(-1))


def _split_scalar_part(op: WeylOperator) -> Tuple[Poly, WeylOperator]:
    """Separate the pure multiplication part from the derivative terms."""
    n = len(op.vs.names)
    zero_d = (0,) * n
    scal = {a: c for (a, b), c in op.terms.items() if b == zero_d}
    rest = {(a, b): c for (a, b), c in op.terms.items() if b != zero_d}
    return Poly(op.vs, scal), WeylOperator(op.vs, rest)


@dataclass
class EquivalenceResult:
    alpha: str
    m_star: Scalar
    residual: Fraction

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "m_star": str(self.m_star), "residual": str(self.residual)}


def solve_equivalence(
    g: GradedLieAlgebra,
    rho: List[WeylOperator],
    ds: Optional[DiscreteSeries] = None,
) -> EquivalenceResult:
    """Find (alpha, m*) with rho(A) = dpi_{m*}(alpha(A)) for every basis A.

    For each candidate alpha the vector-field parts must agree on the nose;
    the multiplication parts then determine m* by exact division, which must
    be consistent across the whole basis.  Raises NoEquivalence otherwise.
    """
    ds = ds or DiscreteSeries(g)
    best = None
    for name, alpha in _automorphism_candidates(g):
        ok = True
        m_star: Optional[Scalar] = None
        res = Fraction(0)
        for i in range(g.dim):
            tau, vec = _split_scalar_part(rho[i])
            target = ds.dpi(alpha(g.basis_element(i)))
            d = vec - target.v
            r = sum(scalar_abs(c) for c in d.terms.values())
            if r != 0:
                ok = False
                res += r
                continue
            s_poly, _ = _split_scalar_part(target.s)
            if s_poly.is_zero():
                if not tau.is_zero():
                    ok = False
                    res += poly_abs(tau)
                continue
            m = scalar_ratio(tau, s_poly)
            if m is None:
                ok = False
                res += Fraction(1)
                continue
            if m_star is None:
                m_star = m
            elif m != m_star:
                ok = False
                res += Fraction(1)
        if ok and m_star is not None:
            return EquivalenceResult(alpha=name, m_star=m_star, residual=Fraction(0))
        if best is None or res < best[1]:
            best = (name, res)
    raise NoEquivalence(
        f"no candidate automorphism matches (best: {best[0]}, residual {best[1]})",
        best[1],
    )


# ---------------------------------------------------------------------------
# comparison with the closed-form weight
# ---------------------------------------------------------------------------


@dataclass
class WeightComparison:
    m_star: Scalar
    m_closed: Scalar
    match: str  # "exact" | "proportional" | "failed"
    factor: Optional[Scalar]

    def to_json(self) -> dict:
        return {
            "m_star": str(self.m_star),
            "m_closed_form": str(self.m_closed),
            "match": self.match,
            "factor": None if self.factor is None else str(self.factor),
        }


def closed_form_weight(g: GradedLieAlgebra) -> Scalar:
    """(beta(o,o) + n nu c) / (4 nu r c) with c = mu, as a Laurent scalar."""
    o = g.base_point()
    boo = g.beta(o, o)
    n, r, c = g.n, g.jordan.rank, g.mu
    num = Scalar.of(boo) + Scalar.nu(1, Fraction(n) * c)
    return num * Scalar.nu(-1, Fraction(1, 4) / (Fraction(r) * c))


def compare_with_closed_form(g: GradedLieAlgebra, m_star: Scalar) -> WeightComparison:
    m_closed = closed_form_weight(g)
    try:
        factor = m_star.div_exact(m_closed)
    except NotDivisible:
        return WeightComparison(m_star, m_closed, "failed", None)
    if factor == Scalar.one():
        return WeightComparison(m_star, m_closed, "exact", factor)
    if set(factor.coeffs.keys()) <= {0}:
        return WeightComparison(m_star, m_closed, "proportional", factor)
    return WeightComparison(m_star, m_closed, "failed", factor)


def special_nu_value(g: GradedLieAlgebra) -> Tuple[Fraction, bool]:
    """nu0 = -beta(o,o)/(n c); at this value the numerator of the closed-form
    weight vanishes.  Returns (nu0, numerator_vanishes)."""
    o = g.base_point()
    boo = g.beta(o, o)
    n, c = g.n, g.mu
    nu0 = -boo / (Fraction(n) * c)
    num = Scalar.of(boo) + Scalar.nu(1, Fraction(n) * c)
    val = num.eval_nu(nu0)
    return nu0, val.is_zero()
