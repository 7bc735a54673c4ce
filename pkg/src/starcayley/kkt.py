"""Three-graded Lie algebra built from a Euclidean Jordan algebra.

g = g(-1) + g(0) + g(1), where the outer pieces are two copies of the
Jordan algebra and g(0) is the span of the box operators, closed under
commutators and the tau-adjoint.  Elements are triples (u, T, v); the
bracket is

    [(u,T,v), (u',T',v')] =
        (Tu' - T'u,  2 u'box v + [T,T'] - 2 u box v',  T'# v - T# v')

with T# the adjoint of T for the trace form.  The involution is
theta(u,T,v) = (v, -T#, u); the base point is o = mu * E with E = (0,Id,0).

All coordinate arithmetic is ring-generic so the same bracket code runs on
rational elements and on elements with polynomial coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .jordan import JordanAlgebra


class GradingClosureFailure(ValueError):
    """The candidate degree-zero subspace is not closed as required."""


@dataclass
class LieElement:
    """(u, T, v) with u, v coordinate vectors and T an n x n matrix."""

    u: list
    t: list  # matrix
    v: list

    def add(self, other: "LieElement") -> "LieElement":
        return LieElement(
            [a + b for a, b in zip(self.u, other.u)],
            linalg.mat_add(self.t, other.t),
            [a + b for a, b in zip(self.v, other.v)],
        )

    def sub(self, other: "LieElement") -> "LieElement":
        return LieElement(
            [a - b for a, b in zip(self.u, other.u)],
            linalg.mat_sub(self.t, other.t),
            [a - b for a, b in zip(self.v, other.v)],
        )

    def scale(self, c) -> "LieElement":
        return LieElement(
            [c * a for a in self.u],
            [[c * x for x in row] for row in self.t],
            [c * a for a in self.v],
        )

    def is_zero(self) -> bool:
        return (
            all(linalg._is_zero(a) for a in self.u)
            and all(linalg._is_zero(x) for row in self.t for x in row)
            and all(linalg._is_zero(a) for a in self.v)
        )


def _flat(m: Sequence[Sequence]) -> list:
    return [x for row in m for x in row]


@dataclass
class GradedLieAlgebra:
    jordan: JordanAlgebra
    mu: Fraction = Fraction(1)

    n: int = field(init=False)
    dim0: int = field(init=False)
    dim: int = field(init=False)
    t_basis: List[linalg.Matrix] = field(init=False)
    _t_proj: linalg.Matrix = field(init=False)
    tau_gram: linalg.Matrix = field(init=False)
    _tau_gram_inv: linalg.Matrix = field(init=False)
    bracket_table: dict = field(init=False)
    killing: linalg.Matrix = field(init=False)

    def __post_init__(self):
        A = self.jordan
        self.n = A.dim
        self.tau_gram = A.tau_gram()
        self._tau_gram_inv = linalg.invert(self.tau_gram)

        # span of the box operators, grown until closed under commutators
        # and the tau-adjoint
        cands = [
            A.box(A.basis_vector(a), A.basis_vector(b))
            for a in range(self.n)
            for b in range(self.n)
        ]
        basis: List[linalg.Matrix] = []
        flats: List[list] = []

        def absorb(m: linalg.Matrix) -> bool:
            f = _flat(m)
            if linalg.in_span(flats, f) is not None:
                return False
            basis.append(m)
            flats.append(f)
            return True

        for m in cands:
            absorb(m)
        grew = True
        rounds = 0
        while grew:
            grew = False
            rounds += 1
            if rounds > self.n * self.n + 1:
                raise GradingClosureFailure("degree-zero span does not stabilize")
            for m in list(basis):
                if absorb(self.sharp(m)):
                    grew = True
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    if absorb(linalg.commutator(basis[i], basis[j])):
                        grew = True

        self.t_basis = basis
        self.dim0 = len(basis)
        self.dim = 2 * self.n + self.dim0

        # rational left inverse of the flattened basis matrix, so matrix
        # coordinates can be extracted even for polynomial entries
        M = linalg.transpose(flats)  # n^2 x dim0
        MtM = linalg.mat_mul(flats, M)
        self._t_proj = linalg.mat_mul(linalg.invert(MtM), flats)

        self.bracket_table = self._build_bracket_table()
        self.killing = self._build_killing()

    # -- basic elements -----------------------------------------------------
    def zero(self) -> LieElement:
        z = Fraction(0)
        return LieElement(
            [z] * self.n, linalg.zeros(self.n, self.n), [z] * self.n
        )

    def element(self, u=None, t=None, v=None) -> LieElement:
        x = self.zero()
        if u is not None:
            x.u = list(u)
        if t is not None:
            x.t = [list(row) for row in t]
        if v is not None:
            x.v = list(v)
        return x

    def grade_element(self) -> LieElement:
        """E = (0, Id, 0); ad E is the grading operator."""
        return self.element(t=linalg.identity(self.n))

    def base_point(self) -> LieElement:
        return self.grade_element().scale(self.mu)

    def basis_element(self, i: int) -> LieElement:
        c = [Fraction(0)] * self.dim
        c[i] = Fraction(1)
        return self.from_coords(c)

    # -- coordinates --------------------------------------------------------
    def t_coords(self, t: Sequence[Sequence]) -> list:
        return linalg.mat_vec(self._t_proj, _flat(t))

    def t_from_coords(self, c: Sequence) -> list:
        m = linalg.zeros(self.n, self.n)
        for i, ci in enumerate(c):
            if not linalg._is_zero(ci):
                m = linalg.mat_add(m, [[ci * x for x in row] for row in self.t_basis[i]])
        return m

    def to_coords(self, x: LieElement) -> list:
        return list(x.u) + self.t_coords(x.t) + list(x.v)

    def from_coords(self, c: Sequence) -> LieElement:
        n, d0 = self.n, self.dim0
        return LieElement(list(c[:n]), self.t_from_coords(c[n : n + d0]), list(c[n + d0 :]))

    def t_part_residual(self, x: LieElement) -> Fraction:
        """How far x.t lies from the degree-zero span (rational elements)."""
        rec = self.t_from_coords(self.t_coords(x.t))
        return sum(abs(a - b) for ra, rb in zip(rec, x.t) for a, b in zip(ra, rb))

    # -- structure maps -------------------------------------------------------
    def sharp(self, t: Sequence[Sequence]) -> list:
        """Adjoint of t with respect to the trace form: G^-1 t^T G."""
        return linalg.mat_mul(
            self._tau_gram_inv, linalg.mat_mul(linalg.transpose(t), self.tau_gram)
        )

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        A = self.jordan
        u = [a - b for a, b in zip(linalg.mat_vec(x.t, y.u), linalg.mat_vec(y.t, x.u))]
        t = linalg.mat_add(
            linalg.mat_sub(
                linalg.mat_scale(A.box(y.u, x.v), 2),
                linalg.mat_scale(A.box(x.u, y.v), 2),
            ),
            linalg.commutator(x.t, y.t),
        )
        v = [
            a - b
            for a, b in zip(
                linalg.mat_vec(self.sharp(y.t), x.v),
                linalg.mat_vec(self.sharp(x.t), y.v),
            )
        ]
        return LieElement(u, t, v)

    def theta(self, x: LieElement) -> LieElement:
        return LieElement(
            list(x.v), linalg.mat_scale(self.sharp(x.t), Fraction(-1)), list(x.u)
        )

    def ad_matrix(self, x: LieElement) -> linalg.Matrix:
        cols = [self.to_coords(self.bracket(x, self.basis_element(k))) for k in range(self.dim)]
        return linalg.transpose(cols)

    def _build_bracket_table(self) -> dict:
        table = {}
        basis = [self.basis_element(i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                c = self.to_coords(self.bracket(basis[i], basis[j]))
                nz = {k: v for k, v in enumerate(c) if v != 0}
                if nz:
                    table[(i, j)] = nz
        return table

    def bracket_coords(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.bracket_table.get((i, j), {})
        return {k: -v for k, v in self.bracket_table.get((j, i), {}).items()}

    def _build_killing(self) -> linalg.Matrix:
        ads = [
            self.ad_matrix(self.basis_element(i)) for i in range(self.dim)
        ]
        prod_trace = lambda a, b: sum(
            a[r][c] * b[c][r] for r in range(self.dim) for c in range(self.dim)
        )
        return [[prod_trace(ads[i], ads[j]) for j in range(self.dim)] for i in range(self.dim)]

    def beta(self, x: LieElement, y: LieElement):
        """Killing form, evaluated via the precomputed Gram matrix."""
        cx = self.to_coords(x)
        cy = self.to_coords(y)
        acc = None
        for i, bi in enumerate(self.killing):
            if linalg._is_zero(cx[i]):
                continue
            for j, bij in enumerate(bi):
                if bij == 0 or linalg._is_zero(cy[j]):
                    continue
                term = cx[i] * (bij * cy[j])
                acc = term if acc is None else acc + term
        if acc is None:
            probe = cx[0] * cy[0]
            acc = probe - probe
        return acc

    def omega(self, x: LieElement, y: LieElement):
        """Symplectic pairing beta(o, [x, y])."""
        return self.beta(self.base_point(), self.bracket(x, y))

    # -- symplectic basis ------------------------------------------------------
    def symplectic_basis(self) -> Tuple[List[LieElement], List[LieElement]]:
        """Basis L_a of g(-1) and the dual basis L'_a of g(1) with
        omega(L_a, L'_b) = delta_ab."""
        n = self.n
        L = [self.element(u=self.jordan.basis_vector(a)) for a in range(n)]
        V = [self.element(v=self.jordan.basis_vector(b)) for b in range(n)]
        P = [[self.omega(L[a], V[b]) for b in range(n)] for a in range(n)]
        Pinv = linalg.invert(P)
        Lp = []
        for b in range(n):
            x = self.zero()
            for c in range(n):
                if Pinv[c][b] != 0:
                    x = x.add(V[c].scale(Pinv[c][b]))
            Lp.append(x)
        return L, Lp

    def spur(self, h: LieElement):
        """Trace of ad(h) restricted to g(-1): sum over a of
        omega([h, L_a], L'_a)."""
        L, Lp = self.symplectic_basis()
        acc = None
        for a in range(self.n):
            term = self.omega(self.bracket(h, L[a]), Lp[a])
            acc = term if acc is None else acc + term
        return acc


# ---------------------------------------------------------------------------
# verification suites: each returns (passed, residual, detail)
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    passed: bool
    residual: Fraction
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": str(self.residual),
            "detail": self.detail,
        }


def _combine(name: str, residual: Fraction, detail: str = "") -> SuiteResult:
    return SuiteResult(name=name, passed=residual == 0, residual=residual, detail=detail)


def verify_antisymmetry(g: GradedLieAlgebra) -> SuiteResult:
    res = Fraction(0)
    basis = [g.basis_element(i) for i in range(g.dim)]
    for i in range(g.dim):
        d = g.bracket(basis[i], basis[i])
        res += sum(abs(c) for c in g.to_coords(d))
    return _combine("antisymmetry", res)


def verify_jacobi(g: GradedLieAlgebra) -> SuiteResult:
    """Jacobi identity on all basis triples i < j < k, via the sparse table."""
    res = Fraction(0)
    bad = 0
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                acc = [Fraction(0)] * g.dim
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = g.bracket_coords(b, c)
                    for m, cm in inner.items():
                        for p, cp in g.bracket_coords(a, m).items():
                            acc[p] += cm * cp
                r = sum(abs(x) for x in acc)
                if r:
                    bad += 1
                    res += r
    return _combine("jacobi", res, f"{bad} failing triples" if bad else "")


def verify_grading(g: GradedLieAlgebra) -> SuiteResult:
    """[g_i, g_j] lands in g_{i+j} (zero when |i+j| > 1), checked per block."""
    n, d0 = g.n, g.dim0
    grade = lambda idx: -1 if idx < n else (0 if idx < n + d0 else 1)
    res = Fraction(0)
    for (i, j), nz in g.bracket_table.items():
        target = grade(i) + grade(j)
        for k, c in nz.items():
            if target < -1 or target > 1 or grade(k) != target:
                res += abs(c)
    return _combine("grading", res)


def verify_theta(g: GradedLieAlgebra) -> SuiteResult:
    """theta is an involutive automorphism exchanging g(-1) and g(1)."""
    res = Fraction(0)
    basis = [g.basis_element(i) for i in range(g.dim)]
    for b in basis:
        d = g.theta(g.theta(b)).sub(b)
        res += sum(abs(c) for c in g.to_coords(d))
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            d = g.theta(g.bracket(basis[i], basis[j])).sub(
                g.bracket(g.theta(basis[i]), g.theta(basis[j]))
            )
            res += sum(abs(c) for c in g.to_coords(d))
    return _combine("theta", res)


def verify_identifications(g: GradedLieAlgebra) -> SuiteResult:
    """Box and triple product against brackets, over the Jordan basis
    embedded in g(-1):  x box y = -1/2 [x, theta y]  and
    {x, y, z} = -1/2 [[x, theta y], z]."""
    A = g.jordan
    res = Fraction(0)
    for a in range(g.n):
        x = g.element(u=A.basis_vector(a))
        for b in range(g.n):
            y = g.element(u=A.basis_vector(b))
            inner = g.bracket(x, g.theta(y))
            br = inner.scale(Fraction(-1, 2))
            box = A.box(A.basis_vector(a), A.basis_vector(b))
            res += sum(abs(p - q) for rp, rq in zip(br.t, box) for p, q in zip(rp, rq))
            res += sum(abs(c) for c in br.u) + sum(abs(c) for c in br.v)
            for c in range(g.n):
                z = g.element(u=A.basis_vector(c))
                dbl = g.bracket(inner, z).scale(Fraction(-1, 2))
                trip = A.triple(A.basis_vector(a), A.basis_vector(b), A.basis_vector(c))
                res += sum(abs(p - q) for p, q in zip(dbl.u, trip))
                res += sum(abs(xx) for row in dbl.t for xx in row)
                res += sum(abs(c2) for c2 in dbl.v)
    return _combine(
        "identifications", res, "box and triple product match the bracket forms"
    )


def verify_killing_invariance(g: GradedLieAlgebra) -> SuiteResult:
    """beta([x,y],z) + beta(y,[x,z]) = 0 on all basis triples."""
    res = Fraction(0)
    basis = [g.basis_element(i) for i in range(g.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(j, g.dim):
                r = g.beta(g.bracket(basis[i], basis[j]), basis[k]) + g.beta(
                    basis[j], g.bracket(basis[i], basis[k])
                )
                res += abs(r)
    return _combine("killing-invariance", res)


def closed_form_killing(g: GradedLieAlgebra) -> linalg.Matrix:
    """Gram matrix of the block formula
    beta_c(X, X') = 2n tr(TT') - 2 tr(T) tr(T') + 2 tr(TT')
                    - 4 tau(u, v') - 4 tau(v, u')
    with operator traces throughout, used as a cross-check against the
    intrinsic form."""
    A = g.jordan
    n = g.n

    def beta_c(x: LieElement, y: LieElement) -> Fraction:
        tt = linalg.trace(linalg.mat_mul(x.t, y.t))
        val = 2 * n * tt - 2 * linalg.trace(x.t) * linalg.trace(y.t)
        val += 2 * tt
        val += -4 * A.tau(x.u, y.v) - 4 * A.tau(x.v, y.u)
        return val

    basis = [g.basis_element(i) for i in range(g.dim)]
    return [[beta_c(basis[i], basis[j]) for j in range(g.dim)] for i in range(g.dim)]


def measure_kappa(g: GradedLieAlgebra) -> Tuple[Optional[Fraction], Fraction]:
    """Proportionality constant between the intrinsic Killing Gram matrix and
    the closed block formula: intrinsic = kappa * closed.  Returns
    (kappa or None, residual after the best match)."""
    closed = closed_form_killing(g)
    kappa = None
    for i in range(g.dim):
        for j in range(g.dim):
            if closed[i][j] != 0:
                kappa = g.killing[i][j] / closed[i][j]
                break
        if kappa is not None:
            break
    if kappa is None:
        return None, sum(abs(x) for row in g.killing for x in row)
    res = sum(
        abs(g.killing[i][j] - kappa * closed[i][j])
        for i in range(g.dim)
        for j in range(g.dim)
    )
    return (kappa if res == 0 else None), res


def run_structure_suite(g: GradedLieAlgebra) -> List[SuiteResult]:
    results = [
        verify_antisymmetry(g),
        verify_jacobi(g),
        verify_grading(g),
        verify_theta(g),
        verify_identifications(g),
        verify_killing_invariance(g),
    ]
    kappa, res = measure_kappa(g)
    results.append(
        SuiteResult(
            name="killing-closed-form",
            passed=kappa is not None,
            residual=res,
            detail=f"kappa = {kappa}" if kappa is not None else "no proportionality",
        )
    )
    return results
