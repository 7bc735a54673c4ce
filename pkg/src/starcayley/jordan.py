"""Euclidean Jordan algebras from structure constants.

Built-in instances (rank one, spin factors, real symmetric matrices), a
generic loader, symbolic validation of the axioms, and the standard
operators: left multiplication L, trace form tau, box operator, triple
product, quadratic representation.

Element coordinates are generic: they may be Fractions, Scalars, or Polys;
everything here only uses +, -, * and scaling by rational structure
constants, so the same code runs numerically and symbolically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import linalg
from .poly import Poly, VarSet
from .scalars import Scalar, rational_to_str


class InvalidDimension(ValueError):
    pass


class UnknownAlgebra(ValueError):
    pass


class ValidationFailed(ValueError):
    def __init__(self, report: "JordanValidationReport"):
        super().__init__("; ".join(report.failures))
        self.report = report


def _scale(c: Fraction, x):
    """c*x for a rational c and a generic ring element x."""
    if isinstance(x, Fraction):
        return c * x
    return x * c  # Scalar / Poly implement __mul__ with Fraction


@dataclass(frozen=True)
class JordanAlgebra:
    name: str
    dim: int
    rank: int
    basis_names: Tuple[str, ...]
    # structure[a][b][c]: coefficient of e_c in e_a o e_b
    structure: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    unit: Tuple[Fraction, ...]

    # -- products ---------------------------------------------------------
    def mul(self, x: Sequence, y: Sequence) -> list:
        n = self.dim
        zero = x[0] - x[0]
        out = [zero] * n
        for a in range(n):
            xa = x[a]
            if isinstance(xa, Fraction) and xa == 0:
                continue
            row = self.structure[a]
            for b in range(n):
                yb = y[b]
                if isinstance(yb, Fraction) and yb == 0:
                    continue
                prod = xa * yb
                for c in range(n):
                    s = row[b][c]
                    if s != 0:
                        out[c] = out[c] + _scale(s, prod)
        return out

    def L(self, x: Sequence) -> list:
        """Matrix of left multiplication by x in the declared basis."""
        n = self.dim
        zero = x[0] - x[0]
        m = [[zero] * n for _ in range(n)]
        for a in range(n):  # column: image of e_a
            for b in range(n):
                xb = x[b]
                if isinstance(xb, Fraction) and xb == 0:
                    continue
                for c in range(n):
                    s = self.structure[b][a][c]
                    if s != 0:
                        m[c][a] = m[c][a] + _scale(s, xb)
        return m

    def tau(self, x: Sequence, y: Sequence):
        """tau(x, y) = Tr L(x o y)."""
        return linalg.trace(self.L(self.mul(x, y)))

    def tau_gram(self) -> linalg.Matrix:
        n = self.dim
        basis = [self.basis_vector(a) for a in range(n)]
        return [[self.tau(basis[a], basis[b]) for b in range(n)] for a in range(n)]

    def trace(self, x: Sequence):
        """Jordan trace: (r/n) * Tr L(x); equals the matrix trace for
        matrix algebras and satisfies trace(e) = rank."""
        return _scale(Fraction(self.rank, self.dim), linalg.trace(self.L(x)))

    def box(self, x: Sequence, y: Sequence) -> list:
        """Matrix of z -> {x, y, z}: L(x o y) + [L(x), L(y)]."""
        lx, ly = self.L(x), self.L(y)
        return linalg.mat_add(self.L(self.mul(x, y)), linalg.commutator(lx, ly))

    def triple(self, x: Sequence, y: Sequence, z: Sequence) -> list:
        """{x, y, z} = (x o y) o z + x o (y o z) - y o (x o z)."""
        t1 = self.mul(self.mul(x, y), z)
        t2 = self.mul(x, self.mul(y, z))
        t3 = self.mul(y, self.mul(x, z))
        return [a + b - c for a, b, c in zip(t1, t2, t3)]

    def quadratic_rep(self, z: Sequence) -> list:
        """P(z) = 2 L(z)^2 - L(z^2); satisfies P(z)v = {z, v, z}."""
        lz = self.L(z)
        return linalg.mat_sub(
            linalg.mat_scale(linalg.mat_mul(lz, lz), 2), self.L(self.mul(z, z))
        )

    # -- helpers --------------------------------------------------------
    def basis_vector(self, a: int) -> List[Fraction]:
        v = [Fraction(0)] * self.dim
        v[a] = Fraction(1)
        return v

    def zero(self) -> List[Fraction]:
        return [Fraction(0)] * self.dim

    def symbolic_element(self, vs: VarSet, prefix: str) -> List[Poly]:
        return [Poly.var(vs, f"{prefix}{a + 1}") for a in range(self.dim)]

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "rank": self.rank,
            "unit": [rational_to_str(u) for u in self.unit],
            "structure": [
                [[rational_to_str(c) for c in row] for row in plane]
                for plane in self.structure
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# ---------------------------------------------------------------------------
# built-in instances
# ---------------------------------------------------------------------------


def make_rank_one() -> JordanAlgebra:
    """The one-dimensional algebra: x o y = xy, unit 1."""
    one = Fraction(1)
    return JordanAlgebra(
        name="rank1",
        dim=1,
        rank=1,
        basis_names=("e",),
        structure=(((one,),),),
        unit=(one,),
    )


def make_spin_factor(k: int) -> JordanAlgebra:
    """Spin factor on R + R^(k-1): (s,u) o (t,v) = (st + <u,v>, sv + tu).

    Rank 2, dimension k.
    """
    if k < 2:
        raise InvalidDimension("spin factor needs k >= 2")
    n = k
    S = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    S[0][0][0] = Fraction(1)
    for a in range(1, n):
        S[0][a][a] = Fraction(1)
        S[a][0][a] = Fraction(1)
        S[a][a][0] = Fraction(1)
    unit = [Fraction(1)] + [Fraction(0)] * (n - 1)
    names = ("s",) + tuple(f"u{a}" for a in range(1, n))
    return JordanAlgebra(
        name=f"spin:{k}",
        dim=n,
        rank=2,
        basis_names=names,
        structure=_freeze(S),
        unit=tuple(unit),
    )


def sym_matrix_basis(p: int) -> List[List[List[Fraction]]]:
    """Basis of Sym(p, R): E_aa then E_ab + E_ba for a < b."""
    basis = []
    for a in range(p):
        m = [[Fraction(0)] * p for _ in range(p)]
        m[a][a] = Fraction(1)
        basis.append(m)
    for a in range(p):
        for b in range(a + 1, p):
            m = [[Fraction(0)] * p for _ in range(p)]
            m[a][b] = Fraction(1)
            m[b][a] = Fraction(1)
            basis.append(m)
    return basis


def make_sym_matrices(p: int) -> JordanAlgebra:
    """Real symmetric p x p matrices with x o y = (xy + yx)/2.

    Basis: E_aa, then unnormalized E_ab + E_ba (a < b); rank p.
    """
    if p < 1:
        raise InvalidDimension("need p >= 1")
    basis = sym_matrix_basis(p)
    n = len(basis)

    def coords(m):
        c = []
        for a in range(p):
            c.append(m[a][a])
        for a in range(p):
            for b in range(a + 1, p):
                c.append(m[a][b])
        return c

    S = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    half = Fraction(1, 2)
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            xy = linalg.mat_scale(
                linalg.mat_add(linalg.mat_mul(x, y), linalg.mat_mul(y, x)), half
            )
            for c, v in enumerate(coords(xy)):
                S[i][j][c] = v
    unit = coords(linalg.identity(p))
    names = tuple(f"E{a + 1}{a + 1}" for a in range(p)) + tuple(
        f"F{a + 1}{b + 1}" for a in range(p) for b in range(a + 1, p)
    )
    return JordanAlgebra(
        name=f"sym:{p}",
        dim=n,
        rank=p,
        basis_names=names,
        structure=_freeze(S),
        unit=tuple(unit),
    )


def _freeze(S) -> tuple:
    return tuple(tuple(tuple(row) for row in plane) for plane in S)


# ---------------------------------------------------------------------------
# validation and generic loader
# ---------------------------------------------------------------------------


@dataclass
class JordanValidationReport:
    name: str
    commutative: bool = False
    jordan_identity: bool = False
    unital: bool = False
    positive_definite: bool = False
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "commutative": self.commutative,
            "jordan_identity": self.jordan_identity,
            "unital": self.unital,
            "positive_definite": self.positive_definite,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def validate_jordan(A: JordanAlgebra) -> JordanValidationReport:
    """Check the axioms by full symbolic expansion.

    Commutativity and the defining identity are verified with two vectors
    of polynomial indeterminates, so a pass is a proof, not a sample.
    """
    rep = JordanValidationReport(name=A.name)
    n = A.dim

    rep.commutative = all(
        A.structure[a][b] == A.structure[b][a] for a in range(n) for b in range(n)
    )
    if not rep.commutative:
        rep.failures.append("commutativity: structure constants not symmetric")

    vs = VarSet(tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{i + 1}" for i in range(n)))
    x = A.symbolic_element(vs, "x")
    y = A.symbolic_element(vs, "y")
    x2 = A.mul(x, x)
    lhs = A.mul(x, A.mul(x2, y))
    rhs = A.mul(x2, A.mul(x, y))
    rep.jordan_identity = all((a - b).is_zero() for a, b in zip(lhs, rhs))
    if not rep.jordan_identity:
        rep.failures.append("jordan identity: x o (x^2 o y) != x^2 o (x o y)")

    ex = A.mul([Poly.const(vs, Fraction(u)) for u in A.unit], x)
    rep.unital = all((a - b).is_zero() for a, b in zip(ex, x))
    if not rep.unital:
        rep.failures.append("unit: e o x != x")

    gram = A.tau_gram()
    sym = all(gram[a][b] == gram[b][a] for a in range(n) for b in range(n))
    rep.positive_definite = sym and linalg.leading_minors_positive(gram)
    if not rep.positive_definite:
        rep.failures.append("trace form: Gram matrix not positive definite")

    return rep


def load_from_structure_constants(data: dict | str) -> JordanAlgebra:
    """Build an algebra from the JSON table and validate it.

    Schema: {name, dim, rank, unit: [rational strings], structure:
    [[[rational]]]}.  Raises ValidationFailed when any axiom fails.
    """
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["dim"])
    S = [
        [[Fraction(c) for c in row] for row in plane] for plane in data["structure"]
    ]
    if len(S) != n or any(len(p) != n for p in S) or any(len(r) != n for p in S for r in p):
        raise InvalidDimension("structure table shape does not match dim")
    A = JordanAlgebra(
        name=str(data.get("name", "custom")),
        dim=n,
        rank=int(data["rank"]),
        basis_names=tuple(data.get("basis_names", (f"e{i + 1}" for i in range(n)))),
        structure=_freeze(S),
        unit=tuple(Fraction(u) for u in data["unit"]),
    )
    rep = validate_jordan(A)
    if not rep.passed:
        raise ValidationFailed(rep)
    return A


BUILTIN_FACTORY = {
    "rank1": make_rank_one,
}


def make_algebra(selector: str) -> JordanAlgebra:
    """Parse 'rank1' | 'spin:k' | 'sym:p' | 'file:path'."""
    if selector == "rank1":
        return make_rank_one()
    if selector.startswith("spin:"):
        return make_spin_factor(int(selector.split(":", 1)[1]))
    if selector.startswith("sym:"):
        return make_sym_matrices(int(selector.split(":", 1)[1]))
    if selector.startswith("file:"):
        with open(selector.split(":", 1)[1]) as fh:
            return load_from_structure_constants(json.load(fh))
    raise UnknownAlgebra(f"unknown algebra selector {selector!r}")


def scalar_tau(A: JordanAlgebra, x: Sequence, y: Sequence) -> Scalar:
    """tau(x, y) lifted to a Scalar when coordinates are rational."""
    v = A.tau(x, y)
    return v if isinstance(v, Scalar) else Scalar.of(v)
