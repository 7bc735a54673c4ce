"""Normal-ordered polynomial-coefficient differential operators.

A WeylOperator is a finite sum  sum c_{ab} x^a d^b  with all multiplication
factors to the left of all derivatives; composition re-normal-orders via
the commutation relation d x = x d + 1.  On top of this sit

  * the Moyal star product on chart polynomials (independent bidifferential
    implementation on a doubled variable set),
  * left star multiplication as an operator (Poisson-tensor contractions),
  * the partial Fourier transform and the passage to the holomorphic frame,
    both realized as exact conjugation homomorphisms on generators with
    the factor order of each normal-ordered word preserved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .poly import Poly, VarSet, VarSetMismatch
from .scalars import Scalar

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


class WeylOperator:
    """sum over (a, b) of  c * x^a d^b  on polynomials in a fixed varset."""

    __slots__ = ("vs", "terms")

    def __init__(self, vs: VarSet, terms: Dict[Key, Scalar] | None = None):
        pruned: Dict[Key, Scalar] = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    pruned[(tuple(k[0]), tuple(k[1]))] = c
        object.__setattr__(self, "vs", vs)
        object.__setattr__(self, "terms", pruned)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(vs: VarSet) -> "WeylOperator":
        return WeylOperator(vs)

    @staticmethod
    def identity(vs: VarSet) -> "WeylOperator":
        z = (0,) * len(vs.names)
        return WeylOperator(vs, {(z, z): Scalar.one()})

    @staticmethod
    def from_poly(p: Poly) -> "WeylOperator":
        """Multiplication by p."""
        z = (0,) * len(p.vs.names)
        return WeylOperator(p.vs, {(e, z): c for e, c in p.terms.items()})

    @staticmethod
    def mult_var(vs: VarSet, name: str) -> "WeylOperator":
        return WeylOperator.from_poly(Poly.var(vs, name))

    @staticmethod
    def partial(vs: VarSet, name: str) -> "WeylOperator":
        z = [0] * len(vs.names)
        d = list(z)
        d[vs.index(name)] = 1
        return WeylOperator(vs, {(tuple(z), tuple(d)): Scalar.one()})

    # -- ring structure ----------------------------------------------------
    def _check(self, other: "WeylOperator"):
        if self.vs != other.vs:
            raise VarSetMismatch(f"{self.vs.names} vs {other.vs.names}")

    def __add__(self, other: "WeylOperator") -> "WeylOperator":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Scalar.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return WeylOperator(self.vs, out)

    def __neg__(self) -> "WeylOperator":
        return WeylOperator(self.vs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WeylOperator") -> "WeylOperator":
        return self + (-other)

    def scale(self, c) -> "WeylOperator":
        c = Scalar.coerce(c)
        return WeylOperator(self.vs, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "WeylOperator") -> "WeylOperator":
        """Composition: self after other, re-normal-ordered."""
        self._check(other)
        nvars = len(self.vs.names)
        out: Dict[Key, Scalar] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                base = c1 * c2
                # move d^b1 past x^a2: sum over contraction multi-indices k
                ranges = [range(min(b1[i], a2[i]) + 1) for i in range(nvars)]
                for kk in itertools.product(*ranges):
                    f = 1
                    for i in range(nvars):
                        f *= _binom(b1[i], kk[i]) * _binom(a2[i], kk[i]) * factorial(kk[i])
                    xe = tuple(a1[i] + a2[i] - kk[i] for i in range(nvars))
                    de = tuple(b1[i] + b2[i] - kk[i] for i in range(nvars))
                    s = out.get((xe, de), Scalar.zero()) + base * Fraction(f)
                    if s.is_zero():
                        out.pop((xe, de), None)
                    else:
                        out[(xe, de)] = s
        return WeylOperator(self.vs, out)

    def __pow__(self, n: int) -> "WeylOperator":
        r = WeylOperator.identity(self.vs)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylOperator)
            and self.vs == other.vs
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vs, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    # -- semantics ---------------------------------------------------------
    def apply(self, p: Poly) -> Poly:
        if p.vs != self.vs:
            raise VarSetMismatch(f"{self.vs.names} vs {p.vs.names}")
        nvars = len(self.vs.names)
        out: Dict[Tuple[int, ...], Scalar] = {}
        for (a, b), c in self.terms.items():
            for e, pc in p.terms.items():
                if any(e[i] < b[i] for i in range(nvars)):
                    continue
                f = 1
                for i in range(nvars):
                    for t in range(b[i]):
                        f *= e[i] - t
                mono = tuple(a[i] + e[i] - b[i] for i in range(nvars))
                s = out.get(mono, Scalar.zero()) + c * pc * Fraction(f)
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return Poly(self.vs, out)

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        """Highest total derivative order appearing."""
        return max((sum(b) for (_, b) in self.terms), default=0)

    def flip_nu(self) -> "WeylOperator":
        return WeylOperator(self.vs, {k: c.flip_nu() for k, c in self.terms.items()})

    # -- conjugation on generators -------------------------------------------
    def map_generators(
        self,
        target: VarSet,
        x_images: Dict[str, "WeylOperator"],
        d_images: Dict[str, "WeylOperator"],
    ) -> "WeylOperator":
        """Algebra homomorphism fixed by generator images.

        Each normal-ordered word x^a d^b maps to the composition of the
        generator images in the same order (all multiplications, then all
        derivatives); images are composed with `*` so the result is again
        normal-ordered.
        """
        acc = WeylOperator.zero(target)
        for (a, b), c in self.terms.items():
            word = WeylOperator.identity(target)
            for i, name in enumerate(self.vs.names):
                for _ in range(a[i]):
                    word = word * x_images[name]
            for i, name in enumerate(self.vs.names):
                for _ in range(b[i]):
                    word = word * d_images[name]
            acc = acc + word.scale(c)
        return acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            factors = []
            for i, name in enumerate(self.vs.names):
                if a[i] == 1:
                    factors.append(name)
                elif a[i] > 1:
                    factors.append(f"{name}^{a[i]}")
            for i, name in enumerate(self.vs.names):
                if b[i] == 1:
                    factors.append(f"d_{name}")
                elif b[i] > 1:
                    factors.append(f"d_{name}^{b[i]}")
            body = " ".join(factors) if factors else "1"
            bits.append(f"({c}) {body}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Moyal star product (doubled-variable bidifferential implementation)
# ---------------------------------------------------------------------------


def moyal_star(u: Poly, v: Poly, l_names: Sequence[str], m_names: Sequence[str]) -> Poly:
    """u star v = uv + sum_k (nu^k / k!) Lambda-contractions, exactly.

    The Poisson tensor pairs l^a with m^a; the k-th term is computed by
    applying the bidifferential once per order on a doubled variable set
    and merging the two copies back together.
    """
    vs = u.vs
    if v.vs != vs:
        raise VarSetMismatch(f"{vs.names} vs {v.vs.names}")
    left = tuple(f"L.{x}" for x in vs.names)
    right = tuple(f"R.{x}" for x in vs.names)
    vs2 = VarSet(left + right)
    uu = u.substitute({x: Poly.var(vs2, f"L.{x}") for x in vs.names}, vs2)
    vv = v.substitute({x: Poly.var(vs2, f"R.{x}") for x in vs.names}, vs2)
    big = uu * vv

    def bidiff(p: Poly) -> Poly:
        acc = Poly.zero(vs2)
        for la, ma in zip(l_names, m_names):
            acc = acc + p.diff(f"L.{la}").diff(f"R.{ma}") - p.diff(f"L.{ma}").diff(f"R.{la}")
        return acc

    merge_map = {f"L.{x}": Poly.var(vs, x) for x in vs.names}
    merge_map.update({f"R.{x}": Poly.var(vs, x) for x in vs.names})

    result = Poly.zero(vs)
    k = 0
    term = big
    while not term.is_zero():
        merged = term.substitute(merge_map, vs)
        result = result + merged * Scalar.nu(k, Fraction(1, factorial(k)))
        term = bidiff(term)
        k += 1
    return result


def left_star_operator(
    lam: Poly, l_names: Sequence[str], m_names: Sequence[str]
) -> WeylOperator:
    """The operator u -> lam star u, built from ordered index contractions."""
    vs = lam.vs
    n = len(l_names)
    nvars = len(vs.names)
    l_idx = [vs.index(x) for x in l_names]
    m_idx = [vs.index(x) for x in m_names]
    out: Dict[Key, Scalar] = {}

    def emit(p: Poly, dexp: Tuple[int, ...], coeff: Scalar):
        for e, c in p.terms.items():
            k = (e, dexp)
            s = out.get(k, Scalar.zero()) + c * coeff
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s

    zero_d = (0,) * nvars
    emit(lam, zero_d, Scalar.one())
    deg = lam.total_degree()
    for k in range(1, deg + 1):
        nu_k = Scalar.nu(k, Fraction(1, factorial(k)))
        for tup in itertools.product(range(2 * n), repeat=k):
            p = lam
            dexp = [0] * nvars
            sign = 1
            for c in tup:
                if c < n:
                    p = p.diff(l_names[c])
                    dexp[m_idx[c]] += 1
                else:
                    p = p.diff(m_names[c - n])
                    dexp[l_idx[c - n]] += 1
                    sign = -sign
                if p.is_zero():
                    break
            if p.is_zero():
                continue
            emit(p, tuple(dexp), nu_k if sign > 0 else -nu_k)
    return WeylOperator(vs, out)


# ---------------------------------------------------------------------------
# Fourier transform and holomorphic frame as generator conjugations
# ---------------------------------------------------------------------------


def fourier_conjugate(
    op: WeylOperator,
    l_names: Sequence[str],
    m_names: Sequence[str],
    eta_names: Sequence[str] | None = None,
) -> Tuple[WeylOperator, VarSet]:
    """Conjugate by the partial Fourier transform in the m-variables.

    Generator images: l stays, d/dl stays, multiplication by m^a becomes
    i d/deta^a, and d/dm^a becomes i eta^a.
    """
    if eta_names is None:
        eta_names = tuple(f"h{a + 1}" for a in range(len(m_names)))
    target = VarSet(tuple(l_names) + tuple(eta_names))
    i = Scalar.i()
    x_images: Dict[str, WeylOperator] = {}
    d_images: Dict[str, WeylOperator] = {}
    for la in l_names:
        x_images[la] = WeylOperator.mult_var(target, la)
        d_images[la] = WeylOperator.partial(target, la)
    for ma, ea in zip(m_names, eta_names):
        x_images[ma] = WeylOperator.partial(target, ea).scale(i)
        d_images[ma] = WeylOperator.mult_var(target, ea).scale(i)
    return op.map_generators(target, x_images, d_images), target


def holomorphic_frame(
    op: WeylOperator,
    l_names: Sequence[str],
    eta_names: Sequence[str],
    z_names: Sequence[str] | None = None,
    zbar_names: Sequence[str] | None = None,
) -> Tuple[WeylOperator, VarSet]:
    """Change variables to z = l + i nu eta and its conjugate.

    Generator images: mult l -> (z + zbar)/2, mult eta -> (z - zbar)/(2 i nu),
    d/dl -> d/dz + d/dzbar, d/deta -> i nu (d/dz - d/dzbar).
    """
    n = len(l_names)
    if z_names is None:
        z_names = tuple(f"z{a + 1}" for a in range(n))
    if zbar_names is None:
        zbar_names = tuple(f"w{a + 1}" for a in range(n))
    target = VarSet(tuple(z_names) + tuple(zbar_names))
    half = Scalar.of(Fraction(1, 2))
    # 1/(2 i nu) = -(i/2) nu^-1
    inv2inu = Scalar.nu(-1, Fraction(1, 2)) * Scalar.i() * Scalar.of(-1)
    inu = Scalar.nu(1) * Scalar.i()
    x_images: Dict[str, WeylOperator] = {}
    d_images: Dict[str, WeylOperator] = {}
    for la, ea, za, wa in zip(l_names, eta_names, z_names, zbar_names):
        mz = WeylOperator.mult_var(target, za)
        mw = WeylOperator.mult_var(target, wa)
        dz = WeylOperator.partial(target, za)
        dw = WeylOperator.partial(target, wa)
        x_images[la] = (mz + mw).scale(half)
        x_images[ea] = (mz - mw).scale(inv2inu)
        d_images[la] = dz + dw
        d_images[ea] = (dz - dw).scale(inu)
    return op.map_generators(target, x_images, d_images), target


def uses_only(op: WeylOperator, names: Sequence[str]) -> bool:
    """True when every term touches only the given variables."""
    allowed = {op.vs.index(x) for x in names}
    for (a, b) in op.terms:
        for i in range(len(op.vs.names)):
            if i not in allowed and (a[i] or b[i]):
                return False
    return True


# ---------------------------------------------------------------------------
# chart-level verification reports
# ---------------------------------------------------------------------------


def verify_covariance(ch) -> Tuple[Fraction, int]:
    """lambda_A star lambda_B - lambda_B star lambda_A = 2 nu {lambda_A, lambda_B}
    over all basis pairs; returns (residual, failing pair count)."""
    from .chart import poly_abs

    two_nu = Scalar.nu(1, Fraction(2))
    res = Fraction(0)
    bad = 0
    for i in range(ch.g.dim):
        for j in range(i + 1, ch.g.dim):
            comm = moyal_star(ch.moment[i], ch.moment[j], ch.l_names, ch.m_names) - moyal_star(
                ch.moment[j], ch.moment[i], ch.l_names, ch.m_names
            )
            d = comm - ch.poisson(ch.moment[i], ch.moment[j]) * two_nu
            r = poly_abs(d)
            if r:
                bad += 1
                res += r
    return res, bad


def verify_property_B(ch) -> Tuple[int, bool]:
    """Star multiplication by any moment map stops at a uniform order N."""
    N = ch.max_moment_degree()
    ok = all(
        left_star_operator(lam, ch.l_names, ch.m_names).order() <= N for lam in ch.moment
    )
    return N, ok
