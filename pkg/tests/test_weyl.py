from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starcayley.poly import Poly, VarSet, varset
from starcayley.scalars import Scalar
from starcayley.weyl import (
    WeylOperator,
    fourier_conjugate,
    holomorphic_frame,
    left_star_operator,
    moyal_star,
    uses_only,
)

VS = varset("l1", "m1")
L_NAMES, M_NAMES = ("l1",), ("m1",)


@st.composite
def polys(draw, vs=VS, max_deg=3):
    p = Poly.zero(vs)
    for _ in range(draw(st.integers(0, 3))):
        mono = Poly.const(vs, draw(st.fractions(min_value=-6, max_value=6, max_denominator=3)))
        for _ in range(draw(st.integers(0, max_deg))):
            mono = mono * Poly.var(vs, draw(st.sampled_from(vs.names)))
        p = p + mono
    return p


@st.composite
def operators(draw, vs=VS):
    op = WeylOperator.zero(vs)
    gens = [WeylOperator.mult_var(vs, x) for x in vs.names] + [
        WeylOperator.partial(vs, x) for x in vs.names
    ]
    for _ in range(draw(st.integers(0, 3))):
        word = WeylOperator.identity(vs).scale(
            Scalar.of(draw(st.fractions(min_value=-4, max_value=4, max_denominator=2)))
        )
        for _ in range(draw(st.integers(0, 3))):
            word = word * draw(st.sampled_from(gens))
        op = op + word
    return op


class TestNormalOrdering:
    def test_canonical_commutation(self):
        x = WeylOperator.mult_var(VS, "l1")
        d = WeylOperator.partial(VS, "l1")
        assert d * x - x * d == WeylOperator.identity(VS)

    def test_euler_operator_square(self):
        x = WeylOperator.mult_var(VS, "l1")
        d = WeylOperator.partial(VS, "l1")
        e = x * d
        expected = (x * x) * (d * d) + e
        assert e * e == expected

    @given(operators(), operators(), polys())
    @settings(max_examples=40, deadline=None)
    def test_composition_matches_application(self, p_op, q_op, f):
        assert (p_op * q_op).apply(f) == p_op.apply(q_op.apply(f))

    @given(operators(), operators(), operators())
    @settings(max_examples=25, deadline=None)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestMoyalStar:
    def test_darboux_pair(self):
        l = Poly.var(VS, "l1")
        m = Poly.var(VS, "m1")
        nu = Poly.const(VS, 0) + Poly.const(VS, 1) * Scalar.nu(1)
        assert moyal_star(l, m, L_NAMES, M_NAMES) == l * m + nu
        assert moyal_star(m, l, L_NAMES, M_NAMES) == l * m - nu

    @given(polys())
    def test_unit(self, p):
        one = Poly.const(VS, 1)
        assert moyal_star(p, one, L_NAMES, M_NAMES) == p
        assert moyal_star(one, p, L_NAMES, M_NAMES) == p

    @given(polys(), polys(), polys())
    @settings(max_examples=25, deadline=None)
    def test_associativity(self, p, q, r):
        star = lambda a, b: moyal_star(a, b, L_NAMES, M_NAMES)
        assert star(star(p, q), r) == star(p, star(q, r))

    @given(polys(), polys())
    @settings(max_examples=30, deadline=None)
    def test_classical_limit(self, p, q):
        d = moyal_star(p, q, L_NAMES, M_NAMES) - p * q
        # only positive nu-powers survive in the difference
        assert all(k >= 1 for c in d.terms.values() for k in c.coeffs)


class TestLeftStarOperator:
    def test_linear_symbol(self):
        l = Poly.var(VS, "l1")
        op = left_star_operator(l, L_NAMES, M_NAMES)
        expected = WeylOperator.mult_var(VS, "l1") + WeylOperator.partial(VS, "m1").scale(
            Scalar.nu(1)
        )
        assert op == expected

    def test_constant_symbol(self):
        op = left_star_operator(Poly.const(VS, 1), L_NAMES, M_NAMES)
        assert op == WeylOperator.identity(VS)

    @given(polys(), polys())
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_moyal(self, lam, u):
        op = left_star_operator(lam, L_NAMES, M_NAMES)
        assert op.apply(u) == moyal_star(lam, u, L_NAMES, M_NAMES)

    @given(polys())
    def test_order_bounded_by_degree(self, lam):
        op = left_star_operator(lam, L_NAMES, M_NAMES)
        assert op.order() <= lam.total_degree()


class TestFourierConjugation:
    def test_generator_images(self):
        m_mult = WeylOperator.mult_var(VS, "m1")
        img, tvs = fourier_conjugate(m_mult, L_NAMES, M_NAMES)
        assert img == WeylOperator.partial(tvs, "h1").scale(Scalar.i())
        dm = WeylOperator.partial(VS, "m1")
        img2, _ = fourier_conjugate(dm, L_NAMES, M_NAMES)
        assert img2 == WeylOperator.mult_var(tvs, "h1").scale(Scalar.i())

    @given(operators(), operators())
    @settings(max_examples=25, deadline=None)
    def test_homomorphism(self, a, b):
        fa, _ = fourier_conjugate(a, L_NAMES, M_NAMES)
        fb, _ = fourier_conjugate(b, L_NAMES, M_NAMES)
        fab, _ = fourier_conjugate(a * b, L_NAMES, M_NAMES)
        assert fab == fa * fb

    def test_ccr_preserved(self):
        # the image of [d_m, m] = 1 must again be the identity
        m_mult = WeylOperator.mult_var(VS, "m1")
        dm = WeylOperator.partial(VS, "m1")
        img, tvs = fourier_conjugate(dm * m_mult - m_mult * dm, L_NAMES, M_NAMES)
        assert img == WeylOperator.identity(tvs)


class TestHolomorphicFrame:
    ETA = ("h1",)

    def _roundtrip_names(self):
        fvs = VarSet(("l1", "h1"))
        return fvs

    def test_z_multiplication_pulls_back(self):
        fvs = self._roundtrip_names()
        # mult by l + i nu eta should become mult by z exactly
        combo = WeylOperator.mult_var(fvs, "l1") + WeylOperator.mult_var(fvs, "h1").scale(
            Scalar.nu(1) * Scalar.i()
        )
        img, tvs = holomorphic_frame(combo, ("l1",), self.ETA)
        assert img == WeylOperator.mult_var(tvs, "z1")

    def test_dz_formula(self):
        fvs = self._roundtrip_names()
        # (1/2nu)(nu d_l - i d_eta) = d_z
        half_nu_inv = Scalar.nu(-1, Fraction(1, 2))
        combo = (
            WeylOperator.partial(fvs, "l1").scale(Scalar.nu(1))
            - WeylOperator.partial(fvs, "h1").scale(Scalar.i())
        ).scale(half_nu_inv)
        img, tvs = holomorphic_frame(combo, ("l1",), self.ETA)
        assert img == WeylOperator.partial(tvs, "z1")

    def test_ccr_preserved(self):
        fvs = self._roundtrip_names()
        x = WeylOperator.mult_var(fvs, "h1")
        d = WeylOperator.partial(fvs, "h1")
        img, tvs = holomorphic_frame(d * x - x * d, ("l1",), self.ETA)
        assert img == WeylOperator.identity(tvs)

    @given(operators(vs=VarSet(("l1", "h1"))), operators(vs=VarSet(("l1", "h1"))))
    @settings(max_examples=20, deadline=None)
    def test_homomorphism(self, a, b):
        ia, _ = holomorphic_frame(a, ("l1",), self.ETA)
        ib, _ = holomorphic_frame(b, ("l1",), self.ETA)
        iab, _ = holomorphic_frame(a * b, ("l1",), self.ETA)
        assert iab == ia * ib

    def test_uses_only(self):
        tvs = VarSet(("z1", "w1"))
        op = WeylOperator.mult_var(tvs, "z1") * WeylOperator.partial(tvs, "z1")
        assert uses_only(op, ("z1",))
        assert not uses_only(op * WeylOperator.partial(tvs, "w1"), ("z1",))


def test_covariance_and_property_b(instance_cache):
    from starcayley.weyl import verify_covariance, verify_property_B

    ch = instance_cache("chart", "spin:3")
    res, bad = verify_covariance(ch)
    assert res == 0 and bad == 0
    N, ok = verify_property_B(ch)
    assert N == 3 and ok
