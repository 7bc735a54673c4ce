from fractions import Fraction

import pytest

from starcayley import jordan, kkt


@pytest.mark.parametrize(
    "selector,dim_g",
    [("rank1", 3), ("spin:3", 10), ("sym:2", 10), ("sym:3", 21)],
)
def test_dimension_table(selector, dim_g, instance_cache):
    g = instance_cache("lie", selector)
    assert g.dim == dim_g


@pytest.mark.parametrize("selector", ["rank1", "spin:3", "sym:2"])
def test_structure_suites(selector, instance_cache):
    g = instance_cache("lie", selector)
    for check in (
        kkt.verify_antisymmetry,
        kkt.verify_jacobi,
        kkt.verify_grading,
        kkt.verify_theta,
        kkt.verify_identifications,
        kkt.verify_killing_invariance,
    ):
        result = check(g)
        assert result.passed, f"{selector}: {result.name} residual {result.residual}"


class TestKillingForm:
    def test_grade_element_pairing(self, instance_cache):
        # beta(E, E) = 2n for every instance
        for sel in ("rank1", "spin:3", "sym:2", "sym:3"):
            g = instance_cache("lie", sel)
            E = g.grade_element()
            assert g.beta(E, E) == 2 * g.n

    def test_base_point_pairing_scales_with_mu(self):
        A = jordan.make_spin_factor(3)
        for mu in (Fraction(1), Fraction(2), Fraction(-3, 2)):
            g = kkt.GradedLieAlgebra(A, mu)
            o = g.base_point()
            assert g.beta(o, o) == 2 * g.n * mu * mu

    def test_sl2_cross_pairing(self, instance_cache):
        # beta(u-part, v-part) = -4 tau(1,1) = -4 in the rank-one case
        g = instance_cache("lie", "rank1")
        u = g.element(u=[Fraction(1)])
        v = g.element(v=[Fraction(1)])
        assert g.beta(u, v) == -4

    def test_closed_form_matches_off_the_zero_grade(self, instance_cache):
        # the block formula agrees with the intrinsic form on all pairs
        # involving a u- or v-part; the degree-zero interior is where the
        # measured discrepancy lives (kappa_g reported by measure_kappa)
        g = instance_cache("lie", "sym:2")
        closed = kkt.closed_form_killing(g)
        n, d0 = g.n, g.dim0
        for i in range(g.dim):
            for j in range(g.dim):
                if n <= i < n + d0 and n <= j < n + d0:
                    continue
                assert g.killing[i][j] == closed[i][j], (i, j)

    def test_rank_one_closed_form_is_exact(self, instance_cache):
        g = instance_cache("lie", "rank1")
        kappa, res = kkt.measure_kappa(g)
        assert kappa == 1 and res == 0


class TestSymplecticStructure:
    def test_dual_basis_property(self, instance_cache):
        g = instance_cache("lie", "sym:2")
        L, Lp = g.symplectic_basis()
        for a in range(g.n):
            for b in range(g.n):
                assert g.omega(L[a], Lp[b]) == (1 if a == b else 0)

    def test_omega_vanishes_within_each_grade(self, instance_cache):
        g = instance_cache("lie", "spin:3")
        L, Lp = g.symplectic_basis()
        for a in range(g.n):
            for b in range(g.n):
                assert g.omega(L[a], L[b]) == 0
                assert g.omega(Lp[a], Lp[b]) == 0

    def test_sl2_dual_element(self, instance_cache):
        # with mu = 1 the dual of u is -v/4
        g = instance_cache("lie", "rank1")
        _, Lp = g.symplectic_basis()
        assert Lp[0].v == [Fraction(-1, 4)]
        assert all(c == 0 for c in Lp[0].u)

    def test_spur_of_grade_element(self, instance_cache):
        for sel in ("rank1", "spin:3", "sym:3"):
            g = instance_cache("lie", sel)
            assert g.spur(g.grade_element()) == g.n


class TestBracketOracle:
    def test_sl2_relations(self, instance_cache):
        # basis order (u, E, v); [E,u] = u... expressed through the table:
        # [u-part, E] = -u? check the standard sl2 relations via elements
        g = instance_cache("lie", "rank1")
        u = g.element(u=[Fraction(1)])
        v = g.element(v=[Fraction(1)])
        E = g.grade_element()
        assert g.bracket(E, u).u == [Fraction(1)]  # [E, u] = u (lowers grade)
        assert g.bracket(E, v).v == [Fraction(-1)]
        uv = g.bracket(u, v)
        assert uv.t == [[Fraction(-2)]]  # [u, v] = -2 u box v = -2 L(1)

    def test_theta_swaps_grades(self, instance_cache):
        g = instance_cache("lie", "spin:3")
        x = g.element(u=[Fraction(1), Fraction(2), Fraction(0)])
        tx = g.theta(x)
        assert tx.v == x.u and all(c == 0 for c in tx.u)

    def test_coordinates_roundtrip(self, instance_cache):
        g = instance_cache("lie", "sym:2")
        for i in range(g.dim):
            b = g.basis_element(i)
            c = g.to_coords(b)
            assert c[i] == 1 and sum(abs(x) for x in c) == 1
