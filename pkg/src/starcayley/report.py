"""Verification pipeline: build an instance, run the suites, collect a report.

Suites (in dependency order): jordan, lie, chart, star, fourier, theorem.
Construction artifacts are cached per run so suites share the same algebra,
graded Lie algebra, chart and representation objects.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from . import chart as chart_mod
from . import hds as hds_mod
from . import jordan as jordan_mod
from . import kkt as kkt_mod
from . import starrep as starrep_mod
from . import weyl as weyl_mod
from .poly import Poly
from .scalars import Scalar, rational_to_str

ALL_SUITES = ("jordan", "lie", "chart", "star", "fourier", "theorem")

BUILTIN_SELECTORS = ("rank1", "spin:2", "spin:3", "spin:4", "spin:5", "sym:2", "sym:3")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    algebra: str = "rank1"
    mu: Fraction = Fraction(1)
    suites: tuple = ALL_SUITES
    fmt: str = "text"
    out: Optional[str] = None
    seed: int = 20260826
    associativity_trials: int = 20

    def validate(self):
        if self.mu == 0:
            raise ConfigError("mu must be nonzero")
        bad = [s for s in self.suites if s not in ALL_SUITES]
        if bad:
            raise ConfigError(f"unknown suites: {bad}")
        if self.fmt not in ("text", "json"):
            raise ConfigError(f"unknown format {self.fmt!r}")


@dataclass
class VerificationReport:
    algebra: str
    mu: str
    suites: Dict[str, dict] = field(default_factory=dict)
    constants: Dict[str, object] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s.get("passed") for s in self.suites.values())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "mu": self.mu,
            "passed": self.passed,
            "suites": {k: self.suites[k] for k in sorted(self.suites)},
            "constants": {k: self.constants[k] for k in sorted(self.constants)},
            "timings": {k: round(v, 3) for k, v in sorted(self.timings.items())},
        }

    def to_text(self) -> str:
        lines = [f"instance {self.algebra}  mu = {self.mu}"]
        for name in ALL_SUITES:
            if name not in self.suites:
                continue
            s = self.suites[name]
            mark = "PASS" if s.get("passed") else "FAIL"
            lines.append(f"  [{mark}] {name}  ({self.timings.get(name, 0):.2f}s)")
            for k, v in sorted(s.items()):
                if k == "passed":
                    continue
                lines.append(f"      {k}: {v}")
        lines.append("constants:")
        for k in sorted(self.constants):
            lines.append(f"  {k} = {self.constants[k]}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


class InstanceContext:
    """Lazily built, shared construction artifacts for one (algebra, mu)."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._cache: dict = {}

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def algebra(self) -> jordan_mod.JordanAlgebra:
        return self._get("algebra", lambda: jordan_mod.make_algebra(self.config.algebra))

    @property
    def lie(self) -> kkt_mod.GradedLieAlgebra:
        return self._get("lie", lambda: kkt_mod.GradedLieAlgebra(self.algebra, self.config.mu))

    @property
    def chart(self) -> chart_mod.SymplecticChart:
        return self._get("chart", lambda: chart_mod.SymplecticChart(self.lie))

    @property
    def srep(self) -> starrep_mod.StarRepresentation:
        return self._get("srep", lambda: starrep_mod.StarRepresentation(self.lie))

    @property
    def rho(self) -> List[weyl_mod.WeylOperator]:
        return self._get("rho", lambda: self.srep.rho_basis())

    @property
    def series(self) -> hds_mod.DiscreteSeries:
        return self._get("series", lambda: hds_mod.DiscreteSeries(self.lie))


def _random_poly(rng: random.Random, ch, max_deg: int = 3) -> Poly:
    p = Poly.zero(ch.vs)
    names = ch.vs.names
    for _ in range(rng.randint(1, 4)):
        mono = Poly.const(ch.vs, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        for _ in range(rng.randint(0, max_deg)):
            mono = mono * Poly.var(ch.vs, rng.choice(names))
        p = p + mono
    return p


# -- suite runners --------------------------------------------------------


def run_jordan_suite(ctx: InstanceContext) -> dict:
    rep = jordan_mod.validate_jordan(ctx.algebra)
    out = rep.to_json()
    out["dim"] = ctx.algebra.dim
    out["rank"] = ctx.algebra.rank
    return out


def run_lie_suite(ctx: InstanceContext) -> dict:
    g = ctx.lie
    results = kkt_mod.run_structure_suite(g)
    out = {"passed": all(r.passed for r in results), "dim_g": g.dim}
    for r in results:
        out[r.name] = ("pass" if r.passed else f"FAIL residual {r.residual}") + (
            f" ({r.detail})" if r.detail else ""
        )
    kappa, _ = kkt_mod.measure_kappa(g)
    out["kappa_g"] = str(kappa) if kappa is not None else "not proportional"
    return out


def run_chart_suite(ctx: InstanceContext) -> dict:
    ch = ctx.chart
    res, bad = ch.hamiltonicity_residual()
    deg = ch.max_moment_degree()
    return {
        "passed": res == 0 and deg <= 3,
        "hamiltonicity_residual": str(res),
        "failing_pairs": bad,
        "max_moment_degree": deg,
    }


def run_star_suite(ctx: InstanceContext) -> dict:
    ch = ctx.chart
    rng = random.Random(ctx.config.seed)
    out: dict = {}

    star = lambda p, q: weyl_mod.moyal_star(p, q, ch.l_names, ch.m_names)
    one = Poly.const(ch.vs, 1)
    unit_ok = True
    lowest_ok = True
    first_order_ok = True
    for lam in ctx.chart.moment:
        if not (star(lam, one) - lam).is_zero() or not (star(one, lam) - lam).is_zero():
            unit_ok = False
    for _ in range(5):
        p, q = _random_poly(rng, ch), _random_poly(rng, ch)
        s = star(p, q)
        d0 = s - p * q
        if any(k <= 0 for c in d0.terms.values() for k in c.coeffs):
            lowest_ok = False
        comm = s - star(q, p)
        want = ch.poisson(p, q) * Scalar.nu(1, Fraction(2))
        d = comm - want
        if any(k < 2 for c in d.terms.values() for k in c.coeffs):
            first_order_ok = False
    out["unit"] = unit_ok
    out["mod_nu_is_product"] = lowest_ok
    out["commutator_mod_nu2_is_2nu_poisson"] = first_order_ok

    assoc_fail = 0
    for _ in range(ctx.config.associativity_trials):
        p, q, r = (_random_poly(rng, ch) for _ in range(3))
        if not (star(star(p, q), r) - star(p, star(q, r))).is_zero():
            assoc_fail += 1
    out["associativity_trials"] = ctx.config.associativity_trials
    out["associativity_failures"] = assoc_fail

    cov_res, cov_bad = weyl_mod.verify_covariance(ch)
    out["covariance_residual"] = str(cov_res)
    N, b_ok = weyl_mod.verify_property_B(ch)
    out["property_B_order"] = N
    ctx._cache["property_B_order"] = N
    out["passed"] = (
        unit_ok
        and lowest_ok
        and first_order_ok
        and assoc_fail == 0
        and cov_res == 0
        and b_ok
        and N == 3
    )
    return out


def run_fourier_suite(ctx: InstanceContext) -> dict:
    results = starrep_mod.verify_star_transform(ctx.chart, ctx.srep, ctx.rho)
    holo = all(r.holomorphic for r in results)
    match = all(r.matches_rho for r in results)
    flip = all(r.matches_rho_flipped_sign for r in results)
    total = sum((r.residual for r in results), Fraction(0))
    return {
        "passed": holo and match,
        "holomorphic": holo,
        "matches_rho": match,
        "matches_minus_rho_at_flipped_nu": flip,
        "residual": str(total),
    }


def run_theorem_suite(ctx: InstanceContext) -> dict:
    g = ctx.lie
    out: dict = {}
    sign_rho, res_rho = starrep_mod.verify_rho_homomorphism(g, ctx.rho)
    out["rho_bracket_sign"] = sign_rho
    out["rho_hom_residual"] = str(res_rho)
    ops = ctx.series.dpi_basis()
    sign_dpi, res_dpi = hds_mod.verify_dpi_homomorphism(g, ops)
    out["dpi_bracket_sign"] = sign_dpi
    out["dpi_hom_residual"] = str(res_dpi)
    field_res = ctx.srep.field_residual()
    out["tube_field_residual"] = str(field_res)
    kappa_h, kres = ctx.srep.measure_kappa_h()
    out["kappa_h"] = str(kappa_h) if kappa_h is not None else f"none (residual {kres})"
    try:
        eq = hds_mod.solve_equivalence(g, ctx.rho, ctx.series)
        cmpr = hds_mod.compare_with_closed_form(g, eq.m_star)
        out["alpha"] = eq.alpha
        out["m_star"] = str(eq.m_star)
        out["m_closed_form"] = str(cmpr.m_closed)
        out["match"] = cmpr.match
        out["factor"] = str(cmpr.factor) if cmpr.factor is not None else None
        solved = cmpr.match in ("exact", "proportional")
    except hds_mod.NoEquivalence as exc:
        out["match"] = "failed"
        out["error"] = str(exc)
        solved = False
    nu0, vanish = hds_mod.special_nu_value(g)
    out["nu0"] = str(nu0)
    out["numerator_vanishes_at_nu0"] = vanish
    if solved:
        tau_e = ctx.srep.tau_scalar(g.grade_element())
        out["tau_of_grade_element_at_nu0"] = str(tau_e.eval_nu(nu0))
    out["passed"] = (
        sign_rho != 0 and res_rho == 0 and sign_dpi != 0 and res_dpi == 0
        and field_res == 0 and kappa_h is not None and solved and vanish
    )
    return out


SUITE_RUNNERS = {
    "jordan": run_jordan_suite,
    "lie": run_lie_suite,
    "chart": run_chart_suite,
    "star": run_star_suite,
    "fourier": run_fourier_suite,
    "theorem": run_theorem_suite,
}


def run(config: RunConfig) -> VerificationReport:
    config.validate()
    ctx = InstanceContext(config)
    rep = VerificationReport(algebra=config.algebra, mu=rational_to_str(config.mu))
    for name in ALL_SUITES:
        if name not in config.suites:
            continue
        t0 = time.perf_counter()
        try:
            rep.suites[name] = SUITE_RUNNERS[name](ctx)
        except jordan_mod.ValidationFailed as exc:
            rep.suites[name] = {"passed": False, "error": str(exc)}
        rep.timings[name] = time.perf_counter() - t0
    g = ctx._cache.get("lie")
    rep.constants["dim_algebra"] = ctx.algebra.dim
    rep.constants["rank"] = ctx.algebra.rank
    if g is not None:
        o = g.base_point()
        rep.constants["dim_g"] = g.dim
        rep.constants["c"] = rational_to_str(g.mu)
        rep.constants["beta_oo"] = rational_to_str(g.beta(o, o))
    if "property_B_order" in ctx._cache:
        rep.constants["N"] = ctx._cache["property_B_order"]
    return rep


def write_report(rep: VerificationReport, config: RunConfig) -> str:
    text = (
        json.dumps(rep.to_json(), indent=2, sort_keys=True)
        if config.fmt == "json"
        else rep.to_text()
    )
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    return text
