"""Command-line driver.

    starcayley verify --algebra spin:3 --mu 1 --suites all --format json --out report.json
    starcayley list-algebras
    starcayley show --algebra sym:2 --what bracket-table|moment-maps|rho|dpi

Exit codes: 0 all selected suites pass, 1 some suite failed, 2 bad config.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jordan, kkt, report
from .report import ALL_SUITES, BUILTIN_SELECTORS, ConfigError, RunConfig


def _parse_mu(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad --mu value {text!r}: {exc}")


def _parse_suites(text: str) -> tuple:
    if text == "all":
        return ALL_SUITES
    return tuple(s.strip() for s in text.split(",") if s.strip())


def cmd_verify(args) -> int:
    config = RunConfig(
        algebra=args.algebra,
        mu=_parse_mu(args.mu),
        suites=_parse_suites(args.suites),
        fmt=args.format,
        out=args.out,
        seed=args.seed,
    )
    config.validate()
    rep = report.run(config)
    print(report.write_report(rep, config))
    return 0 if rep.passed else 1


def cmd_list_algebras(_args) -> int:
    for sel in BUILTIN_SELECTORS:
        A = jordan.make_algebra(sel)
        g_dim = 2 * A.dim + len(kkt.GradedLieAlgebra(A).t_basis)
        print(f"{sel:8s} dim={A.dim:2d} rank={A.rank} dim_g={g_dim}")
    print("custom  file:<path-to-structure-constants.json>")
    return 0


def cmd_show(args) -> int:
    mu = _parse_mu(args.mu)
    if mu == 0:
        raise ConfigError("mu must be nonzero")
    ctx = report.InstanceContext(RunConfig(algebra=args.algebra, mu=mu))
    g = ctx.lie
    if args.what == "bracket-table":
        out = {
            f"[{i},{j}]": {str(k): str(c) for k, c in nz.items()}
            for (i, j), nz in sorted(g.bracket_table.items())
        }
        print(json.dumps(out, indent=2))
    elif args.what == "moment-maps":
        for i, lam in enumerate(ctx.chart.moment):
            print(f"lambda[{i}] = {lam}")
    elif args.what == "rho":
        for i, op in enumerate(ctx.rho):
            print(f"rho[{i}] = {op}")
    elif args.what == "dpi":
        for i, op in enumerate(ctx.series.dpi_basis()):
            print(f"dpi[{i}] = ({op.v})  +  m * ({op.s})")
    else:
        raise ConfigError(f"unknown --what {args.what!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starcayley", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites on one instance")
    v.add_argument("--algebra", default="rank1")
    v.add_argument("--mu", default="1")
    v.add_argument("--suites", default="all", help="comma list or 'all'")
    v.add_argument("--format", default="text", choices=("text", "json"))
    v.add_argument("--out", default=None)
    v.add_argument("--seed", type=int, default=20260826)
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list-algebras", help="list built-in instances")
    ls.set_defaults(func=cmd_list_algebras)

    s = sub.add_parser("show", help="print computed objects for one instance")
    s.add_argument("--algebra", required=True)
    s.add_argument("--mu", default="1")
    s.add_argument(
        "--what", required=True, choices=("bracket-table", "moment-maps", "rho", "dpi")
    )
    s.set_defaults(func=cmd_show)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, jordan.InvalidDimension, jordan.UnknownAlgebra) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
