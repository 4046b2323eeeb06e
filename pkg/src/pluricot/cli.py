"""Command-line front end.

Subcommands: ``chi`` (Euler characteristics), ``criterion`` (per-n verdicts
and the quadratic threshold), ``catalog`` (the built-in surface families),
``geography`` (lattice scans to CSV, optionally with a rendered figure) and
``verify`` (the internal oracle suite).

Exit codes: 0 success, 1 verification/criterion failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence, Tuple

from . import catalog, criteria, geography, report, selfcheck
from .chern import SurfaceInvariants, chi_sym_cotangent
from .errors import PluricotError
from .report import ChiValue, ReportDocument

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3

#: Environment variable overriding the geography cell budget.
MAX_CELLS_ENV = "PLURICOT_MAX_CELLS"

GG_WARNING = "global generation asserted by user, not verified"
MODEL_WARNING = (
    "verdicts assume a minimal surface of general type with ample canonical class; "
    "neither property is decidable from Chern numbers alone"
)


def _parse_span(text: str) -> Tuple[int, int]:
    """Parse 'N' or 'A..B' into an inclusive integer interval."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _parse_type(text: str, length: int) -> Tuple[int, ...]:
    parts = tuple(int(piece) for piece in text.split(","))
    if len(parts) != length:
        raise ValueError(f"polarization type needs {length} entries, got {text!r}")
    return parts


def _parse_grid(text: str) -> List[SurfaceInvariants]:
    grid = []
    for chunk in text.split(";"):
        c1_text, c2_text = chunk.split(",")
        grid.append(SurfaceInvariants(c1_sq=int(c1_text), c2=int(c2_text)))
    return grid


def _emit(doc: ReportDocument, as_json: bool) -> None:
    if as_json:
        print(report.to_json(doc))
    else:
        print(report.render_text(doc), end="")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pluricot",
        description="Exact invariants of symmetric powers of surface cotangent bundles "
        "and generic-finiteness criteria for pluri-cotangent maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="Euler characteristic of S^n Omega_X from Chern numbers")
    p_chi.add_argument("--n", type=int, required=True, help="symmetric power, n >= 1")
    p_chi.add_argument("--c1sq", type=int, required=True, help="c1^2 = K^2 of the surface")
    p_chi.add_argument("--c2", type=int, required=True, help="topological Euler number c2")
    p_chi.add_argument("--json", action="store_true", help="machine-readable output")

    p_cri = sub.add_parser("criterion", help="generic-finiteness verdicts for a range of n")
    p_cri.add_argument("--c1sq", type=int, required=True)
    p_cri.add_argument("--c2", type=int, required=True)
    p_cri.add_argument("--n", type=str, required=True, help="single n or inclusive range A..B")
    p_cri.add_argument("--pg", type=int, default=None, help="geometric genus (optional)")
    p_cri.add_argument("--q", type=int, default=None, help="irregularity (optional)")
    p_cri.add_argument(
        "--gg-period",
        type=int,
        default=None,
        help="assert S^mOmega globally generated for this period m (not verified)",
    )
    p_cri.add_argument(
        "--h0-exact",
        type=str,
        default=None,
        help="exact h^0(S^nOmega) as an integer, or 'veronese' for (n+1)(n+2)/2",
    )
    p_cri.add_argument("--json", action="store_true")

    p_cat = sub.add_parser("catalog", help="reports for the built-in surface families")
    p_cat.add_argument(
        "family",
        choices=["abelian3fold", "abelian4fold", "product-quotient"],
        help="surface family",
    )
    p_cat.add_argument("--type", dest="ptype", type=str, default=None,
                       help="polarization type, e.g. 1,1,2 (abelian families)")
    p_cat.add_argument("--k", type=int, default=None, help="genus parameter (product-quotient)")
    p_cat.add_argument("--n", type=str, required=True, help="single n or inclusive range A..B")
    p_cat.add_argument("--json", action="store_true")

    p_geo = sub.add_parser("geography", help="scan a rectangle of the (c1^2, c2) plane to CSV")
    p_geo.add_argument("--c1sq", type=str, required=True, help="single value or range A..B")
    p_geo.add_argument("--c2", type=str, required=True, help="single value or range A..B")
    p_geo.add_argument("--out", type=str, required=True, help="output CSV path")
    p_geo.add_argument("--plot", type=str, default=None,
                       help="also render the scan to this image path")

    p_ver = sub.add_parser("verify", help="run the built-in oracle suite")
    p_ver.add_argument("--nmax", type=int, default=200,
                       help="upper limit for the coefficient-sum comparison (default 200)")
    p_ver.add_argument("--grid", type=str, default=None,
                       help="chi-identity surface grid as 'c1,c2;c1,c2;...'")

    return parser


def _cmd_chi(args: argparse.Namespace) -> int:
    surface = SurfaceInvariants(c1_sq=args.c1sq, c2=args.c2)
    value = chi_sym_cotangent(args.n, surface)
    doc = ReportDocument(
        input_echo={"n": args.n, "c1_sq": args.c1sq, "c2": args.c2},
        results=[ChiValue(n=args.n, surface=surface, chi=value)],
    )
    if not surface.noether_ok:
        doc.warnings.append(
            f"c1_sq + c2 = {args.c1sq + args.c2} is not divisible by 12: no smooth "
            "compact complex surface has these Chern numbers"
        )
    _emit(doc, args.json)
    return EXIT_OK


def _cmd_criterion(args: argparse.Namespace) -> int:
    surface = SurfaceInvariants(c1_sq=args.c1sq, c2=args.c2, pg=args.pg, q=args.q)
    surface.require_noether()
    n_lo, n_hi = _parse_span(args.n)
    if n_lo < 1:
        raise ValueError(f"n must be >= 1, got {n_lo}")

    doc = ReportDocument(
        input_echo={
            "c1_sq": args.c1sq,
            "c2": args.c2,
            "n": args.n,
            "pg": args.pg,
            "q": args.q,
            "gg_period": args.gg_period,
            "h0_exact": args.h0_exact,
        },
        warnings=[MODEL_WARNING],
    )
    if args.gg_period is not None:
        if args.gg_period < 1:
            raise ValueError("gg-period must be >= 1")
        doc.warnings.append(GG_WARNING)

    for n in range(n_lo, n_hi + 1):
        gg = args.gg_period is not None and n % args.gg_period == 0
        if args.h0_exact is None:
            h0: Optional[int] = None
        elif args.h0_exact == "veronese":
            h0 = criteria.veronese_bound(n)
        else:
            h0 = int(args.h0_exact)
        doc.results.append(criteria.classify(n, surface, gg, h0))

    if surface.segre > 0:
        doc.results.append(criteria.corollary_c_threshold(surface, m=args.gg_period or 1))
    else:
        doc.warnings.append(
            "second Segre number c1^2 - c2 is not positive: no symmetric power yields "
            "a generically finite map"
        )
    _emit(doc, args.json)
    return EXIT_OK


def _build_family(args: argparse.Namespace) -> catalog.FamilySurface:
    if args.family == "product-quotient":
        if args.k is None:
            raise ValueError("product-quotient needs --k")
        return catalog.product_quotient(args.k)
    if args.ptype is None:
        raise ValueError(f"{args.family} needs --type")
    if args.family == "abelian3fold":
        return catalog.abelian3fold_divisor(*_parse_type(args.ptype, 3))
    return catalog.abelian4fold_ci(*_parse_type(args.ptype, 4))


def _cmd_catalog(args: argparse.Namespace) -> int:
    member = _build_family(args)
    n_lo, n_hi = _parse_span(args.n)
    if n_lo < 1:
        raise ValueError(f"n must be >= 1, got {n_lo}")

    doc = ReportDocument(
        input_echo={"family": args.family, "type": args.ptype, "k": args.k, "n": args.n},
        results=[member],
    )
    for n in range(n_lo, n_hi + 1):
        h0 = member.h0_exact(n)
        if h0 is None:
            h0 = member.h0_lower(n)
        doc.results.append(
            criteria.classify(n, member.invariants, member.gg_asserted(n), h0)
        )
    if member.invariants.segre > 0:
        doc.results.append(
            criteria.corollary_c_threshold(member.invariants, m=member.gg_period)
        )
    else:
        doc.warnings.append(
            "c1^2 = c2 on this family: every pluri-cotangent image is the Veronese "
            "surface, so no n works"
        )
    _emit(doc, args.json)
    return EXIT_OK


def _cmd_geography(args: argparse.Namespace) -> int:
    c1_span = _parse_span(args.c1sq)
    c2_span = _parse_span(args.c2)
    max_cells = int(os.environ.get(MAX_CELLS_ENV, geography.DEFAULT_MAX_CELLS))
    cells = geography.scan(c1_span, c2_span, max_cells=max_cells)
    rows = geography.write_csv(cells, args.out)
    print(f"wrote {rows} rows to {args.out}")
    if args.plot is not None:
        from .plotting import render_geography  # deferred: pulls in matplotlib

        render_geography(cells, args.plot)
        print(f"rendered figure to {args.plot}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.nmax < 1:
        raise ValueError("nmax must be >= 1")
    grid = _parse_grid(args.grid) if args.grid else None
    results = selfcheck.run_all(nmax=args.nmax, grid=grid)
    failed = [result for result in results if not result.passed]
    for result in results:
        if result.passed:
            print(f"ok   {result.name}")
        else:
            print(f"FAIL {result.name}: {result.detail}")
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_FAILURE


_HANDLERS = {
    "chi": _cmd_chi,
    "criterion": _cmd_criterion,
    "catalog": _cmd_catalog,
    "geography": _cmd_geography,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the usage message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except (PluricotError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
