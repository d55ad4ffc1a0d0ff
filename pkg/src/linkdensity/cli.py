"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 search gave up within its
parameter caps.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
import csv
import io
import json
import os
import sys

from .determinant import density_from_det, det_density_limit, determinant, family_determinant
from .rational import Family, FamilyParams, TwistVector, component_count, make_family
from .report import build_report, dumps, fmt_float
from .search import SearchStatus, det_density_search, vol_density_search
from .verify import SUITES, run_suite
from .volume import CONSTANTS, volume_window

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SEARCH_FAILED = 3

FAMILY_COLUMNS = [
    "n", "m", "crossings", "det", "det_density",
    "vol_lo", "vol_hi", "vol_density_lo", "vol_density_hi", "is_knot",
]


class UsageError(Exception):
    pass


def worker_count(flag=None):
    if flag is not None:
        return max(1, flag)
    raw = os.environ.get("LINKDENSITY_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"LINKDENSITY_THREADS must be an integer, got {raw!r}") from None


def _parse_vector(text):
    try:
        return TwistVector.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_info(args, out):
    tv = _parse_vector(args.twist_vector)
    out.write(dumps(build_report(tv).to_dict()))
    return EXIT_OK


def family_row(params):
    tv = make_family(params)
    det = family_determinant(params)
    window = volume_window(tv)
    return [
        str(params.n),
        str(params.extra),
        str(params.crossings),
        str(det),
        fmt_float(density_from_det(det, params.crossings)),
        fmt_float(window.lower),
        fmt_float(window.upper),
        fmt_float(window.density_lower),
        fmt_float(window.density_upper),
        "true" if component_count(tv) == 1 else "false",
    ]


def family_csv(family, n_from, n_to, m=None, workers=1):
    family = Family(family)
    if n_from < 1:
        raise UsageError(f"--n-from must be >= 1, got {n_from}")
    if family is Family.RNM:
        if m is None or m < 2 or m % 2:
            raise UsageError(f"family Rnm needs an even --m >= 2, got {m}")
    elif m not in (None, 0):
        raise UsageError("family Rn takes no --m")
    params = [FamilyParams(family, n, m) for n in range(n_from, n_to + 1)]
    if workers > 1 and len(params) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(family_row, params))
    else:
        rows = [family_row(p) for p in params]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FAMILY_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_family(args, out):
    text = family_csv(args.family, args.n_from, args.n_to, args.m,
                      workers=worker_count(args.workers))
    out.write(text)
    return EXIT_OK


def search_document(result):
    params = result.params
    tv = make_family(params)
    doc = {
        "invariant": result.invariant,
        "status": result.status.value,
        "family": params.family.value,
        "n": params.n,
        "m": params.extra,
        "twist_vector": str(tv) if params.n <= 64 else None,
        "crossings": result.crossings,
        "target": result.target,
        "epsilon": result.epsilon,
        "achieved_density": result.achieved_density,
        "density_interval": list(result.density_interval),
        "certificate": result.certificate,
        "is_knot": result.is_knot,
    }
    # independent recomputation from the diagram
    components = component_count(tv)
    if result.invariant == "det":
        det = determinant(tv)
        density = density_from_det(det, tv.crossings)
        doc["det"] = str(result.det)
        doc["verification"] = {
            "det": str(det),
            "det_matches": det == result.det,
            "density": density,
            "within_epsilon": abs(density - result.target) < result.epsilon,
            "components": components,
        }
    else:
        window = volume_window(tv)
        doc["verification"] = {
            "density_lower": window.density_lower,
            "density_upper": window.density_upper,
            "certified": window.certified,
            "window_inside": (window.certified
                              and result.target - result.epsilon < window.density_lower
                              and window.density_upper < result.target + result.epsilon),
            "components": components,
        }
    return doc


def cmd_search(args, out):
    if not args.eps > 0:
        raise UsageError(f"--eps must be positive, got {args.eps}")
    if args.invariant == "det":
        limit = det_density_limit()
        if not 0.0 <= args.target <= limit:
            raise UsageError(
                f"target {args.target} outside the admissible interval "
                f"[0, 2 pi log phi] = [0, {limit:.6f}]")
        result = det_density_search(args.target, args.eps, knots_only=args.knots_only)
    else:
        limit = CONSTANTS.two_v_tet
        if not 0.0 <= args.target <= limit:
            raise UsageError(
                f"target {args.target} outside the admissible interval "
                f"[0, 2 v_tet] = [0, {limit:.6f}]")
        result = vol_density_search(args.target, args.eps, knots_only=args.knots_only)
    out.write(dumps(search_document(result)))
    if result.status is SearchStatus.FAILED:
        return EXIT_SEARCH_FAILED
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.suite, max_n=args.max_n)
    out.write(f"{res.name}: {res.passed} passed, {res.failed} failed\n")
    for what in res.failures:
        out.write(f"  FAIL {what}\n")
    return EXIT_OK if res.ok else 1


def cmd_constants(args, out):
    doc = {
        "v_tet": round(CONSTANTS.v_tet, 12),
        "v_oct": round(CONSTANTS.v_oct, 12),
        "two_v_tet": round(CONSTANTS.two_v_tet, 12),
        "det_limit": round(det_density_limit(), 12),
    }
    # fixed decimals here, not the usual significant-digit rounding
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="linkdensity",
                     description="Determinant and volume densities of rational links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="full report for one twist vector")
    p.add_argument("twist_vector", help="e.g. '[4,1,1,2]'")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("family", help="CSV sweep over R_n or R_n^m")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--out", choices=["csv"], default="csv")
    p.add_argument("--workers", type=int, help="overrides LINKDENSITY_THREADS")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="find R_n^m with a density near a target")
    p.add_argument("--invariant", choices=["det", "vol"], required=True)
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--knots-only", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", required=True, help=", ".join(SUITES))
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", help="v_tet, v_oct and the density limits")
    p.set_defaults(func=cmd_constants)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"linkdensity: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
