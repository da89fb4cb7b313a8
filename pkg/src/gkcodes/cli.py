"""Command-line front end.

Subcommand groups mirror the library: curve, geometry, code, weights,
accept.  Every run emits one deterministic report (JSON by default, CSV
on request) to stdout or --out, and can render figures next to it.

Exit codes: 0 success, 2 a reproduced claim failed or the config was
rejected, 3 a work budget ran out (the partial report is still written).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, acceptance, codes, curve, geometry, reports, weights
from .errors import BudgetExceeded, GKError

EXIT_OK = 0
EXIT_CLAIM = 2
EXIT_BUDGET = 3


def _default_workers() -> int:
    env = os.environ.get("GKCODES_WORKERS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _add_common(p: argparse.ArgumentParser, need_m: bool = False):
    p.add_argument("--ell", type=int, required=True,
                   help="base size l; the curve lives over F_{l^6}")
    p.add_argument("--modulus", type=str, default=None,
                   help="comma-separated F_p modulus coefficients, "
                        "constant term first")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=str, default=None,
                   help="write the report here instead of stdout only")
    p.add_argument("--figures", type=str, default=None,
                   help="directory for rendered figures")
    p.add_argument("--workers", type=int, default=_default_workers())
    if need_m:
        p.add_argument("--m", type=int, required=True,
                       help="multiplier of the one-point divisor")


def _parse_modulus(text):
    if text is None:
        return None
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise GKError("CONFIG_INVALID", f"bad modulus {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gkcodes",
        description="censuses, geometry, and dual code weights of the "
                    "maximal curve tower at l = 2, 3")
    top.add_argument("--version", action="version", version=__version__)
    groups = top.add_subparsers(dest="group", required=True)

    g_curve = groups.add_parser("curve", help="point census and divisors")
    sub = g_curve.add_subparsers(dest="sub", required=True)
    _add_common(sub.add_parser("census", help="points, orbits, maximality"))
    p_div = sub.add_parser("divisors", help="coordinate zero-supports")
    _add_common(p_div)
    p_div.add_argument("--fn", choices=("x", "y", "z"), default=None,
                       help="one coordinate only (default: all three)")

    g_geom = groups.add_parser("geometry", help="incidence censuses")
    sub = g_geom.add_subparsers(dest="sub", required=True)
    _add_common(sub.add_parser("secants", help="line-curve census"))
    p_con = sub.add_parser("conics", help="plane-driven conic census")
    _add_common(p_con)
    p_con.add_argument("--budget", type=int, default=None,
                       help="cap on 5-point systems solved")
    p_cub = sub.add_parser("cubic", help="three-secant configuration")
    _add_common(p_cub)
    p_cub.add_argument("--y-bar", type=int, default=None,
                       help="field element for the section plane "
                            "(default: first full-secant y)")

    g_code = groups.add_parser("code", help="dual evaluation codes")
    sub = g_code.add_subparsers(dest="sub", required=True)
    _add_common(sub.add_parser("build", help="matrix shape and rank"),
                need_m=True)
    p_dist = sub.add_parser("distance", help="distance classification")
    _add_common(p_dist, need_m=True)

    g_w = groups.add_parser("weights", help="codeword counts")
    sub = g_w.add_subparsers(dest="sub", required=True)
    p_cf = sub.add_parser("closed-form", help="secant-supported count")
    _add_common(p_cf)
    p_cf.add_argument("--d", type=int, required=True)
    p_cc = sub.add_parser("constructive", help="count by direct construction")
    _add_common(p_cc, need_m=True)
    p_cc.add_argument("--d", type=int, default=None,
                      help="weight to count (default: classified distance)")
    p_br = sub.add_parser("brute", help="exhaustive support scan")
    _add_common(p_br, need_m=True)
    p_br.add_argument("--w", type=int, required=True)
    p_br.add_argument("--budget", type=int, default=None)
    p_se = sub.add_parser("search", help="low-weight witness search")
    _add_common(p_se, need_m=True)
    p_se.add_argument("--w", type=int, required=True, help="max weight")
    p_se.add_argument("--strategy", choices=("exhaustive", "meet_in_middle"),
                      default="exhaustive")
    p_se.add_argument("--budget", type=int, default=None)

    p_acc = groups.add_parser("accept", help="run the acceptance suite")
    p_acc.add_argument("--level", choices=("ci", "deep"), default="ci")
    p_acc.add_argument("--only", type=int, action="append", default=None,
                       help="run one criterion (repeatable)")
    p_acc.add_argument("--format", choices=("json", "csv"), default="json")
    p_acc.add_argument("--out", type=str, default=None)
    return top


def _emit(kind, config, body, args) -> dict:
    rep = reports.build_report(kind, config, body)
    text = reports.write_report(rep, args.out, args.format)
    if args.out is None:
        sys.stdout.write(text)
    else:
        sys.stdout.write(f"report written to {args.out}\n")
    figdir = getattr(args, "figures", None)
    if figdir:
        from . import plots  # deferred: pulls in matplotlib

        paths = plots.render_for(kind, body, figdir, config.get("ell", 0))
        for p in paths:
            sys.stdout.write(f"figure written to {p}\n")
    return rep


def _ctx(args):
    return curve.build_curve(args.ell, _parse_modulus(args.modulus))


def _run_curve_census(args) -> int:
    ctx = _ctx(args)
    g = curve.genus(args.ell)
    body = {
        "n_points": ctx.n_points,
        "genus": g,
        "o1": len(ctx.o1_indices),
        "o2": len(ctx.o2_indices),
        "maximality": ctx.n_points == args.ell**6 + 1 + 2 * g * args.ell**3,
    }
    _emit("curve-census", {"ell": args.ell}, body, args)
    return EXIT_OK if body["maximality"] else EXIT_CLAIM


def _run_curve_divisors(args) -> int:
    ctx = _ctx(args)
    fns = (args.fn,) if args.fn else ("x", "y", "z")
    body = {}
    for fn in fns:
        d = curve.divisor_zero_support(ctx, fn)
        body[fn] = {
            "support_size": len(d.support),
            "support": [list(pt) for pt in d.support[:16]],
            "support_truncated": len(d.support) > 16,
            "multiplicity": d.multiplicity,
            "zero_degree": d.zero_degree,
            "pole_order_infinity": d.pole_order_infinity,
            "notes": list(d.notes),
        }
    _emit("curve-divisors", {"ell": args.ell, "fn": args.fn}, body, args)
    return EXIT_OK


def _run_geometry_secants(args) -> int:
    ctx = _ctx(args)
    cen = geometry.secant_census(ctx)
    body = {
        "max_secant_size": cen.max_secant_size,
        "full_secant_count": len(cen.full_secants),
        "histogram": {str(k): v for k, v in sorted(cen.histogram.items())},
        "checks": cen.checks,
    }
    _emit("secant-census", {"ell": args.ell}, body, args)
    ok = all(v is not False for v in cen.checks.values())
    ok = ok and cen.checks["o1_line_bound"] <= args.ell + 1
    return EXIT_OK if ok else EXIT_CLAIM


def _conic_body(rep) -> dict:
    body = {
        "max_conic_points": rep.max_conic_points,
        "max_irreducible": rep.max_irreducible,
        "max_degenerate": rep.max_degenerate,
        "planes_scanned": rep.planes_scanned,
        "heavy_planes": rep.heavy_planes,
        "conics_tested": rep.conics_tested,
        "exhaustive": rep.exhaustive,
    }
    if rep.witness:
        w = rep.witness
        body["witness"] = {
            "plane": list(w["plane"].coeffs),
            "form": list(w["form"]),
            "incidence": w["incidence"],
            "common_point": list(w["common_point"]),
            "common_point_on_curve": w["common_point_on_curve"],
            "degenerate": w["degenerate"],
        }
    return body


def _run_geometry_conics(args) -> int:
    ctx = _ctx(args)
    try:
        rep = geometry.conic_census(ctx, budget=args.budget)
    except BudgetExceeded as exc:
        body = _conic_body(exc.partial["report"])
        body["budget_exhausted"] = True
        _emit("conic-census", {"ell": args.ell, "budget": args.budget},
              body, args)
        return EXIT_BUDGET
    body = _conic_body(rep)
    bound = 2 * (args.ell**2 - args.ell + 1)
    ok = rep.exhaustive and rep.max_conic_points <= bound
    _emit("conic-census", {"ell": args.ell, "budget": args.budget}, body, args)
    return EXIT_OK if ok else EXIT_CLAIM


def _run_geometry_cubic(args) -> int:
    ctx = _ctx(args)
    y_bar = args.y_bar
    if y_bar is None:
        verts = ctx.vertical_secants()
        if not verts:
            raise GKError("CONFIG_INVALID", "no full secants at this size")
        y_bar = verts[0][1]
    cfg = geometry.cubic_configuration(y_bar, ctx)
    body = {
        "y_bar": y_bar,
        "xs": list(cfg["xs"]),
        "z_fiber_size": len(cfg["zs"]),
        "plane": list(cfg["plane"].coeffs),
        "points": len(cfg["points"]),
        "secants": len(cfg["secants"]),
        "cover_lines": len(cfg["cover_lines"]),
    }
    _emit("cubic-configuration", {"ell": args.ell, "y_bar": y_bar}, body, args)
    ok = body["points"] == 21 and body["cover_lines"] == 7
    return EXIT_OK if ok else EXIT_CLAIM


def _run_code_build(args) -> int:
    ctx = _ctx(args)
    code = codes.build_gk_code(ctx, args.m)
    body = {
        "n": code.n,
        "rows": code.r,
        "rank": code.rank,
        "dual_dimension": code.dual_dimension,
        "designed_distance": codes.designed_distance(args.ell, args.m),
    }
    _emit("code-build", {"ell": args.ell, "m": args.m}, body, args)
    return EXIT_OK


def _run_code_distance(args) -> int:
    cl = codes.structural_min_distance(args.ell, args.m)
    scan = codes.crossover_scan(args.ell)
    body = {
        "case": cl.case,
        "d": cl.d,
        "exact": cl.exact,
        "geometric_fact": cl.geometric_fact,
        "d_star": cl.d_star,
        "d_star_vacuous": cl.d_star_vacuous,
        "witness_constructible": cl.witness_constructible,
        "crossover": scan,
    }
    _emit("code-distance", {"ell": args.ell, "m": args.m}, body, args)
    return EXIT_OK


def _run_weights_closed_form(args) -> int:
    val = weights.closed_form_Ad(args.ell, args.d)
    lb = weights.lower_bound_Ad(args.ell, args.d)
    body = {
        "d": args.d,
        "A_d": reports.dec(val),
        "lower_bound": reports.dec(lb.value),
        "lower_bound_in_open_range": lb.in_open_range,
        "m_implied": lb.m_implied,
    }
    _emit("weights-closed-form", {"ell": args.ell, "d": args.d}, body, args)
    return EXIT_OK


def _run_weights_constructive(args) -> int:
    ctx = _ctx(args)
    code = codes.build_gk_code(ctx, args.m)
    d = args.d if args.d is not None else codes.structural_min_distance(
        args.ell, args.m).d
    rep = weights.constructive_count(code, d)
    cf = weights.closed_form_Ad(args.ell, d)
    body = {
        "d": d,
        "A_d_constructive": reports.dec(rep.A_w),
        "A_d_closed_form": reports.dec(cf),
        "agree": rep.A_w == cf,
        "exhaustive": rep.exhaustive,
    }
    _emit("weights-constructive", {"ell": args.ell, "m": args.m, "d": d},
          body, args)
    return EXIT_OK if body["agree"] else EXIT_CLAIM


def _run_weights_brute(args) -> int:
    ctx = _ctx(args)
    code = codes.build_gk_code(ctx, args.m)
    try:
        rep = weights.brute_force_Aw(code, args.w, budget=args.budget,
                                     workers=args.workers)
    except BudgetExceeded as exc:
        body = {"w": args.w, "budget_exhausted": True,
                "partial": {k: str(v) for k, v in (exc.partial or {}).items()}}
        _emit("weight-brute", {"ell": args.ell, "m": args.m, "w": args.w},
              body, args)
        return EXIT_BUDGET
    body = {"w": args.w, "A_w": reports.dec(rep.A_w),
            "counts": {str(args.w): reports.dec(rep.A_w)},
            "exhaustive": rep.exhaustive}
    _emit("weight-brute", {"ell": args.ell, "m": args.m, "w": args.w},
          body, args)
    return EXIT_OK


def _run_weights_search(args) -> int:
    ctx = _ctx(args)
    code = codes.build_gk_code(ctx, args.m)
    try:
        sr = weights.low_weight_search(code, args.w, strategy=args.strategy,
                                       budget=args.budget,
                                       workers=args.workers)
    except BudgetExceeded as exc:
        wits = (exc.partial or {}).get("witnesses", [])
        body = {"w_max": args.w, "budget_exhausted": True,
                "witnesses_found": len(wits)}
        _emit("weight-search", {"ell": args.ell, "m": args.m, "w": args.w,
                                "strategy": args.strategy}, body, args)
        return EXIT_BUDGET
    body = {
        "w_max": sr.w_max,
        "strategy": sr.strategy,
        "counts": {str(w): reports.dec(c) for w, c in sorted(sr.counts.items())},
        "absence_certified": sr.absence_certified,
        "covered": sr.covered,
        "witnesses": [
            {
                "support": list(w.support),
                "kernel_dim": w.kernel_dim,
                "full_support_count": reports.dec(w.full_support_count),
                "vector": list(w.sample_vector) if w.sample_vector else None,
            }
            for w in sr.witnesses[:32]
        ],
    }
    _emit("weight-search", {"ell": args.ell, "m": args.m, "w": args.w,
                            "strategy": args.strategy}, body, args)
    return EXIT_OK


def _run_accept(args) -> int:
    results = acceptance.run_suite(args.level, numbers=args.only)
    for line in acceptance.format_lines(results):
        sys.stdout.write(line + "\n")
    body = {
        "level": args.level,
        "results": [
            {"number": r.number, "title": r.title, "passed": r.passed,
             "elapsed_sec": str(r.elapsed_sec), "details": _strfy(r.details)}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    rep = reports.build_report("acceptance", {"level": args.level}, body)
    if args.out:
        reports.write_report(rep, args.out, args.format)
        sys.stdout.write(f"report written to {args.out}\n")
    return EXIT_OK if body["all_passed"] else EXIT_CLAIM


def _strfy(value):
    """Reports carry no floats; stringify anything numeric but fragile."""
    if isinstance(value, dict):
        return {k: _strfy(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_strfy(v) for v in value]
    if isinstance(value, float):
        return str(value)
    return value


_DISPATCH = {
    ("curve", "census"): _run_curve_census,
    ("curve", "divisors"): _run_curve_divisors,
    ("geometry", "secants"): _run_geometry_secants,
    ("geometry", "conics"): _run_geometry_conics,
    ("geometry", "cubic"): _run_geometry_cubic,
    ("code", "build"): _run_code_build,
    ("code", "distance"): _run_code_distance,
    ("weights", "closed-form"): _run_weights_closed_form,
    ("weights", "constructive"): _run_weights_constructive,
    ("weights", "brute"): _run_weights_brute,
    ("weights", "search"): _run_weights_search,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.group == "accept":
        handler = _run_accept
    else:
        handler = _DISPATCH[(args.group, args.sub)]
    try:
        return handler(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except GKError as exc:
        sys.stderr.write(f"error [{exc.code}]: {exc.message}\n")
        return EXIT_CLAIM


if __name__ == "__main__":
    sys.exit(main())
