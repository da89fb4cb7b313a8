"""The acceptance suite: ten exact reproduction checks at desk scale.

Each criterion recomputes its claim from scratch through the public API
and reports pass/fail with the measured values.  Nothing here is allowed
to weaken a check to make it pass; a criterion that does not hold at
these sizes fails and says what it saw.

Levels: "ci" runs everything that finishes in minutes; "deep" adds the
exhaustive weight-5 absence scan (criterion 10c), which takes hours on
one core.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import codes, curve, geometry, weights

TOY_BUDGET = 10**7


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    elapsed_sec: float
    details: dict


class SuiteCache:
    """Lazily built shared state so criteria never rebuild heavy objects."""

    def __init__(self, modulus=None):
        self._modulus = modulus
        self._ctx: dict = {}
        self._code: dict = {}
        self._secants: dict = {}

    def ctx(self, ell: int):
        if ell not in self._ctx:
            self._ctx[ell] = curve.build_curve(ell, self._modulus)
        return self._ctx[ell]

    def code(self, ell: int, m: int):
        key = (ell, m)
        if key not in self._code:
            self._code[key] = codes.build_gk_code(self.ctx(ell), m)
        return self._code[key]

    def secant_census(self, ell: int):
        if ell not in self._secants:
            self._secants[ell] = geometry.secant_census(self.ctx(ell))
        return self._secants[ell]


def _c1_curve_census(cache: SuiteCache, level: str) -> dict:
    expect = {
        2: {"points": 225, "genus": 10, "o1": 9, "o2": 216},
        3: {"points": 6076, "genus": 99, "o1": 28, "o2": 6048},
    }
    details: dict = {}
    ok = True
    for ell, want in expect.items():
        ctx = cache.ctx(ell)
        g = curve.genus(ell)
        got = {
            "points": ctx.n_points,
            "genus": g,
            "o1": len(ctx.o1_indices),
            "o2": len(ctx.o2_indices),
        }
        maximal = ctx.n_points == ell**6 + 1 + 2 * g * ell**3
        formula = curve.rational_point_count(ell) == ctx.n_points
        details[f"ell{ell}"] = {**got, "maximal": maximal,
                                "count_formula": formula}
        ok = ok and got == want and maximal and formula
    return {"passed": ok, **details}


def _c2_divisors(cache: SuiteCache, level: str) -> dict:
    details: dict = {}
    ok = True
    for ell in (2, 3):
        ctx = cache.ctx(ell)
        dx = curve.divisor_zero_support(ctx, "x")
        dy = curve.divisor_zero_support(ctx, "y")
        dz = curve.divisor_zero_support(ctx, "z")
        o1_affine = {(p.x, p.y, p.z) for p in ctx.points[:-1] if p.orbit == "O1"}
        c = {
            "x_single_origin": dx.support == ((0, 0, 0),),
            "y_count": len(dy.support) == ell,
            "y_shape": all(y == 0 and z == 0 and
                           ctx.field.add(ctx.field.pow(x, ell), x) == 0
                           for x, y, z in dy.support),
            "z_count": len(dz.support) == ell**3,
            "z_is_affine_o1": set(dz.support) == o1_affine,
            "z_pole_order": dz.pole_order_infinity == ell**3,
            "balance": dz.zero_degree == dz.pole_order_infinity,
        }
        details[f"ell{ell}"] = c
        ok = ok and all(c.values())
    return {"passed": ok, **details}


def _c3_secants(cache: SuiteCache, level: str) -> dict:
    expect = {2: (3, 72), 3: (7, 864)}
    details: dict = {}
    ok = True
    for ell, (mx, full) in expect.items():
        cen = cache.secant_census(ell)
        c = cen.checks
        got = {
            "max": cen.max_secant_size,
            "full": len(cen.full_secants),
            "z_parallel": c["full_z_parallel"],
            "o2_only": c["full_o2_only"],
            "single_cover": c["o2_single_cover"],
            "o1_line_bound": c["o1_line_bound"],
            "histogram": dict(cen.histogram),
        }
        details[f"ell{ell}"] = got
        ok = ok and (got["max"], got["full"]) == (mx, full)
        ok = ok and got["z_parallel"] and got["o2_only"] and got["single_cover"]
        ok = ok and got["o1_line_bound"] <= ell + 1
        if ell >= 3:
            ok = ok and c["max_class_is_vertical"]
    return {"passed": ok, **details}


def _c4_conics(cache: SuiteCache, level: str) -> dict:
    ctx = cache.ctx(2)
    rep = geometry.conic_census(ctx)
    wit = rep.witness
    checks = {
        "exhaustive": rep.exhaustive,
        "max_conic_points": rep.max_conic_points,
        "bound_holds": rep.max_conic_points <= 6,
        "witness_incidence": wit["incidence"],
        "witness_achieves_6": wit["incidence"] == 6,
        "witness_degenerate": wit["degenerate"],
        "common_point": list(wit["common_point"]),
        "common_point_off_curve": not wit["common_point_on_curve"],
        "planes_scanned": rep.planes_scanned,
        "heavy_planes": rep.heavy_planes,
        "conics_tested": rep.conics_tested,
    }
    ok = (checks["exhaustive"] and checks["bound_holds"]
          and checks["witness_achieves_6"] and checks["witness_degenerate"]
          and checks["common_point_off_curve"])
    return {"passed": ok, **checks}


def _c5_cubic(cache: SuiteCache, level: str) -> dict:
    ctx3 = cache.ctx(3)
    y_bar = ctx3.vertical_secants()[0][1]
    cfg = geometry.cubic_configuration(y_bar, ctx3)
    f = ctx3.field
    plane = cfg["plane"]
    on_plane_ok = all(
        geometry.on_plane(f, (p.x, p.y, p.z, 1), plane) for p in cfg["points"]
    )
    grid_ok = True
    for ln in cfg["cover_lines"]:
        hits = [p for p in cfg["points"]
                if geometry.on_line(f, (p.x, p.y, p.z, 1), ln)]
        grid_ok = grid_ok and len(hits) == 3
    c3 = {
        "points": len(cfg["points"]),
        "secants": len(cfg["secants"]),
        "cover_lines": len(cfg["cover_lines"]),
        "coplanar": on_plane_ok,
        "cover_grid": grid_ok,
    }
    try:
        geometry.cubic_configuration(2, cache.ctx(2))
        refusal = None
    except Exception as exc:  # noqa: BLE001  code check below
        refusal = getattr(exc, "code", None)
    ok = (c3["points"] == 21 and c3["secants"] == 3
          and c3["cover_lines"] == 7 and on_plane_ok and grid_ok
          and refusal == "NEED_ELL_GE_3")
    return {"passed": ok, "ell3": c3, "ell2_refusal": refusal}


def _c6_distance(cache: SuiteCache, level: str) -> dict:
    cen3 = cache.secant_census(3)
    expect_exact = {2: 4, 3: 5, 4: 6, 5: 7, 6: 14, 7: 21}
    details: dict = {}
    ok = True
    for m, d in expect_exact.items():
        cl = codes.structural_min_distance(3, m)
        details[f"m{m}"] = {"d": cl.d, "exact": cl.exact, "case": cl.case}
        ok = ok and cl.d == d and cl.exact
    cl8 = codes.structural_min_distance(3, 8)
    details["m8"] = {"d": cl8.d, "exact": cl8.exact, "case": cl8.case}
    ok = ok and cl8.d == 25 and not cl8.exact
    for m in (9, 10, 12):
        cl = codes.structural_min_distance(3, m)
        ds = codes.designed_distance(3, m)
        details[f"m{m}"] = {"d": cl.d, "exact": cl.exact, "case": cl.case}
        ok = ok and cl.d == ds and not cl.exact and cl.case == "designed"
    scan = codes.crossover_scan(3)
    details["crossover"] = scan
    ok = ok and scan["crossover_m"] == 8 and scan["agrees"]
    # geometric cross-checks: the witnesses the rules cite exist at l=3
    geo = {
        "secant_reaches_m_plus_2": cen3.max_secant_size >= max(m + 2 for m in range(2, 6)),
        "conic_reaches_14": 2 * cen3.max_secant_size == 14,
        "cubic_reaches_21": 3 * cen3.max_secant_size == 21,
    }
    details["geometric"] = geo
    ok = ok and all(geo.values())
    return {"passed": ok, **details}


def _c7_counts(cache: SuiteCache, level: str) -> dict:
    expect = {(2, 4): 22014720, (3, 5): 13208832, (4, 6): 4402944}
    details: dict = {}
    ok = True
    for (m, d), want in expect.items():
        code = cache.code(3, m)
        cf = weights.closed_form_Ad(3, d)
        rep = weights.constructive_count(code, d)
        census = weights.secant_subset_census(code, d)
        uniform = set(census["histogram"]) == {code.field.order - 1}
        got = {
            "closed_form": str(cf),
            "constructive": str(rep.A_w),
            "exhaustive": rep.exhaustive,
            "subsets": census["subsets"],
            "per_subset_uniform_q_minus_1": uniform,
        }
        details[f"m{m}_d{d}"] = got
        ok = (ok and cf == want and rep.A_w == want and rep.exhaustive
              and uniform)
    return {"passed": ok, **details}


def _c8_toy_oracles(cache: SuiteCache, level: str) -> dict:
    from .field import make_field

    f4 = make_field(2, 2)
    pts = codes.plane_curve_points(f4, 2)
    toy = codes.build_code(f4, pts, [(0, 0), (1, 0), (0, 1)])
    dual = weights.dual_enumeration_Aw(toy, budget=TOY_BUDGET)
    details: dict = {"n": toy.n, "dual_dimension": toy.dual_dimension}
    ok = toy.n == 8
    for w in range(0, 9):
        bf = weights.brute_force_Aw(toy, w, budget=TOY_BUDGET).A_w
        jw = weights.count_Jw_solutions(toy, w, budget=TOY_BUDGET)
        agree = bf == dual.get(w, 0)
        jw_ok = (jw == 0) if w == 0 else (jw == bf * _fact(w))
        details[f"w{w}"] = {"brute": str(bf), "dual": str(dual.get(w, 0)),
                            "jw": str(jw), "agree": agree, "jw_ok": jw_ok}
        ok = ok and agree and jw_ok
    return {"passed": ok, **details}


def _fact(w: int) -> int:
    out = 1
    for k in range(2, w + 1):
        out *= k
    return out


def _c9_exclusion(cache: SuiteCache, level: str) -> dict:
    trials = 10**6
    details: dict = {"trials_per_m": trials}
    ok = True
    ctx = cache.ctx(3)
    for m in (2, 3, 4):
        code = cache.code(3, m)
        d = codes.structural_min_distance(3, m).d
        out = weights.mixed_support_sample(ctx, code, d, trials=trials,
                                           seed=90000 + m)
        details[f"m{m}"] = {"d": d, "violations": out["violations"]}
        ok = ok and out["violations"] == 0
    return {"passed": ok, **details}


def _c10_witnesses(cache: SuiteCache, level: str) -> dict:
    ctx = cache.ctx(2)
    code = cache.code(2, 2)
    wit = geometry.build_reducible_conic(ctx)
    support = sorted(wit["points"])
    a_ok = False
    a_count = None
    if len(support) == 6 and all(i < code.n for i in support):
        sw = weights.full_support_kernel_count(code, support)
        a_count = sw.full_support_count
        a_ok = a_count > 0
    sr = weights.low_weight_search(code, 3, strategy="exhaustive")
    b_ok = ({1, 2, 3} <= set(sr.absence_certified)
            and all(sr.counts.get(w, 0) == 0 for w in (1, 2, 3)))
    details = {
        "a_support": support,
        "a_full_support_kernel_vectors": a_count,
        "a_holds": a_ok,
        "b_counts": {str(w): str(sr.counts.get(w, 0)) for w in (1, 2, 3)},
        "b_absence_certified": sorted(sr.absence_certified),
        "b_holds": b_ok,
    }
    ok = a_ok and b_ok
    if level == "deep":
        deep = weights.low_weight_search(code, 5, strategy="exhaustive")
        c_ok = all(deep.counts.get(w, 0) == 0 for w in (4, 5))
        details["c_counts"] = {str(w): str(deep.counts.get(w, 0))
                               for w in range(1, 6)}
        details["c_absence_certified"] = sorted(deep.absence_certified)
        details["c_covered"] = deep.covered
        details["c_holds"] = c_ok
        details["c_distance_6_established"] = c_ok
        ok = ok and c_ok
    else:
        details["c_holds"] = None
        details["c_note"] = "weight <= 5 exhaustive scan runs at --level deep"
    return {"passed": ok, **details}


CRITERIA = (
    (1, "curve point and orbit census", _c1_curve_census),
    (2, "coordinate divisor zero-supports", _c2_divisors),
    (3, "secant census and full-secant family", _c3_secants),
    (4, "exhaustive conic bound at l=2", _c4_conics),
    (5, "three-secant cubic configuration", _c5_cubic),
    (6, "distance classification and crossover", _c6_distance),
    (7, "constructive count equals closed form", _c7_counts),
    (8, "toy-code oracle equivalence", _c8_toy_oracles),
    (9, "random mixed-support exclusion", _c9_exclusion),
    (10, "existence witnesses at l=2", _c10_witnesses),
)


def run_criterion(number: int, cache: SuiteCache, level: str = "ci"):
    for num, title, fn in CRITERIA:
        if num == number:
            t0 = time.time()
            out = fn(cache, level)
            passed = bool(out.pop("passed"))
            return CriterionResult(num, title, passed,
                                   round(time.time() - t0, 2), out)
    raise ValueError(f"no criterion {number}")


def run_suite(level: str = "ci", numbers=None, cache: SuiteCache | None = None):
    cache = cache or SuiteCache()
    picked = numbers or [num for num, _, _ in CRITERIA]
    return [run_criterion(num, cache, level) for num in picked]


def format_lines(results) -> list[str]:
    lines = []
    for r in results:
        word = "PASS" if r.passed else "FAIL"
        lines.append(f"{word} criterion {r.number}: {r.title} "
                     f"[{r.elapsed_sec}s]")
    total = sum(1 for r in results if r.passed)
    lines.append(f"{total}/{len(results)} criteria passed")
    return lines
