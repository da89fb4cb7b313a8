"""Counting low-weight dual codewords, four independent ways.

A weight-w dual codeword is a vector in the kernel of the evaluation matrix
whose support has size exactly w.  The module counts them by:

  * a closed form over full-secant supports,
  * constructive enumeration of secant subsets (kernel counted per subset),
  * exhaustive support scans with incremental elimination,
  * full enumeration of the dual code on small instances.

Absence claims are made only when a search provably covered its whole
space; budget exhaustion raises instead of degrading to a guess.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import GKError, BudgetExceeded
from .field import Field
from . import linalg
from .codes import EvaluationCode
from .curve import CurveContext

MAX_SUPPORT = 16  # inclusion-exclusion walks 2^|support| subsets
_WITNESS_CAP = 128  # per weight, in search results; counts stay exact


@dataclass(frozen=True)
class SupportWitness:
    """Kernel data of one column-support.

    ``full_support_count`` is the number of kernel vectors of the column
    submatrix with every coordinate nonzero; each such vector embeds to a
    dual codeword supported exactly on ``support``.  ``sample_vector``
    holds support-local coefficients of one of them, or None.
    """

    support: tuple[int, ...]
    kernel_dim: int
    full_support_count: int
    sample_vector: tuple[int, ...] | None


@dataclass(frozen=True)
class WeightReport:
    w: int
    A_w: int
    method: str  # closed_form | constructive | brute_force | dual_enumeration
    exhaustive: bool


@dataclass(frozen=True)
class BoundReport:
    """Closed-form value labeled as a lower bound, with its domain flag."""

    ell: int
    d: int
    m_implied: int
    value: int
    in_open_range: bool


@dataclass(frozen=True)
class ExclusionCertificate:
    """Outcome of the three-step Vandermonde exclusion test.

    ``excluded`` True means the support provably carries no full-support
    kernel vector, so no dual codeword lives exactly on it.
    """

    support: tuple[int, ...]
    excluded: bool
    reason: str
    alpha: int
    min_group: int
    max_group: int


@dataclass
class SearchResult:
    w_max: int
    strategy: str
    witnesses: list
    counts: dict
    absence_certified: list
    covered: bool


def embed_support_vector(n: int, support, coeffs) -> list[int]:
    """Expand support-local coefficients to a length-n vector."""
    if len(support) != len(coeffs):
        raise GKError("LENGTH_MISMATCH",
                      f"support has {len(support)} indices, vector {len(coeffs)}")
    out = [0] * n
    for i, c in zip(support, coeffs):
        out[i] = c
    return out


# ---------------------------------------------------------------------------
# kernel counting on a fixed support


def _subset_rank(rows: list, col_sel: tuple, tables) -> int:
    """Rank of the selected columns of a small row-list matrix."""
    addf, subf, mulf, invf, _ = tables
    work = [[r[c] for c in col_sel] for r in rows]
    rank = 0
    ncols = len(col_sel)
    for c in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][c]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = invf[work[rank][c]]
        work[rank] = [mulf[inv][v] for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                f = work[r][c]
                row = work[rank]
                work[r] = [subf[a][mulf[f][b]] for a, b in zip(work[r], row)]
        rank += 1
        if rank == len(work):
            break
    return rank


def _fsk_count(fieldobj: Field, H: np.ndarray, support) -> SupportWitness:
    sup = tuple(int(i) for i in support)
    s = len(sup)
    if s < 1 or s > MAX_SUPPORT:
        raise GKError("SUPPORT_TOO_LARGE",
                      f"support size {s} outside [1, {MAX_SUPPORT}]")
    if len(set(sup)) != s:
        raise GKError("DUPLICATE_POINTS", "support indices repeat")
    n = H.shape[1]
    if min(sup) < 0 or max(sup) >= n:
        raise GKError("CONFIG_INVALID", f"support index outside [0, {n})")
    sub = H[:, list(sup)]
    R, pivots = linalg.rref(fieldobj, sub)
    rho = len(pivots)
    if rho == s:
        return SupportWitness(sup, 0, 0, None)
    kernel_dim = s - rho
    # Row reduction preserves every column-subset's rank, so the nonzero
    # rows of R are a rho x s compression sufficient for all 2^s subsets.
    rows = [list(map(int, R[i])) for i in range(rho)]
    tables = fieldobj.scalar_tables()
    q = fieldobj.order
    total = 0
    cols = tuple(range(s))
    for keep in range(s + 1):
        sign = 1 if (s - keep) % 2 == 0 else -1
        for sel in itertools.combinations(cols, keep):
            r = _subset_rank(rows, sel, tables) if sel else 0
            total += sign * q ** (keep - r)
    sample = None
    if total > 0:
        sample = _full_support_sample(fieldobj, sub)
    return SupportWitness(sup, kernel_dim, total, sample)


def _full_support_sample(fieldobj: Field, sub: np.ndarray) -> tuple[int, ...] | None:
    basis = linalg.kernel_basis(fieldobj, sub)
    if basis.shape[0] == 0:
        return None
    nz = fieldobj.ordered_elements()[1:]
    # kernel dim is small here; walk scalar combinations until one has no
    # zero coordinate (one exists whenever the caller saw a positive count)
    for r in range(basis.shape[0]):
        if (basis[r] != 0).all():
            return tuple(int(v) for v in basis[r])
    for k in range(2, basis.shape[0] + 1):
        for rows_sel in itertools.combinations(range(basis.shape[0]), k):
            for coefs in itertools.product(nz, repeat=k):
                v = np.zeros(sub.shape[1], dtype=np.uint16)
                for c, r in zip(coefs, rows_sel):
                    v = fieldobj.ADD[v, fieldobj.MUL[c, basis[r]]]
                if (v != 0).all():
                    return tuple(int(x) for x in v)
    return None


def full_support_kernel_count(code: EvaluationCode, support) -> SupportWitness:
    """Exact count of dual codewords supported on all of ``support``.

    Inclusion-exclusion over column subsets: N_S = sum over T of
    (-1)^|T| q^(dim ker H_{S minus T}).  The submatrix is compressed to its
    reduced nonzero rows first, which keeps the 2^|S| subset ranks cheap.
    """
    return _fsk_count(code.field, code.H, support)


# ---------------------------------------------------------------------------
# closed forms


def closed_form_Ad(ell: int, d: int) -> int:
    """(l+1)(l^5-l^3)(l^6-1) * C(l^2-l+1, d); zero once d exceeds the secant."""
    if d < 0:
        return 0
    cap = ell * ell - ell + 1
    if d > cap:
        return 0
    return (ell + 1) * (ell**5 - ell**3) * (ell**6 - 1) * math.comb(cap, d)


def lower_bound_Ad(ell: int, d: int) -> BoundReport:
    """Same closed form labeled as a lower bound, with its open-range flag.

    The bound is stated for 2(l-1) < m < l^2-l-1 with d = m+2; outside that
    open interval the value is still computed but flagged.
    """
    m = d - 2
    in_range = 2 * (ell - 1) < m < ell * ell - ell - 1
    return BoundReport(ell, d, m, closed_form_Ad(ell, d), in_range)


# ---------------------------------------------------------------------------
# constructive enumeration over full secants


def _infer_ell(field_order: int) -> int:
    ell = round(field_order ** (1.0 / 6.0))
    if ell >= 2 and ell**6 == field_order:
        return ell
    raise GKError("CONFIG_INVALID",
                  f"field order {field_order} is not a sixth power")


def secant_groups(code: EvaluationCode) -> list[tuple[tuple, list[int]]]:
    """Full-secant column groups: points sharing (x, y), grouped, maximal size.

    Points on one full secant differ only in z, so the groups of size
    l^2-l+1 under the (x, y) projection are exactly the full secants.
    """
    if not code.points or len(code.points[0]) != 3:
        raise GKError("CONFIG_INVALID", "secant grouping needs (x, y, z) points")
    ell = _infer_ell(code.field.order)
    size = ell * ell - ell + 1
    groups: dict = {}
    for i, p in enumerate(code.points):
        groups.setdefault((p[0], p[1]), []).append(i)
    lex = code.field.lex_rank
    keys = sorted((k for k, v in groups.items() if len(v) == size),
                  key=lambda k: (int(lex[k[0]]), int(lex[k[1]])))
    return [(k, groups[k]) for k in keys]


def secant_subset_census(code: EvaluationCode, d: int) -> dict:
    """Per-subset kernel counts over every full secant's d-subsets."""
    if d < 1:
        raise GKError("CONFIG_INVALID", f"subset size must be positive, got {d}")
    hist: dict[int, int] = {}
    total = 0
    subsets = 0
    secants = secant_groups(code)
    for _, idx in secants:
        for sub in itertools.combinations(idx, d):
            w = _fsk_count(code.field, code.H, sub)
            hist[w.full_support_count] = hist.get(w.full_support_count, 0) + 1
            total += w.full_support_count
            subsets += 1
    return {"secants": len(secants), "subsets": subsets,
            "histogram": hist, "total": total}


def constructive_count(code: EvaluationCode, d: int) -> WeightReport:
    """Sum of full-support kernel counts over all secant d-subsets.

    The count is exhaustive (equals A_d over the whole space) whenever the
    three-step exclusion argument pins every weight-d support to a single
    secant: d <= l^2-l+1 forces few enough distinct y-values, and
    d <= 2m+3 leaves no room for a second secant group of size m+2.
    """
    census = secant_subset_census(code, d)
    ell = _infer_ell(code.field.order)
    m = max(e[2] for e in code.basis)
    exhaustive = d <= ell * ell - ell + 1 and d <= 2 * m + 3
    return WeightReport(d, census["total"], "constructive", exhaustive)


# ---------------------------------------------------------------------------
# exhaustive support scan


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, k=1):
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(
                f"support scan exceeded budget of {self.limit}",
                partial={"supports_visited": self.used})


def _scan_region(fieldobj, H, w_max, firsts, budget, counts, witnesses):
    """DFS over supports whose smallest index lies in ``firsts``.

    Carries the candidate columns reduced modulo the basis of the current
    support; a column that reduces to zero marks a dependent support.  The
    reduction at depth w_max-1 doubles as the batched leaf test.
    """
    n = H.shape[1]
    SUB, MUL, INV = fieldobj.SUB, fieldobj.MUL, fieldobj.INV

    def record(support):
        wit = _fsk_count(fieldobj, H, support)
        k = len(support)
        counts[k] = counts.get(k, 0) + wit.full_support_count
        if wit.full_support_count > 0:
            bucket = witnesses.setdefault(k, [])
            if len(bucket) < _WITNESS_CAP:
                bucket.append(wit)

    def visit(support, cols_idx, R, impure):
        depth = len(support)
        budget.spend(len(cols_idx))
        if depth + 1 == w_max and not impure:
            dead = ~R.any(axis=0)
            for t in np.nonzero(dead)[0]:
                record(support + (int(cols_idx[t]),))
            return
        for t in range(len(cols_idx)):
            col = R[:, t]
            c = int(cols_idx[t])
            nz = np.nonzero(col)[0]
            child = support + (c,)
            if nz.size == 0:
                record(child)
                if depth + 1 < w_max:
                    visit(child, cols_idx[t + 1:], R[:, t + 1:], True)
                continue
            if impure:
                record(child)
            if depth + 1 == w_max:
                continue
            piv = int(nz[0])
            vec = MUL[INV[col[piv]], col]
            tail = R[:, t + 1:]
            reduced = SUB[tail, MUL[vec[:, None], tail[piv][None, :]]]
            visit(child, cols_idx[t + 1:], reduced, impure)

    for c0 in firsts:
        budget.spend()
        col = H[:, c0]
        sup = (int(c0),)
        nz = np.nonzero(col)[0]
        rest = np.arange(c0 + 1, n)
        if nz.size == 0:
            record(sup)
            if w_max > 1:
                visit(sup, rest, H[:, c0 + 1:].copy(), True)
            continue
        if w_max == 1:
            continue
        piv = int(nz[0])
        vec = MUL[INV[col[piv]], col]
        tail = H[:, c0 + 1:]
        reduced = SUB[tail, MUL[vec[:, None], tail[piv][None, :]]]
        visit(sup, rest, reduced, False)


def _scan_supports(code: EvaluationCode, w_max: int, budget_limit,
                   workers: int = 1) -> tuple[dict, dict, int]:
    """All dependent supports of size <= w_max: counts and capped witnesses."""
    n = code.n
    counts: dict[int, int] = {}
    witnesses: dict[int, list] = {}
    budget = _Budget(budget_limit)
    firsts = list(range(n))
    if workers > 1:
        parts = [firsts[i::workers] for i in range(workers)]
        merged = _run_workers(code, w_max, budget_limit, parts)
        for c, wits, used in merged:
            for k, v in c.items():
                counts[k] = counts.get(k, 0) + v
            for k, lst in wits.items():
                witnesses.setdefault(k, []).extend(lst)
            budget.used += used
        for k in witnesses:
            witnesses[k] = sorted(witnesses[k], key=lambda w: w.support)[:_WITNESS_CAP]
    else:
        _scan_region(code.field, code.H, w_max, firsts, budget, counts, witnesses)
    return counts, witnesses, budget.used


def _worker_scan(args):
    from .field import make_field
    p, deg, modulus, h_bytes, shape, w_max, firsts, limit = args
    f = make_field(p, deg, modulus)
    H = np.frombuffer(h_bytes, dtype=np.uint16).reshape(shape)
    counts: dict[int, int] = {}
    witnesses: dict[int, list] = {}
    budget = _Budget(limit)
    _scan_region(f, H, w_max, firsts, budget, counts, witnesses)
    return counts, witnesses, budget.used


def _run_workers(code, w_max, budget_limit, parts):
    import multiprocessing as mp

    f = code.field
    share = None if budget_limit is None else budget_limit // len(parts) + 1
    jobs = [(f.p, f.ext_degree, f.modulus, code.H.tobytes(), code.H.shape,
             w_max, part, share) for part in parts if part]
    with mp.Pool(len(jobs)) as pool:
        return pool.map(_worker_scan, jobs)


def brute_force_Aw(code: EvaluationCode, w: int, budget=None,
                   workers: int = 1) -> WeightReport:
    """A_w by exhaustive scan over all C(n, w) supports.

    The DFS visits every support of size <= w once, so one call settles all
    smaller weights too; only the requested one is reported.  The budget
    counts supports examined and aborts without a partial count.
    """
    if w < 0:
        raise GKError("CONFIG_INVALID", f"weight must be nonnegative, got {w}")
    if w == 0:
        return WeightReport(0, 1, "brute_force", True)
    if w > code.n:
        return WeightReport(w, 0, "brute_force", True)
    est = sum(math.comb(code.n, k) for k in range(1, w + 1))
    if budget is not None and est > budget:
        raise BudgetExceeded(
            f"scan needs {est} supports, budget is {budget}",
            partial={"supports_total": est, "supports_visited": 0})
    counts, _, _ = _scan_supports(code, w, budget, workers)
    return WeightReport(w, counts.get(w, 0), "brute_force", True)


def count_Jw_solutions(code: EvaluationCode, w: int, budget=None) -> int:
    """A_w * w!: ordered supports paired with full-support kernel vectors.

    Weight 0 returns 0: the convention counts only nonempty solution
    tuples, and the zero word has none.
    """
    if w == 0:
        return 0
    rep = brute_force_Aw(code, w, budget)
    return rep.A_w * math.factorial(w)


# ---------------------------------------------------------------------------
# dual enumeration (small instances)


def dual_enumeration_Aw(code: EvaluationCode, budget=None) -> dict[int, int]:
    """Full dual weight distribution by enumerating all q^(n-rank) words."""
    f = code.field
    q = f.order
    basis = linalg.kernel_basis(f, code.H)
    k = basis.shape[0]
    total = q**k
    if budget is not None and total > budget:
        raise BudgetExceeded(
            f"dual has {total} words, budget is {budget}",
            partial={"dual_dimension": k, "order": q})
    dist = np.zeros(code.n + 1, dtype=np.int64)
    chunk = 1 << 12
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.int64)
        words = np.zeros((hi - lo, code.n), dtype=np.uint16)
        rem = idx
        for r in range(k):
            coef = (rem % q).astype(np.uint16)
            rem = rem // q
            words = f.ADD[words, f.MUL[coef[:, None], basis[r][None, :]]]
        weights = (words != 0).sum(axis=1)
        dist += np.bincount(weights, minlength=code.n + 1)
    return {w: int(c) for w, c in enumerate(dist) if c}


# ---------------------------------------------------------------------------
# low-weight search


def _pack_keys(vectors: np.ndarray) -> np.ndarray:
    """Rows of a uint16 matrix as opaque fixed-width keys for sort/match."""
    v = np.ascontiguousarray(vectors, dtype=np.uint16)
    return v.view([("k", np.void, v.shape[1] * 2)]).ravel()


def _mitm_weight(code: EvaluationCode, w: int, budget: _Budget,
                 witnesses: list) -> int:
    """Find weight-w words by matching half-support sums; returns A_w.

    Sorted supports split uniquely as first ceil(w/2) indices against the
    rest, so covering all left combinations (first coefficient normalized
    to 1) against all right combinations covers every codeword once per
    scalar orbit.
    """
    f, H, n = code.field, code.H, code.n
    q = f.order
    nz = np.array(f.ordered_elements()[1:], dtype=np.uint16)
    if w == 1:
        budget.spend(n)
        hits = [i for i in range(n) if not H[:, i].any()]
        for i in hits:
            witnesses.append(_fsk_count(f, H, (i,)))
        return len(hits) * (q - 1)
    a = (w + 1) // 2
    b = w - a
    left_combos = list(itertools.combinations(range(n), a))
    budget.spend(len(left_combos) * (q - 1) ** (a - 1))
    lvecs = []
    lmeta = []
    for sup in left_combos:
        base = H[:, sup[0]]
        for coefs in itertools.product(nz, repeat=a - 1):
            v = base
            for c, j in zip(coefs, sup[1:]):
                v = f.ADD[v, f.MUL[c, H[:, j]]]
            lvecs.append(v)
            lmeta.append((sup, (1,) + coefs))
    lkeys = _pack_keys(np.array(lvecs, dtype=np.uint16))
    order = np.argsort(lkeys)
    lkeys_sorted = lkeys[order]
    found = 0
    right_combos = itertools.combinations(range(n), b)
    for sup in right_combos:
        budget.spend((q - 1) ** b)
        cols = [H[:, j] for j in sup]
        for coefs in itertools.product(nz, repeat=b):
            v = f.MUL[coefs[0], cols[0]]
            for c, col in zip(coefs[1:], cols[1:]):
                v = f.ADD[v, f.MUL[c, col]]
            v = f.NEG[v]
            key = _pack_keys(v[None, :])
            pos = np.searchsorted(lkeys_sorted, key[0])
            while pos < len(lkeys_sorted) and lkeys_sorted[pos] == key[0]:
                li = int(order[pos])
                lsup, lcoefs = lmeta[li]
                if lsup[-1] < sup[0]:
                    found += 1
                    if len(witnesses) < _WITNESS_CAP:
                        full = lsup + sup
                        witnesses.append(_fsk_count(f, H, full))
                pos += 1
    return found * (q - 1)


def low_weight_search(code: EvaluationCode, w_max: int,
                      strategy: str = "exhaustive", budget=None,
                      seeds=None, workers: int = 1) -> SearchResult:
    """Witnesses for weights <= w_max, or certified absence.

    ``seeds`` are supports checked first regardless of strategy; a seed
    with a positive kernel count becomes a witness immediately.  Absence
    at a weight is certified only when the strategy covered that weight's
    whole search space; a budget abort raises with the witnesses found so
    far attached, never an absence claim.
    """
    if strategy not in ("exhaustive", "meet_in_middle"):
        raise GKError("CONFIG_INVALID", f"unknown strategy {strategy!r}")
    if w_max < 1 or w_max > code.n:
        raise GKError("CONFIG_INVALID",
                      f"w_max must be in [1, {code.n}], got {w_max}")
    seeded = []
    for sup in seeds or []:
        wit = _fsk_count(code.field, code.H, sup)
        if wit.full_support_count > 0:
            seeded.append(wit)
    counts: dict[int, int] = {}
    witnesses: dict[int, list] = {}
    try:
        if strategy == "exhaustive":
            counts, witnesses, _ = _scan_supports(code, w_max, budget, workers)
        else:
            budget_state = _Budget(budget)
            for w in range(1, w_max + 1):
                bucket: list = []
                counts[w] = _mitm_weight(code, w, budget_state, bucket)
                if bucket:
                    witnesses[w] = bucket
    except BudgetExceeded as exc:
        flat = seeded + [w for lst in witnesses.values() for w in lst]
        raise BudgetExceeded(exc.message,
                             partial={"witnesses": flat, **(exc.partial or {})})
    all_wits = seeded + [w for lst in witnesses.values() for w in lst]
    absent = [w for w in range(1, w_max + 1) if counts.get(w, 0) == 0]
    return SearchResult(w_max, strategy, all_wits,
                        {w: counts.get(w, 0) for w in range(1, w_max + 1)},
                        absent, True)


# ---------------------------------------------------------------------------
# Vandermonde exclusion


def support_exclusion_certificate(ctx: CurveContext, m: int,
                                  support) -> ExclusionCertificate:
    """Decide exclusion of a support by the three-step Vandermonde argument.

    For a kernel vector on the support, fixing x- and z-exponents and
    summing over points with equal y gives, for every y-power, a linear
    relation on the per-class sums; with alpha <= l^2-l+1 classes the
    y-Vandermonde has full column rank and all class sums vanish.  Within
    a class the same argument over x (at most l fiber roots, l powers)
    zeroes the per-(x, y) group sums, and within a group of size <= m+1
    the z-Vandermonde (m+1 powers, distinct z nodes) forces every
    coefficient to zero.  Any point in a group of size <= m+1 therefore
    kills a full-support vector, provided alpha stays within range.
    """
    pts = [ctx.points[int(i)] for i in support]
    if any(p.at_infinity for p in pts):
        raise GKError("CONFIG_INVALID", "supports index affine points only")
    cap = ctx.ell * ctx.ell - ctx.ell + 1
    ys = {p.y for p in pts}
    groups: dict = {}
    for p in pts:
        groups.setdefault((p.x, p.y), []).append(p)
    sizes = [len(v) for v in groups.values()]
    alpha = len(ys)
    lo, hi = min(sizes), max(sizes)
    if alpha > cap:
        return ExclusionCertificate(tuple(support), False,
                                    f"alpha={alpha} exceeds {cap}; y-step silent",
                                    alpha, lo, hi)
    if lo <= m + 1:
        return ExclusionCertificate(
            tuple(support), True,
            f"alpha={alpha} <= {cap} and a (x,y)-group of size {lo} <= m+1",
            alpha, lo, hi)
    return ExclusionCertificate(
        tuple(support), False,
        f"every (x,y)-group has >= m+2 = {m + 2} points; candidate",
        alpha, lo, hi)


def mixed_support_sample(ctx: CurveContext, code: EvaluationCode, d: int,
                         trials: int, seed: int = 0) -> dict:
    """Random size-d supports spanning >= 2 secants: all must be excluded.

    Samples supports whose points do not all share one (x, y) pair and
    runs a batched elimination over their column sets; a support whose
    columns are independent carries no kernel vector at all.  The rare
    dependent draws (a sub-secant of size >= m+2 inside the support) fall
    back to the exact kernel count, which must have empty full support.
    Returns the violation count, which the exclusion argument says is zero.
    """
    if d < 2:
        raise GKError("CONFIG_INVALID", "sampling needs d >= 2")
    rng = np.random.default_rng(seed)
    f = code.field
    SUB, MUL, INV = f.SUB, f.MUL, f.INV
    H = code.H
    r, n = H.shape
    HT = np.ascontiguousarray(H.T)
    q = f.order
    xyid = np.array([p[0] * q + p[1] for p in code.points], dtype=np.int64)
    violations = 0
    done = 0
    deps: list = []
    batch = 8192
    while done < trials:
        raw = rng.integers(0, n, size=(batch, d))
        raw.sort(axis=1)
        distinct = np.all(raw[:, 1:] != raw[:, :-1], axis=1)
        mixed = ~np.all(xyid[raw] == xyid[raw[:, :1]], axis=1)
        keep = raw[distinct & mixed]
        if keep.shape[0] == 0:
            continue
        keep = keep[: trials - done]
        done += keep.shape[0]
        A = np.swapaxes(HT[keep], 1, 2).copy()  # (t, r, d)
        t = A.shape[0]
        ar = np.arange(t)
        alive = np.ones(t, dtype=bool)
        for j in range(min(d, r + 1)):
            if j >= r:
                break
            nz = A[:, j:, j] != 0
            has = nz.any(axis=1)
            newdep = alive & ~has
            if newdep.any():
                deps.extend(keep[newdep].tolist())
                alive &= has
            rows = np.argmax(nz, axis=1) + j
            pivrow = MUL[INV[A[ar, rows, j]][:, None], A[ar, rows, :]]
            A[ar, rows, :] = A[:, j, :]
            A[:, j, :] = pivrow
            if j + 1 < r:
                fcts = A[:, j + 1:, j]
                A[:, j + 1:, :] = SUB[A[:, j + 1:, :],
                                      MUL[fcts[..., None], pivrow[:, None, :]]]
        if d > r:
            deps.extend(keep[alive].tolist())
    for sup in deps:
        wit = _fsk_count(f, H, [int(i) for i in sup])
        if wit.full_support_count > 0:
            violations += 1
    return {"d": d, "trials": trials, "violations": violations, "seed": seed,
            "dependent_fallbacks": len(deps)}
