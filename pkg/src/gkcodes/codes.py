"""Monomial evaluation matrices and the dual one-point code family.

The code of interest is the dual of the evaluation code spanned by the
monomial box

    x^i y^j z^k,   0 <= i <= l-1,  0 <= j <= l^2-l,  0 <= k <= m

evaluated at the l^8 - l^6 + l^5 affine rational points of the curve.  The
evaluation matrix H (one row per monomial, one column per point, columns in
the canonical point order) is a parity-check matrix for the dual code, which
is where all weight questions in this package live.

``build_code`` is generic over any point set and exponent box so the same
machinery runs against a small independently checkable oracle (the plane
curve y^(l+1) = x^l + x over F_{l^2}).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .curve import CurveContext
from .errors import GKError
from .field import Field
from . import linalg


def monomial_basis(ell: int, m: int) -> list[tuple[int, int, int]]:
    """Exponent triples (i, j, k) of the monomial box, lexicographic order."""
    if m < 0:
        raise GKError("CONFIG_INVALID", f"m must be >= 0, got {m}")
    return [
        (i, j, k)
        for i in range(ell)
        for j in range(ell * ell - ell + 1)
        for k in range(m + 1)
    ]


@dataclass
class EvaluationCode:
    """Evaluation matrix H of a monomial set at a point set.

    H[r][c] = basis[r] evaluated at points[c].  H is the parity-check matrix
    of the dual code; ``rank`` is computed, never assumed equal to len(basis).
    """

    field: Field
    points: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]
    H: np.ndarray
    _rank: int | None = dc_field(default=None, repr=False)
    _cols: list | None = dc_field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = linalg.rank(self.field, self.H)
        return self._rank

    @property
    def dual_dimension(self) -> int:
        return self.n - self.rank

    def columns(self) -> list[tuple[int, ...]]:
        """Column tuples of H, cached, for pure-Python scalar loops."""
        if self._cols is None:
            self._cols = [tuple(col) for col in self.H.T.tolist()]
        return self._cols

    def is_dual_codeword(self, u) -> bool:
        """True iff H @ u = 0, by direct matrix-vector multiplication."""
        v = np.asarray(u, dtype=np.uint16)
        if v.shape != (self.n,):
            raise GKError(
                "LENGTH_MISMATCH",
                f"vector length {v.shape} does not match code length {self.n}",
            )
        return not linalg.matvec(self.field, self.H, v).any()


def build_code(field: Field, points, basis) -> EvaluationCode:
    """Evaluate an exponent box at a point set.

    Args:
        field: coefficient field.
        points: sequence of coordinate tuples, all the same arity.
        basis: sequence of exponent tuples of that arity.

    Raises:
        GKError(DUPLICATE_POINTS): repeated evaluation points.
    """
    pts = [tuple(int(c) for c in pt) for pt in points]
    if len(set(pts)) != len(pts):
        raise GKError("DUPLICATE_POINTS", "evaluation points must be distinct")
    exps = [tuple(int(e) for e in b) for b in basis]
    if not pts:
        raise GKError("CONFIG_INVALID", "empty point set")
    arity = len(pts[0])
    if any(len(pt) != arity for pt in pts) or any(len(e) != arity for e in exps):
        raise GKError("CONFIG_INVALID", "point and exponent arities must agree")

    coords = [np.array([pt[t] for pt in pts], dtype=np.uint16) for t in range(arity)]
    # per-coordinate power cache: powers[t][e] = coords[t] ** e
    max_e = [max((e[t] for e in exps), default=0) for t in range(arity)]
    powers = []
    for t in range(arity):
        col = [np.ones(len(pts), dtype=np.uint16)]
        for e in range(1, max_e[t] + 1):
            col.append(field.MUL[col[-1], coords[t]])
        powers.append(col)

    H = np.zeros((len(exps), len(pts)), dtype=np.uint16)
    for ri, e in enumerate(exps):
        row = powers[0][e[0]]
        for t in range(1, arity):
            row = field.MUL[row, powers[t][e[t]]]
        H[ri] = row
    return EvaluationCode(field, tuple(pts), tuple(exps), H)


def build_gk_code(ctx: CurveContext, m: int) -> EvaluationCode:
    """The evaluation matrix over all affine curve points, canonical order."""
    basis = monomial_basis(ctx.ell, m)
    pts = [(pt.x, pt.y, pt.z) for pt in ctx.points[:-1]]
    return build_code(ctx.field, pts, basis)


def plane_curve_points(field: Field, ell: int) -> list[tuple[int, int]]:
    """Affine solutions of y^(l+1) = x^l + x over the given field.

    With the field F_{l^2} this is the small oracle surface used to
    cross-check the weight machinery end to end.
    """
    pts = []
    for x in field.ordered_elements():
        rhs = field.add(field.pow(x, ell), x)
        for y in field.ordered_elements():
            if field.pow(y, ell + 1) == rhs:
                pts.append((x, y))
    return pts


def designed_distance(ell: int, m: int) -> int:
    """Goppa designed distance of the dual code: m(l^3+1) - l^5 + 2l^3 - l^2 + 2.

    May be non-positive, in which case the bound is vacuous; callers decide
    how to surface that (see DistanceClassification.d_star_vacuous).
    """
    return m * (ell**3 + 1) - ell**5 + 2 * ell**3 - ell**2 + 2


@dataclass(frozen=True)
class DistanceClassification:
    """Minimum-distance case split for the dual code at a given m.

    ``d`` is exact when ``exact`` is True, otherwise a lower bound.  Each case
    names the plane configuration that justifies it; ``witness_constructible``
    records whether that configuration exists at this ell (the cubic-case
    construction needs ell >= 3).
    """

    ell: int
    m: int
    case: str  # collinear | conic | cubic | beyond | designed
    d: int
    exact: bool
    geometric_fact: str
    d_star: int
    d_star_vacuous: bool
    witness_constructible: bool


def structural_min_distance(ell: int, m: int) -> DistanceClassification:
    """Case split on m for the minimum distance of the dual code.

    Raises:
        GKError(M_TOO_SMALL): m < 2; the classification needs m >= 2.
    """
    if m < 2:
        raise GKError("M_TOO_SMALL", f"the case split requires m >= 2, got {m}")
    s = ell * ell - ell  # l^2 - l
    d_star = designed_distance(ell, m)
    vac = d_star < 1
    if m <= s - 1:
        return DistanceClassification(
            ell, m, "collinear", m + 2, True,
            f"{ell**2 - ell + 1} >= m+2 collinear points on a full secant",
            d_star, vac, True,
        )
    if m == s:
        return DistanceClassification(
            ell, m, "conic", 2 * m + 2, True,
            "no m+2 points collinear; 2m+2 points on a plane conic",
            d_star, vac, True,
        )
    if m == s + 1:
        return DistanceClassification(
            ell, m, "cubic", 3 * m, True,
            "no m+2 collinear, no 2m+2 on a conic; 3m points on a plane cubic",
            d_star, vac, ell >= 3,
        )
    if m <= ell * ell - 1:
        return DistanceClassification(
            ell, m, "beyond", 3 * m + 1, False,
            "no line/conic/cubic configuration attains the bound",
            d_star, vac, True,
        )
    return DistanceClassification(
        ell, m, "designed", d_star, False,
        "designed (Goppa) bound takes over",
        d_star, vac, True,
    )


def crossover_scan(ell: int, m_max: int = 64) -> dict:
    """Scan m >= 2 for the first m where the designed bound beats 3m+1.

    Up to some m the geometric bound 3m+1 is at least the designed bound d*;
    from the crossover on, d* is strictly larger and takes over.  The scan
    returns that first m (``crossover_m``), the last m where the geometric
    bound still held (``last_geometric_m``), and the nominal boundary
    l^2 - 1.  At l = 3 the scan confirms the nominal value; at l = 2 the
    crossover lands one step later (m = 4 = l^2), because at m = 3 the two
    bounds are 10 vs 9 and the geometric one still wins.  Reports carry
    both values.
    """
    first_designed = None
    last_geometric = None
    for m in range(2, m_max + 1):
        if designed_distance(ell, m) > 3 * m + 1:
            if first_designed is None:
                first_designed = m
        elif first_designed is None:
            last_geometric = m
    nominal = ell * ell - 1
    return {
        "ell": ell,
        "crossover_m": first_designed,
        "last_geometric_m": last_geometric,
        "nominal_m": nominal,
        "agrees": first_designed == nominal,
    }
