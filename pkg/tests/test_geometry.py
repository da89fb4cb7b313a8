import pytest

from gkcodes import geometry as G
from gkcodes.errors import BudgetExceeded, GKError


def test_normalize_point(f4):
    assert G.normalize_point(f4, (0, 2, 3, 0))[1] == 1
    assert G.normalize_point(f4, (1, 2, 3, 1)) == (1, 2, 3, 1)
    with pytest.raises(GKError) as e:
        G.normalize_point(f4, (0, 0, 0, 0))
    assert e.value.code == "DEGENERATE_SPAN"


def test_line_and_plane_incidence(f4):
    ln = G.line_through(f4, (1, 0, 0, 0), (0, 1, 0, 0))
    assert G.on_line(f4, (1, 1, 0, 0), ln)
    assert not G.on_line(f4, (0, 0, 1, 0), ln)
    assert len(G.line_points(f4, ln)) == f4.order + 1
    with pytest.raises(GKError):
        G.line_through(f4, (1, 0, 0, 0), (2, 0, 0, 0))  # same point
    pl = G.plane_through(f4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
    assert pl.coeffs == (0, 0, 0, 1)
    assert G.on_plane(f4, (1, 2, 3, 0), pl)
    assert not G.on_plane(f4, (0, 0, 0, 1), pl)
    with pytest.raises(GKError) as e:
        G.plane_through(f4, (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0))
    assert e.value.code == "DEGENERATE_SPAN"


def test_line_canonical_form(f4):
    # the same line from different spanning pairs gets the same rows
    l1 = G.line_through(f4, (1, 0, 0, 0), (0, 1, 0, 0))
    l2 = G.line_through(f4, (1, 1, 0, 0), (1, 2, 0, 0))
    assert l1 == l2


def test_line_intersection(f4):
    l1 = G.line_through(f4, (1, 0, 0, 0), (0, 1, 0, 0))
    l2 = G.line_through(f4, (1, 0, 0, 0), (0, 0, 1, 0))
    assert G.line_intersection(f4, l1, l2) == (1, 0, 0, 0)
    skew = G.line_through(f4, (0, 1, 0, 0), (0, 0, 0, 1))
    l3 = G.line_through(f4, (1, 0, 0, 0), (0, 0, 1, 0))
    assert G.line_intersection(f4, skew, l3) is None
    assert G.line_intersection(f4, l1, l1) is None


def test_intersection_bound():
    assert G.intersection_bound(1, False, 3) == 7
    assert G.intersection_bound(1, True, 3) == 7
    assert G.intersection_bound(2, True, 3) == 14
    assert G.intersection_bound(2, False, 3) == 8
    assert G.intersection_bound(2, False, 2) == 6
    for bad in (0, 4):
        with pytest.raises(GKError) as e:
            G.intersection_bound(bad, True, 3)
        assert e.value.code == "DEGREE_OUT_OF_RANGE"


def test_secant_census_l2(ctx2):
    cen = G.secant_census(ctx2)
    assert cen.max_secant_size == 3
    assert len(cen.full_secants) == 72
    assert cen.checks["full_z_parallel"]
    assert cen.checks["full_o2_only"]
    assert cen.checks["o2_single_cover"]
    assert cen.checks["o1_line_bound"] <= 3
    assert cen.checks["pair_total"]
    # every pair of curve points is on exactly one line
    total = sum(c * s * (s - 1) // 2 for s, c in cen.histogram.items())
    assert total == 225 * 224 // 2


def test_vertical_secant(ctx2):
    x0, y0, idx = ctx2.vertical_secants()[0]
    line, pts = G.vertical_secant(x0, y0, ctx2)
    assert len(pts) == 3
    assert all(p.x == x0 and p.y == y0 for p in pts)
    assert all(G.on_line(ctx2.field, (p.x, p.y, p.z, 1), line) for p in pts)
    # the z direction lies on every vertical line
    assert G.on_line(ctx2.field, (0, 0, 1, 0), line)
    with pytest.raises(GKError) as e:
        G.vertical_secant(0, 1, ctx2)
    assert e.value.code == "NOT_ON_SURFACE"


def test_conic_degeneracy_classifier(f4):
    # u*v is a visible line pair; u^2 is a double line; an anisotropic
    # form over the subfield stays irreducible
    assert G.conic_is_degenerate(f4, (0, 0, 0, 1, 0, 0))  # uv
    assert G.conic_is_degenerate(f4, (1, 0, 0, 0, 0, 0))  # u^2
    # u^2 + vw: smooth conic (the radical point (0,0,0) never exists
    # projectively; nucleus is off the conic)
    assert not G.conic_is_degenerate(f4, (1, 0, 0, 0, 0, 1))


def test_reducible_conic_witness(ctx2):
    wit = G.build_reducible_conic(ctx2)
    assert wit["incidence"] == 6
    assert wit["expected"] == 6
    assert wit["degenerate"]
    assert wit["common_point"] == (0, 0, 1, 0)
    assert not wit["common_point_on_curve"]
    assert len(set(wit["points"])) == 6


def test_plane_census_l2(ctx2):
    pc = G.plane_census(ctx2)
    assert len(pc["coeffs"]) == 171352
    hist = pc["histogram"]
    assert hist[9] == 8200
    assert hist[8] == 648
    assert hist[7] == 2592
    assert min(hist) >= 3
    assert max(hist) == 9


def test_conic_budget(ctx2):
    with pytest.raises(BudgetExceeded) as e:
        G.conic_census(ctx2, budget=10)
    rep = e.value.partial["report"]
    assert not rep.exhaustive


def test_cubic_configuration(ctx3):
    y_bar = ctx3.vertical_secants()[0][1]
    cfg = G.cubic_configuration(y_bar, ctx3)
    assert len(cfg["points"]) == 21
    assert len(cfg["secants"]) == 3
    assert len(cfg["cover_lines"]) == 7
    f = ctx3.field
    for p in cfg["points"]:
        assert G.on_plane(f, (p.x, p.y, p.z, 1), cfg["plane"])
    # cover lines pass through the point at infinity
    for ln in cfg["cover_lines"]:
        assert G.on_line(f, (1, 0, 0, 0), ln)
    with pytest.raises(GKError) as e:
        G.cubic_configuration(0, ctx3)  # 0 sits in the small field
    assert e.value.code == "NOT_GENERIC"


def test_cubic_needs_l3(ctx2):
    with pytest.raises(GKError) as e:
        G.cubic_configuration(2, ctx2)
    assert e.value.code == "NEED_ELL_GE_3"
