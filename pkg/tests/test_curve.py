import pytest

from gkcodes import curve
from gkcodes.errors import GKError


def test_genus_and_count_formulas():
    assert curve.genus(2) == 10
    assert curve.genus(3) == 99
    assert curve.rational_point_count(2) == 225
    assert curve.rational_point_count(3) == 6076


def test_census_l2(ctx2):
    assert ctx2.n_points == 225
    assert len(ctx2.o1_indices) == 9
    assert len(ctx2.o2_indices) == 216
    # the two orbits partition the points
    assert set(ctx2.o1_indices) | set(ctx2.o2_indices) == set(range(225))


def test_census_l3(ctx3):
    assert ctx3.n_points == 6076
    assert len(ctx3.o1_indices) == 28
    assert len(ctx3.o2_indices) == 6048


def test_maximality(ctx2, ctx3):
    for ctx, ell in ((ctx2, 2), (ctx3, 3)):
        g = curve.genus(ell)
        assert ctx.n_points == ell**6 + 1 + 2 * g * ell**3


def test_points_satisfy_equations(ctx2):
    f = ctx2.field
    for pt in ctx2.points[:-1]:
        assert curve.on_curve(f, 2, pt.x, pt.y, pt.z)
    assert ctx2.points[-1].at_infinity


def test_o1_is_z_zero_section(ctx2):
    for i in ctx2.o1_indices:
        pt = ctx2.points[i]
        assert pt.at_infinity or pt.z == 0
        if not pt.at_infinity:
            # O1 affine points have both coordinates in the small field
            assert ctx2.in_subfield_l2(pt.x)
            assert ctx2.in_subfield_l2(pt.y)


def test_fiber_sizes(ctx3):
    ell = 3
    for y in ctx3.field.ordered_elements():
        xs = ctx3.x_fiber(y)
        assert len(xs) in (0, ell)
        zs = ctx3.z_fiber(y)
        assert len(zs) in (0, 1, ell * ell - ell + 1)
        if ctx3.in_subfield_l2(y):
            assert zs == [0]


def test_point_index_roundtrip(ctx2):
    for i, pt in enumerate(ctx2.points[:-1]):
        assert ctx2.point_index[(pt.x, pt.y, pt.z)] == i


def test_vertical_secant_counts(ctx2, ctx3):
    assert len(ctx2.vertical_secants()) == 72
    assert len(ctx3.vertical_secants()) == 864
    for x0, y0, idx in ctx3.vertical_secants()[:5]:
        assert len(idx) == 7
        assert not ctx3.in_subfield_l2(y0)


def test_divisor_supports(ctx2):
    dx = curve.divisor_zero_support(ctx2, "x")
    assert dx.support == ((0, 0, 0),)
    assert dx.multiplicity == 2**3 + 1
    dy = curve.divisor_zero_support(ctx2, "y")
    assert len(dy.support) == 2
    assert all(y == 0 and z == 0 for _, y, z in dy.support)
    dz = curve.divisor_zero_support(ctx2, "z")
    assert len(dz.support) == 8
    assert dz.pole_order_infinity == 8
    assert dz.zero_degree == dz.pole_order_infinity
    with pytest.raises(GKError) as e:
        curve.divisor_zero_support(ctx2, "w")
    assert e.value.code == "CONFIG_INVALID"


def test_bad_ell():
    with pytest.raises(GKError):
        curve.build_curve(6)
