import pytest

from gkcodes import acceptance, codes, curve
from gkcodes.field import make_field


@pytest.fixture(scope="session")
def f64():
    return make_field(2, 6)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def ctx2():
    return curve.build_curve(2)


@pytest.fixture(scope="session")
def ctx3():
    return curve.build_curve(3)


@pytest.fixture(scope="session")
def code2m2(ctx2):
    return codes.build_gk_code(ctx2, 2)


@pytest.fixture(scope="session")
def code3m2(ctx3):
    return codes.build_gk_code(ctx3, 2)


@pytest.fixture(scope="session")
def toy_code(f4):
    pts = codes.plane_curve_points(f4, 2)
    return codes.build_code(f4, pts, [(0, 0), (1, 0), (0, 1)])


@pytest.fixture(scope="session")
def suite_cache():
    """One shared lazy cache for the whole acceptance run."""
    return acceptance.SuiteCache()
