import pytest

from gkcodes import codes
from gkcodes.errors import GKError


def test_monomial_basis_shape():
    b2 = codes.monomial_basis(2, 2)
    assert all(len(e) == 3 for e in b2)
    assert len(set(b2)) == len(b2)
    # m = 2 holds the constant, the three coordinates, and degree-2 terms
    assert (0, 0, 0) in b2


def test_build_code_rejects_duplicates(f4):
    with pytest.raises(GKError) as e:
        codes.build_code(f4, [(0, 0), (0, 0)], [(0, 0)])
    assert e.value.code == "DUPLICATE_POINTS"


def test_code_shapes(code2m2, code3m2):
    assert code2m2.n == 224
    assert code3m2.n == 6075
    assert code2m2.rank <= code2m2.r
    assert code2m2.dual_dimension == code2m2.n - code2m2.rank


def test_toy_code(toy_code):
    assert toy_code.n == 8
    assert toy_code.r == 3
    assert toy_code.rank == 3


def test_designed_distance_values():
    # l=3: d* = 28m - 196
    assert codes.designed_distance(3, 8) == 28
    assert codes.designed_distance(3, 9) == 56
    assert codes.designed_distance(3, 2) < 1  # vacuous at small m


def test_structural_cases_l3():
    for m in (2, 3, 4, 5):
        cl = codes.structural_min_distance(3, m)
        assert (cl.case, cl.d, cl.exact) == ("collinear", m + 2, True)
    assert codes.structural_min_distance(3, 6).d == 14
    cl7 = codes.structural_min_distance(3, 7)
    assert (cl7.case, cl7.d, cl7.exact) == ("cubic", 21, True)
    assert cl7.witness_constructible
    cl8 = codes.structural_min_distance(3, 8)
    assert (cl8.d, cl8.exact) == (25, False)
    cl9 = codes.structural_min_distance(3, 9)
    assert cl9.case == "designed"
    assert cl9.d == codes.designed_distance(3, 9)


def test_structural_cases_l2():
    cl2 = codes.structural_min_distance(2, 2)
    assert (cl2.case, cl2.d, cl2.exact) == ("conic", 6, True)
    cl3 = codes.structural_min_distance(2, 3)
    assert (cl3.case, cl3.d) == ("cubic", 9)
    assert not cl3.witness_constructible  # needs three roots of x^l + x = c
    cl4 = codes.structural_min_distance(2, 4)
    assert cl4.case == "designed"
    with pytest.raises(GKError) as e:
        codes.structural_min_distance(2, 1)
    assert e.value.code == "M_TOO_SMALL"


def test_crossover():
    s3 = codes.crossover_scan(3)
    assert s3["crossover_m"] == 8
    assert s3["nominal_m"] == 8
    assert s3["agrees"]
    s2 = codes.crossover_scan(2)
    assert s2["nominal_m"] == 3
    assert s2["crossover_m"] == 4  # boundary case: d*(3) = 3m+1 exactly
    assert not s2["agrees"]


def test_dual_codeword_membership(toy_code):
    import numpy as np

    from gkcodes import linalg

    ker = linalg.kernel_basis(toy_code.field, toy_code.H)
    for row in ker:
        assert toy_code.is_dual_codeword(row)
    bad = np.zeros(toy_code.n, dtype=np.uint16)
    bad[0] = 1
    assert not toy_code.is_dual_codeword(bad)
    with pytest.raises(GKError):
        toy_code.is_dual_codeword([0, 1])
