import numpy as np

from gkcodes import linalg


def _random_matrix(f, rng, rows, cols):
    return rng.integers(0, f.order, size=(rows, cols)).astype(np.uint16)


def test_rref_shape_and_pivots(f4):
    mat = np.array([[1, 2, 3], [2, 3, 1]], dtype=np.uint16)
    R, piv = linalg.rref(f4, mat)
    assert R.shape == mat.shape
    for r, c in enumerate(piv):
        assert R[r, c] == 1
        col = R[:, c]
        assert int(col.sum()) == 1  # pivot column is a unit column


def test_rref_idempotent(f64):
    rng = np.random.default_rng(7)
    for _ in range(20):
        mat = _random_matrix(f64, rng, 4, 6)
        R1, p1 = linalg.rref(f64, mat)
        R2, p2 = linalg.rref(f64, R1)
        assert np.array_equal(R1, R2)
        assert p1 == p2


def test_kernel_annihilates(f64):
    rng = np.random.default_rng(11)
    for _ in range(25):
        mat = _random_matrix(f64, rng, 3, 7)
        ker = linalg.kernel_basis(f64, mat)
        assert ker.shape[0] == 7 - linalg.rank(f64, mat)
        for row in ker:
            assert not linalg.matvec(f64, mat, row).any()


def test_rank_bounds(f4):
    rng = np.random.default_rng(3)
    for _ in range(30):
        m = _random_matrix(f4, rng, 3, 5)
        r = linalg.rank(f4, m)
        assert 0 <= r <= 3
    zero = np.zeros((2, 4), dtype=np.uint16)
    assert linalg.rank(f4, zero) == 0
    assert linalg.kernel_basis(f4, zero).shape == (4, 4)


def test_matvec_matches_scalar(f4):
    rng = np.random.default_rng(5)
    m = _random_matrix(f4, rng, 3, 4)
    v = rng.integers(0, 4, size=4).astype(np.uint16)
    got = linalg.matvec(f4, m, v)
    for i in range(3):
        acc = 0
        for j in range(4):
            acc = f4.add(acc, f4.mul(int(m[i, j]), int(v[j])))
        assert acc == int(got[i])
