import numpy as np
import pytest

from gkcodes.errors import GKError
from gkcodes.field import Field, make_field, parse_ell


def test_parse_ell():
    assert parse_ell(2) == (2, 1)
    assert parse_ell(3) == (3, 1)
    assert parse_ell(4) == (2, 2)
    assert parse_ell(8) == (2, 3)
    with pytest.raises(GKError) as e:
        parse_ell(6)
    assert e.value.code == "UNSUPPORTED_SIZE"
    with pytest.raises(GKError):
        parse_ell(1)


def test_order_cap():
    with pytest.raises(GKError) as e:
        make_field(2, 13)
    assert e.value.code == "UNSUPPORTED_SIZE"


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(GKError) as e:
        make_field(2, 2, modulus=(1, 0, 1))
    assert e.value.code == "REDUCIBLE_MODULUS"


def test_table_consistency(f4):
    q = f4.order
    assert q == 4
    # commutativity and the defining identities, every pair
    assert np.array_equal(f4.ADD, f4.ADD.T)
    assert np.array_equal(f4.MUL, f4.MUL.T)
    for a in range(q):
        assert f4.add(a, 0) == a
        assert f4.mul(a, 1) == a
        assert f4.sub(a, a) == 0
        if a:
            assert f4.mul(a, f4.inv(a)) == 1
    # distributivity spot grid
    for a in range(q):
        for b in range(q):
            for c in range(q):
                lhs = f4.mul(a, f4.add(b, c))
                rhs = f4.add(f4.mul(a, b), f4.mul(a, c))
                assert lhs == rhs


def test_pow_and_frobenius(f64):
    assert f64.pow(0, 0) == 1
    for a in (0, 1, 5, 37, 63):
        assert f64.frobenius(a) == f64.mul(a, a)
        assert f64.pow(a, f64.order - 1) in (0, 1)
    g = 2  # any nonzero non-identity element generates a cyclic check
    acc, seen = 1, set()
    for _ in range(f64.order - 1):
        acc = f64.mul(acc, g)
        seen.add(acc)
    assert 1 in seen


def test_coeffs_roundtrip(f64):
    for a in range(f64.order):
        assert f64.element(f64.coeffs(a)) == a
    assert len(f64.coeffs(0)) == 6
    with pytest.raises(GKError):
        f64.element((5,))  # digit out of range for p = 2


def test_lex_rank_is_permutation(f64):
    ranks = sorted(int(f64.lex_rank[a]) for a in range(f64.order))
    assert ranks == list(range(f64.order))
    ordered = f64.ordered_elements()
    assert len(ordered) == f64.order
    assert [f64.rank(a) for a in ordered] == list(range(f64.order))


def test_subfields(f64):
    assert sum(f64.in_subfield(a, 1) for a in range(64)) == 2
    assert sum(f64.in_subfield(a, 2) for a in range(64)) == 4
    assert sum(f64.in_subfield(a, 3) for a in range(64)) == 8
    with pytest.raises(GKError) as e:
        f64.in_subfield(0, 4)
    assert e.value.code == "INVALID_SUBFIELD"
    sub = f64.subfield_elements(2)
    assert len(sub) == 4 and 0 in sub and 1 in sub


def test_roots(f4):
    # x^2 + x vanishes exactly on the prime field
    rs = f4.roots([0, 1, 1])
    assert sorted(rs) == sorted(a for a in range(4) if f4.in_subfield(a, 1))
    with pytest.raises(GKError) as e:
        f4.roots([0, 0])
    assert e.value.code == "ZERO_POLYNOMIAL"


def test_division_by_zero(f4):
    with pytest.raises(GKError) as e:
        f4.inv(0)
    assert e.value.code == "DIVISION_BY_ZERO"


def test_field_of_order_729():
    f = make_field(3, 6)
    assert f.order == 729
    assert f.p == 3 and f.ext_degree == 6
    a = 5
    assert f.pow(a, 728) == 1 or a == 0
    assert f.frobenius(a, 6) == a
