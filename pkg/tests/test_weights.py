import math

import pytest

from gkcodes import weights
from gkcodes.errors import BudgetExceeded, GKError

TOY_BUDGET = 10**7


def test_embed_support_vector():
    v = weights.embed_support_vector(6, (1, 3), (5, 9))
    assert v == [0, 5, 0, 9, 0, 0]
    with pytest.raises(GKError) as e:
        weights.embed_support_vector(6, (1, 3), (5,))
    assert e.value.code == "LENGTH_MISMATCH"


def test_toy_brute_equals_dual(toy_code):
    dual = weights.dual_enumeration_Aw(toy_code, budget=TOY_BUDGET)
    assert dual[0] == 1
    assert sum(dual.values()) == toy_code.field.order ** toy_code.dual_dimension
    for w in range(0, 9):
        bf = weights.brute_force_Aw(toy_code, w, budget=TOY_BUDGET)
        assert bf.A_w == dual.get(w, 0), f"disagreement at w={w}"


def test_toy_mitm_matches(toy_code):
    for w in (2, 3, 4):
        mitm = weights.low_weight_search(toy_code, w, strategy="meet_in_middle")
        brute = weights.brute_force_Aw(toy_code, w, budget=TOY_BUDGET)
        assert mitm.counts.get(w, 0) == brute.A_w


def test_jw_relation(toy_code):
    assert weights.count_Jw_solutions(toy_code, 0) == 0
    for w in (1, 2, 3, 4):
        jw = weights.count_Jw_solutions(toy_code, w, budget=TOY_BUDGET)
        aw = weights.brute_force_Aw(toy_code, w, budget=TOY_BUDGET).A_w
        assert jw == aw * math.factorial(w)


def test_full_support_kernel_count_toy(toy_code):
    # the whole support: every dual word of full weight
    sw = weights.full_support_kernel_count(toy_code, tuple(range(8)))
    dual = weights.dual_enumeration_Aw(toy_code, budget=TOY_BUDGET)
    assert sw.full_support_count == dual.get(8, 0)
    with pytest.raises(GKError) as e:
        weights.full_support_kernel_count(toy_code, (0, 0, 1))
    assert e.value.code == "DUPLICATE_POINTS"
    with pytest.raises(GKError) as e:
        weights.full_support_kernel_count(toy_code, tuple(range(17)))
    assert e.value.code == "SUPPORT_TOO_LARGE"


def test_closed_form_values():
    # l=3: (l+1)(l^5-l^3)(l^6-1) C(7,d)
    base = 4 * (243 - 27) * 728
    assert weights.closed_form_Ad(3, 4) == base * math.comb(7, 4)
    assert weights.closed_form_Ad(3, 4) == 22014720
    assert weights.closed_form_Ad(3, 5) == 13208832
    assert weights.closed_form_Ad(3, 6) == 4402944
    assert weights.closed_form_Ad(3, 8) == 0  # beyond the secant size
    assert weights.closed_form_Ad(2, 6) == 0


def test_lower_bound_examples():
    lb = weights.lower_bound_Ad(4, 9)
    assert lb.value == 14054040000
    assert lb.in_open_range
    lb2 = weights.lower_bound_Ad(3, 7)
    assert not lb2.in_open_range  # m = 5 sits on the window edge


def test_constructive_matches_scan_l2(code2m2):
    """No weight-3 words at l=2, m=2: construction and scan agree on zero."""
    rep = weights.constructive_count(code2m2, 3)
    assert rep.A_w == 0
    assert rep.exhaustive  # 3 <= l^2-l+1 and 3 <= 2m+3 certify coverage
    census = weights.secant_subset_census(code2m2, 3)
    assert census["secants"] == 72
    assert census["subsets"] == 72
    assert census["histogram"] == {0: 72}


def test_constructive_l3_smallest(code3m2):
    rep = weights.constructive_count(code3m2, 4)
    assert rep.A_w == 22014720
    assert rep.exhaustive
    census = weights.secant_subset_census(code3m2, 4)
    assert census["histogram"] == {728: 864 * math.comb(7, 4)}


def test_weight5_witnesses(code2m2):
    """The two known weight-5 supports carry 63 projective words each."""
    for support in ((0, 109, 110, 111, 112), (0, 112, 221, 222, 223)):
        sw = weights.full_support_kernel_count(code2m2, support)
        assert sw.kernel_dim == 1
        assert sw.full_support_count == 63
        vec = weights.embed_support_vector(code2m2.n, sw.support,
                                           sw.sample_vector)
        assert code2m2.is_dual_codeword(vec)


def test_exhaustive_search_w2(code2m2):
    sr = weights.low_weight_search(code2m2, 2, strategy="exhaustive")
    assert sr.counts == {1: 0, 2: 0}
    assert set(sr.absence_certified) == {1, 2}
    assert sr.covered


def test_search_budget_abort(code2m2):
    with pytest.raises(BudgetExceeded) as e:
        weights.low_weight_search(code2m2, 3, strategy="exhaustive",
                                  budget=100)
    assert "witnesses" in (e.value.partial or {})


def test_exclusion_certificates(ctx3, code3m2):
    # support on one secant with a small group: excluded by the z step
    x0, y0, idx = ctx3.vertical_secants()[0]
    cert = weights.support_exclusion_certificate(ctx3, 2, idx[:3])
    assert cert.excluded
    # a full secant at m=2: group size 7 > m+1, not excluded by this test
    cert2 = weights.support_exclusion_certificate(ctx3, 2, idx[:4])
    assert not cert2.excluded
    sw = weights.full_support_kernel_count(code3m2, idx[:4])
    assert sw.full_support_count == 728  # and indeed words exist there


def test_mixed_sample_small(ctx3, code3m2):
    out = weights.mixed_support_sample(ctx3, code3m2, 4, trials=20000,
                                       seed=123)
    assert out["violations"] == 0
    assert out["trials"] == 20000
