"""The ten acceptance checks, one test each, exact tolerances.

Each test prints its PASS/FAIL line and asserts the criterion held.
Criterion 10 carries a deep-level part (the exhaustive weight <= 5 scan,
hours of runtime); it runs only with GK_DEEP=1 in the environment, and
the ci-level portion runs always.
"""

import os

import pytest

from gkcodes import acceptance

_LEVEL = "deep" if os.environ.get("GK_DEEP") == "1" else "ci"
_results: dict = {}


def _criterion(number: int, cache) -> acceptance.CriterionResult:
    if number not in _results:
        _results[number] = acceptance.run_criterion(number, cache, _LEVEL)
    r = _results[number]
    word = "PASS" if r.passed else "FAIL"
    print(f"\n{word} criterion {r.number}: {r.title} [{r.elapsed_sec}s]")
    return r


def _assert_pass(r: acceptance.CriterionResult):
    assert r.passed, (
        f"criterion {r.number} ({r.title}) failed; measured: {r.details}"
    )


def test_criterion_01_curve_census(suite_cache):
    _assert_pass(_criterion(1, suite_cache))


def test_criterion_02_divisor_supports(suite_cache):
    _assert_pass(_criterion(2, suite_cache))


def test_criterion_03_secant_census(suite_cache):
    _assert_pass(_criterion(3, suite_cache))


def test_criterion_04_conic_bound_exhaustive(suite_cache):
    _assert_pass(_criterion(4, suite_cache))


def test_criterion_05_cubic_configuration(suite_cache):
    _assert_pass(_criterion(5, suite_cache))


def test_criterion_06_distance_classification(suite_cache):
    _assert_pass(_criterion(6, suite_cache))


def test_criterion_07_constructive_equals_closed_form(suite_cache):
    _assert_pass(_criterion(7, suite_cache))


def test_criterion_08_toy_oracle_equivalence(suite_cache):
    _assert_pass(_criterion(8, suite_cache))


def test_criterion_09_mixed_support_exclusion(suite_cache):
    _assert_pass(_criterion(9, suite_cache))


def test_criterion_10_existence_witnesses(suite_cache):
    """As specified: (a) the 6-point reducible-conic support carries a
    full-support kernel vector, (b) no words of weight <= 3 exist, and at
    deep level (c) the weight <= 5 scan comes back empty, giving d = 6.

    Measured reality at l = 2, m = 2: (b) holds, (a) does not (that
    support is independent), and the exhaustive scan finds 126 weight-5
    words, so the distance is 5.  The test states the criterion as
    written and fails honestly.
    """
    _assert_pass(_criterion(10, suite_cache))
