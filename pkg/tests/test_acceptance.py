"""Acceptance suite: every check once, in order, within its time budget.

Run with -s (or -rA) to see the one-line PASS/FAIL verdicts directly.
"""

import pytest

from permbinom.selftest import BUDGET_MS, CHECK_ORDER, AcceptanceSuite


@pytest.fixture(scope="session")
def suite():
    # Shared so the two sweeps are computed once and reused by later checks.
    return AcceptanceSuite()


def _run(suite, name):
    result = suite.run_check(name)
    verdict = "PASS" if result.passed else "FAIL"
    print(f"{verdict} {name} ({result.elapsed_ms / 1000:.1f}s): {result.detail}")
    assert result.passed, f"{name}: {result.detail}"
    budget = BUDGET_MS.get(name)
    if budget is not None:
        assert result.elapsed_ms <= budget, f"{name} took {result.elapsed_ms} ms, budget {budget}"


def test_criterion_01_exact_case_f73(suite):
    _run(suite, "exact-case-f73")


def test_criterion_02_kappa_table(suite):
    _run(suite, "kappa-table")


def test_criterion_03_r2_sweep(suite):
    _run(suite, "r2-sweep")


def test_criterion_04_r3_sweep(suite):
    _run(suite, "r3-sweep")


def test_criterion_05_point_congruence(suite):
    _run(suite, "point-congruence")


def test_criterion_06_extension_counts(suite):
    _run(suite, "extension-counts")


def test_criterion_07_char2_sums(suite):
    _run(suite, "char2-sums")


def test_criterion_08_bounds_containment(suite):
    _run(suite, "bounds-containment")


def test_criterion_09_sharpness_witnesses(suite):
    _run(suite, "sharpness-witnesses")


def test_criterion_10_character_identities(suite):
    _run(suite, "character-identities")


def test_check_order_is_complete():
    assert len(CHECK_ORDER) == 10
    names = {t.removeprefix("test_criterion_")[3:].replace("_", "-") for t in [
        "test_criterion_01_exact_case_f73",
        "test_criterion_02_kappa_table",
        "test_criterion_03_r2_sweep",
        "test_criterion_04_r3_sweep",
        "test_criterion_05_point_congruence",
        "test_criterion_06_extension_counts",
        "test_criterion_07_char2_sums",
        "test_criterion_08_bounds_containment",
        "test_criterion_09_sharpness_witnesses",
        "test_criterion_10_character_identities",
    ]}
    assert names == set(CHECK_ORDER)
