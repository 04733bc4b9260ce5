"""Case lists that fence the infimum from below, across every branch of the
induction: primitive rates, excluded base degrees, induced tops over the
degree-24 base, top-degree budgets, and the cube-order ceiling."""

from collections import Counter
from fractions import Fraction

import pytest

from setorbits import enclosure as enc
from setorbits.bounds import (
    CaseReport,
    TOP_BUDGET_TEXT,
    log2_alpha,
    primitive_order_bound,
    star_check,
    verify_cube_order_bound,
    verify_excluded_bases,
    verify_m24_tops,
    verify_primitive_rates,
    verify_top_degree_budget,
)
from setorbits.catalog import load_order_table
from setorbits.enclosure import Enclosure

GROUND_COUNTS = (2015969622039961, 2017737434447329)


def beta_band():
    # spans the level-2 rate from the corrected ground count up to the
    # rate implied by the reference count, so passing against the hull
    # settles the question for both readings
    return enc.hull(Enclosure.from_decimal("0.171554147713042320"),
                    Enclosure.from_decimal("0.171558538515488"))


def all_reports(precision=enc.DEFAULT_PRECISION):
    table = load_order_table()
    beta = beta_band()
    reports = []
    reports += verify_primitive_rates(beta, exact_32=382, precision=precision)
    reports += verify_excluded_bases(table, beta, precision=precision)
    reports += verify_m24_tops(table, beta, precision=precision)
    reports += verify_top_degree_budget(table, ground_counts=GROUND_COUNTS,
                                        precision=precision)
    reports += verify_cube_order_bound(table, precision=precision)
    return reports


def test_every_case_is_decided():
    reports = all_reports()
    by_id = {r.case_id: r for r in reports}
    assert len(reports) == len(by_id) == 205
    assert not [r.case_id for r in reports if r.verdict == "FAIL"]
    no_data = {r.case_id for r in reports if r.verdict == "NO-DATA"}
    assert no_data == {"top-budget.m=34", "cube-bound.n=34"}


def test_family_sizes():
    families = Counter(r.case_id.split(".")[0] for r in all_reports())
    assert families == Counter({"primitive-rate": 25, "excluded-base": 73,
                                "m24-top": 32, "top-budget": 41,
                                "cube-bound": 34})


def test_key_rows_present():
    by_id = {r.case_id: r for r in all_reports()}
    for case_id in ("primitive-rate.n=24", "primitive-rate.n>=25",
                    "primitive-rate.n=32", "excluded-base.m=32",
                    "excluded-base.m>=25", "excluded-base.m=6",
                    "m24-top.m1=2", "m24-top.m1>=33",
                    "top-budget.threshold-valid", "top-budget.m=4.excluded",
                    f"top-budget.slack.A={GROUND_COUNTS[0]}",
                    f"top-budget.slack.A={GROUND_COUNTS[1]}",
                    "cube-bound.n=5"):
        assert case_id in by_id, case_id
    assert by_id["top-budget.m=4.excluded"].relation == ">"
    assert by_id["top-budget.threshold-valid"].lhs.contains(
        Fraction(TOP_BUDGET_TEXT))


def test_tightest_margins_are_positive():
    by_id = {r.case_id: r for r in all_reports()}
    pinch = by_id["m24-top.m1=8"]
    margin = pinch.lhs.lo_fraction() - pinch.rhs.hi_fraction()
    assert 0 < margin < Fraction(1, 1000)
    budget = by_id["top-budget.m=12"]
    margin = budget.rhs.lo_fraction() - budget.lhs.hi_fraction()
    assert 0 < margin < Fraction(1, 10)


def test_verdicts_survive_doubled_precision():
    base = {r.case_id: r.verdict for r in all_reports()}
    fine = {r.case_id: r.verdict for r in all_reports(precision=512)}
    assert base == fine


def test_primitive_order_bound_selects_best_clause():
    assert primitive_order_bound(5).contains(3 ** 5)
    assert primitive_order_bound(25).contains(2 ** 19)
    assert primitive_order_bound(32).contains(2 ** 32)
    hi = primitive_order_bound(32).hi_fraction()
    assert hi < Fraction(2 ** 33)
    with pytest.raises(ValueError):
        primitive_order_bound(4)


def test_star_check():
    beta = beta_band()
    strong = star_check(35, 14, beta)
    assert strong.satisfied
    assert strong.relation == ">="
    assert strong.case_id == "star.m=14"
    weak = star_check(2, 14, beta)
    assert not weak.satisfied
    with pytest.raises(ValueError):
        star_check(35, 1, beta)


def test_log2_alpha_is_a_third_of_log2_24():
    tripled = enc.scale(log2_alpha(), 3)
    reference = enc.log2_of(24)
    assert tripled.lo <= reference.hi and reference.lo <= tripled.hi


def test_case_report_verdicts():
    passing = CaseReport("x", ">=", None, None, True)
    failing = CaseReport("x", ">=", None, None, False)
    missing = CaseReport("x", "no-data", None, None, False)
    assert passing.verdict == "PASS"
    assert failing.verdict == "FAIL"
    assert missing.verdict == "NO-DATA"
