import math

import pytest

from setorbits import counting
from setorbits.counting import (
    BudgetError,
    CycleIndex,
    InconsistencyError,
    brute_force_multiset_orbits,
    brute_force_set_orbits,
    cycle_index,
    exact_div,
    multiset_orbit_count,
    partitions_of,
    set_orbit_count,
)
from setorbits.permgroup import parse_cycles, schreier_sims


def group_of(*texts, degree):
    return schreier_sims([parse_cycles(t, degree) for t in texts])


def test_exact_div():
    assert exact_div(24, 4, "x") == 6
    assert exact_div(0, 7, "x") == 0
    with pytest.raises(InconsistencyError, match="set orbit smoke"):
        exact_div(8, 3, "set orbit smoke")


def test_partitions_of_reverse_lex():
    parts = [r.parts for r in partitions_of(4)]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(12)) == 77
    rec = next(r for r in partitions_of(6) if r.parts == (2, 2, 1, 1))
    assert rec.block_count == 4
    assert rec.symmetry_factor == 4  # 2! for the pair of 2s, 2! for the 1s


def test_cycle_index_census_small():
    c4 = cycle_index(group_of("(1,2,3,4)", degree=4))
    assert dict(c4.terms) == {(1, 1, 1, 1): 1, (2, 2): 1, (4,): 2}
    s3 = cycle_index(group_of("(1,2)", "(1,2,3)", degree=3))
    assert dict(s3.terms) == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}
    assert s3.group_order == 6


def test_cycle_index_is_cached():
    sgs = group_of("(1,2,3,4,5)", degree=5)
    assert cycle_index(sgs) is cycle_index(sgs)


def test_cycle_index_rejects_bad_census():
    with pytest.raises(ValueError):
        CycleIndex(3, 2, {(2,): 1, (1, 1, 1): 1})  # term does not sum to degree
    with pytest.raises((ValueError, InconsistencyError)):
        CycleIndex(3, 7, {(1, 1, 1): 1, (3,): 2})  # counts do not reach the order


def test_set_orbit_count_small():
    c4 = cycle_index(group_of("(1,2,3,4)", degree=4))
    assert set_orbit_count(c4) == 6
    d4 = cycle_index(group_of("(1,2,3,4)", "(1,3)", degree=4))
    assert set_orbit_count(d4) == 6
    s3 = cycle_index(group_of("(1,2)", "(1,2,3)", degree=3))
    assert set_orbit_count(s3) == 4


def test_set_orbit_count_refuses_inexact_division():
    # internally consistent census that no actual group produces
    fake = CycleIndex(2, 3, {(1, 1): 1, (2,): 2})
    with pytest.raises(InconsistencyError, match="inexact division"):
        set_orbit_count(fake)


def test_multiset_orbit_count_small():
    c4 = cycle_index(group_of("(1,2,3,4)", degree=4))
    assert multiset_orbit_count(c4, (2, 2)) == 2
    assert multiset_orbit_count(c4, (2, 1, 1)) == 3
    assert multiset_orbit_count(c4, (1, 1, 1, 1)) == 6
    assert multiset_orbit_count(c4, (4,)) == 1
    s5 = cycle_index(group_of("(1,2)", "(1,2,3,4,5)", degree=5))
    for rec in partitions_of(5):
        assert multiset_orbit_count(s5, rec.parts) == 1


def test_two_color_patterns_sum_to_set_orbits():
    """(k, n-k) colorings are k-subsets, so summing over k recovers s(G)."""
    sgs = group_of("(1,2,3,4)", "(1,3)", degree=4)
    ci = cycle_index(sgs)
    total = sum(multiset_orbit_count(ci, tuple(sorted((k, 4 - k), reverse=True))
                                     if 0 < k < 4 else (4,))
                for k in range(5))
    assert total == set_orbit_count(ci)


def test_brute_force_set_orbits_agrees():
    for texts, degree in [
        (("(1,2,3,4)",), 4),
        (("(1,2,3,4)", "(1,3)"), 4),
        (("(1,2,3)", "(2,3,4)"), 4),
        (("(1,2,3,4,5)", "(1,2)"), 5),
        (("(1,2,3,4,5,6,7)", "(1,2)"), 7),
    ]:
        sgs = group_of(*texts, degree=degree)
        assert brute_force_set_orbits(sgs) == set_orbit_count(cycle_index(sgs))


def test_brute_force_multiset_orbits_agrees():
    sgs = group_of("(1,2,3,4,5)", "(1,2,3)", degree=5)
    ci = cycle_index(sgs)
    for rec in partitions_of(5):
        assert brute_force_multiset_orbits(sgs, rec.parts) == \
            multiset_orbit_count(ci, rec.parts)


def test_brute_force_budget_errors():
    c13 = group_of("(1,2,3,4,5,6,7,8,9,10,11,12,13)", degree=13)
    with pytest.raises(BudgetError):
        brute_force_multiset_orbits(c13, (13,))
    s4 = group_of("(1,2)", "(1,2,3,4)", degree=4)
    with pytest.raises(BudgetError):
        brute_force_multiset_orbits(s4, (1, 1, 1, 1), max_arrangements=10)


def test_brute_force_validates_partition():
    s4 = group_of("(1,2)", "(1,2,3,4)", degree=4)
    with pytest.raises(ValueError):
        brute_force_multiset_orbits(s4, (3, 3))


def test_disputed_degree_12_pattern_against_brute_force(catalog):
    """The bundled reference table disagrees with the computed value on one
    partition of 12; the explicit arrangement flood settles it at 3."""
    sgs = catalog["M12"].group
    ci = cycle_index(sgs)
    assert multiset_orbit_count(ci, (6, 2, 2, 1, 1)) == 3
    assert brute_force_multiset_orbits(sgs, (6, 2, 2, 1, 1)) == 3


def test_workers_produce_identical_census():
    sgs = group_of("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
                   degree=11)
    assert sgs.order() == 7920
    serial = cycle_index(sgs, workers=1)
    counting._cycle_index_cache.clear()
    parallel = cycle_index(sgs, workers=3)
    assert dict(serial.terms) == dict(parallel.terms)
    counting._cycle_index_cache.clear()
