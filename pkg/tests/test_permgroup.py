import pytest

from setorbits.permgroup import (
    Permutation,
    format_cycles,
    parse_cycles,
    schreier_sims,
)


def s4():
    return schreier_sims([parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)])


def test_parse_format_round_trip():
    for text in ["(1,2,3)(4,5)", "(1,2)", "(2,4)(3,6)", "(1,5,4,3,2)"]:
        assert format_cycles(parse_cycles(text, 6)) == text
    assert format_cycles(Permutation.identity(3)) == "()"
    assert parse_cycles("()", 5) == Permutation.identity(5)
    assert parse_cycles(" ( 1 , 2 ) ", 4) == parse_cycles("(1,2)", 4)


def test_parse_rejects_malformed_input():
    with pytest.raises(ValueError):
        parse_cycles("(1,2", 4)
    with pytest.raises(ValueError):
        parse_cycles("(0,1)", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1,5)", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1,x)", 4)
    with pytest.raises(ValueError):
        parse_cycles("", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1,2)(2,3)", 4)


def test_composition_applies_right_factor_first():
    p = parse_cycles("(1,2)", 4)
    q = parse_cycles("(2,3,4)", 4)
    for i in range(4):
        assert (p * q)(i) == p(q(i))
    with pytest.raises(ValueError):
        p * Permutation.identity(5)


def test_inverse_and_identity():
    g = parse_cycles("(1,3,5)(2,4)", 6)
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()
    assert Permutation.identity(5).is_identity()
    assert not g.is_identity()
    assert g.moved_points() == [0, 1, 2, 3, 4]


def test_cycle_type_includes_fixed_points():
    assert parse_cycles("(1,2,3,4)", 6).cycle_type() == (4, 1, 1)
    assert parse_cycles("(1,2)(3,4)", 6).cycle_type() == (2, 2, 1, 1)
    assert Permutation.identity(4).cycle_type() == (1, 1, 1, 1)


def test_from_cycles_rejects_repeated_point():
    with pytest.raises(ValueError):
        Permutation.from_cycles([[0, 1], [1, 2]], 4)


def test_schreier_sims_known_orders():
    assert s4().order() == 24
    a4 = schreier_sims([parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)])
    assert a4.order() == 12
    c4 = schreier_sims([parse_cycles("(1,2,3,4)", 4)])
    assert c4.order() == 4
    d4 = schreier_sims([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)])
    assert d4.order() == 8
    a5 = schreier_sims([parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2,3)", 5)])
    assert a5.order() == 60


def test_schreier_sims_rejects_identity_only():
    with pytest.raises(ValueError):
        schreier_sims([Permutation.identity(3)])


def test_membership_and_sift():
    group = s4()
    a4 = schreier_sims([parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)])
    transposition = parse_cycles("(1,2)", 4)
    assert transposition in group
    assert transposition not in a4
    assert group.sift(parse_cycles("(1,3)(2,4)", 4)).is_identity()
    assert not a4.sift(transposition).is_identity()


def test_elements_enumerates_each_member_once():
    group = schreier_sims([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)])
    members = list(group.elements())
    assert len(members) == 8
    assert len(set(members)) == 8
    assert all(g in group for g in members)


def test_coset_slices_partition_the_group():
    group = s4()
    first = group.base[0]
    seen = set()
    for image in sorted(group.transversals[0]):
        coset = list(group.coset_elements(image))
        assert len(coset) == 6
        assert all(g(first) == image for g in coset)
        seen.update(coset)
    assert len(seen) == 24


def test_stabilizer_generators_generate_the_stabilizer():
    group = s4()
    gens = group.stabilizer_generators(1)
    assert all(g(group.base[0]) == group.base[0] for g in gens)
    assert schreier_sims(gens).order() == 6
    deeper = group.stabilizer_generators(2)
    assert schreier_sims(deeper).order() == 2
