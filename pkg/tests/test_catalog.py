from pathlib import Path

import pytest

from setorbits.catalog import (
    CatalogError,
    load_catalog,
    load_order_table,
    load_pattern_fixtures,
    required_group_names,
)
from setorbits.counting import partitions_of

KNOWN_ORDERS = {
    "PGL(2,13)": 2184,
    "PSL(4,2)": 20160,
    "AGL(4,2)": 322560,
    "PGammaL(2,16)": 16320,
    "PGammaL(3,4)": 120960,
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M22.2": 887040,
    "M23": 10200960,
    "M24": 244823040,
    "ASL(5,2)": 319979520,
    "AGL(1,23)": 506,
    "PGL(2,23)": 12144,
    "PGL(2,31)": 29760,
}

KNOWN_DEGREES = {
    "PGL(2,13)": 14,
    "PSL(4,2)": 15,
    "AGL(4,2)": 16,
    "PGammaL(2,16)": 17,
    "PGammaL(3,4)": 21,
    "M22": 22,
    "M22.2": 22,
    "M23": 23,
    "M24": 24,
    "ASL(5,2)": 32,
    "AGL(1,23)": 23,
    "PGL(2,23)": 24,
    "PGL(2,31)": 32,
    "S8": 8,
    "D4": 4,
}


def test_catalog_contents(catalog):
    assert len(catalog) == 28
    assert set(required_group_names()) == set(catalog)
    for name, order in KNOWN_ORDERS.items():
        assert catalog[name].order == order, name
    for name, degree in KNOWN_DEGREES.items():
        assert catalog[name].degree == degree, name


def test_records_are_internally_consistent(catalog):
    for record in catalog.values():
        assert record.group.order() == record.order
        assert record.group.degree == record.degree
        assert all(g.degree == record.degree for g in record.generators)
        assert all(g in record.group for g in record.generators)


def test_load_rejects_tampered_order(tmp_path):
    source = Path(__file__).resolve().parents[1] / "src/setorbits/data/groups.cat"
    text = source.read_text().replace("group M11 degree 11 order 7920",
                                      "group M11 degree 11 order 7921")
    bad = tmp_path / "groups.cat"
    bad.write_text(text)
    with pytest.raises(CatalogError):
        load_catalog(bad)


def test_load_missing_file_raises():
    with pytest.raises(OSError):
        load_catalog("/nonexistent/groups.cat")


def test_order_table():
    table = load_order_table()
    assert table.degrees == range(5, 39)
    assert table.largest[12] == 95040
    assert table.largest[24] == 244823040
    assert table.largest[32] == 319979520
    assert table.largest[34] is None
    assert all(table.largest[n] is not None for n in table.degrees if n != 34)
    assert table.second == {12: 7920}


def test_order_table_consistent_with_catalog(catalog):
    table = load_order_table()
    for name in ("M11", "M12", "M22.2", "M23", "M24", "ASL(5,2)"):
        record = catalog[name]
        assert table.largest[record.degree] == record.order


def test_pattern_fixtures():
    fixtures = load_pattern_fixtures()
    assert len(fixtures) == 77
    assert set(fixtures) == {r.parts for r in partitions_of(12)}
    assert fixtures[(12,)] == 1
    assert fixtures[(1,) * 12] == 5040
    assert fixtures[(3, 3, 2, 1, 1, 1, 1)] == 70
    assert fixtures[(2, 2, 2, 2, 1, 1, 1, 1)] == 318
    # the one row where the reference table disagrees with recomputation
    assert fixtures[(6, 2, 2, 1, 1)] == 2
