import pytest

from commgraph.catalog import (
    Catalog,
    CatalogEntry,
    load_catalog_text,
    parse_catalog_text,
    serialize_catalog,
)
from commgraph.errors import (
    DuplicateID,
    IncompleteCoverage,
    OrderValidationFailed,
    ParseError,
)

GOOD = """
# tiny catalog
#coverage 6 complete
#coverage 24 partial
6 1 3 | (1 2), (1 2 3)
6 2 6 | (1 2 3 4 5 6)
24 12 4 | (1 2), (1 2 3 4)
"""


def test_parse_and_validate():
    cat = load_catalog_text(GOOD)
    assert [e.gid for e in cat.entries] == [(6, 1), (6, 2), (24, 12)]
    assert cat.coverage == {6: "complete", 24: "partial"}
    assert cat.is_complete(6) and not cat.is_complete(24)
    s4 = cat.get(24, 12).build()
    assert s4.order == 24


def test_round_trip_is_identical():
    cat = load_catalog_text(GOOD)
    text = serialize_catalog(cat)
    again = load_catalog_text(text)
    assert [e.gid for e in again.entries] == [e.gid for e in cat.entries]
    assert [e.generators for e in again.entries] == [e.generators for e in cat.entries]
    assert serialize_catalog(again) == text


def test_order_validation_failure():
    bad = "6 1 3 | (1 2 3)\n"  # declares order 6 but generates order 3
    with pytest.raises(OrderValidationFailed) as err:
        load_catalog_text(bad)
    assert err.value.computed == 3


def test_duplicate_id():
    with pytest.raises(DuplicateID):
        load_catalog_text("2 1 2 | (1 2)\n2 1 2 | (1 2)\n")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        load_catalog_text("# fine\n6 1 3 (1 2)\n")
    assert err.value.lineno == 2
    with pytest.raises(ParseError):
        load_catalog_text("#coverage six complete\n")
    with pytest.raises(ParseError):
        load_catalog_text("6 1 3 | (1 99)\n")


def test_empty_catalog():
    cat = load_catalog_text("")
    assert cat.entries == []


def test_identity_group_entry():
    cat = load_catalog_text("#coverage 1 complete\n1 1 1 |\n")
    grp = cat.get(1, 1).build()
    assert grp.order == 1


def test_incomplete_coverage_error():
    from commgraph.scans import scan_noncograph

    cat = load_catalog_text(GOOD)
    with pytest.raises(IncompleteCoverage):
        scan_noncograph(cat, 36, orders=[24])


def test_scan_on_tiny_catalog():
    from commgraph.scans import scan_noncograph

    cat = load_catalog_text(GOOD)
    rows = scan_noncograph(cat, 36)  # only order 6 is complete
    assert len(rows) == 1
    assert rows[0].order == 6 and rows[0].count == 0


# -- bundled catalog -----------------------------------------------------


def test_bundled_catalog_counts(catalog):
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1,
                18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2,
                26: 2, 27: 5, 28: 4, 29: 1, 30: 4, 31: 1, 32: 51, 33: 1,
                34: 2, 35: 1, 36: 14, 48: 52, 54: 15, 60: 13, 64: 267,
                72: 50}
    got = {}
    for e in catalog.entries:
        got[e.order] = got.get(e.order, 0) + 1
    assert got == expected
    for order in expected:
        assert catalog.is_complete(order)


def test_bundled_catalog_well_known_entries(catalog):
    import numpy as np

    s4 = catalog.get(24, 12).build()
    assert s4.order == 24 and len(s4.center()) == 1
    assert sorted(set(s4.element_orders().tolist())) == [1, 2, 3, 4]
    a5 = catalog.get(60, 5).build()
    assert a5.order == 60
    assert sorted(set(a5.element_orders().tolist())) == [1, 2, 3, 5]
    s3s3 = catalog.get(36, 10).build()
    assert s3s3.order == 36 and len(s3s3.center()) == 1
    plus = catalog.get(32, 49).build()
    minus = catalog.get(32, 50).build()
    assert int((plus.element_orders() == 2).sum()) == 19
    assert int((minus.element_orders() == 2).sum()) == 11
    for grp in (plus, minus):
        assert len(grp.center()) == 2
        q = grp.quotient(grp.center())
        assert all(q.element_order(g) <= 2 for g in range(q.order))


def test_bundled_catalog_round_trip(catalog):
    from commgraph.catalog import serialize_catalog

    text = serialize_catalog(catalog)
    again = load_catalog_text(text, validate=False)
    assert len(again.entries) == len(catalog.entries)
    assert serialize_catalog(again) == text
