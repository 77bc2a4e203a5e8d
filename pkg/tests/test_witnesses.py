import pytest

from commgraph.errors import BadQ
from commgraph.gf import GF
from commgraph.witnesses import sl3_p4_witness, su3_p4_witness

PATH = {(0, 1), (1, 2), (2, 3)}


@pytest.mark.parametrize("q", [3, 5, 7, 8, 9])
def test_sl3_witness(q):
    mats, report = sl3_p4_witness(q)
    assert report.is_induced_p4
    assert set(report.commuting_pairs) == PATH
    assert report.determinants_ok
    assert report.nonscalar_ok
    one = GF(q).one()
    # the chosen diagonal entry is valid and b = a^-2
    a = GF(q).from_int(report.a_index)
    assert a ** 3 != one
    assert GF(q).from_int(report.b_index) == a ** (-2)


@pytest.mark.parametrize("q", [2, 4])
def test_sl3_excluded(q):
    with pytest.raises(BadQ):
        sl3_p4_witness(q)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_su3_witness(q):
    mats, report = su3_p4_witness(q)
    assert report.is_induced_p4
    assert set(report.commuting_pairs) == PATH
    assert report.hermitian_ok and report.determinants_ok and report.nonscalar_ok
    field = GF(q * q)
    a = field.from_int(report.a_index)
    assert a ** (q + 1) == field.one()
    assert a ** 3 != field.one()


def test_su3_excluded():
    with pytest.raises(BadQ):
        su3_p4_witness(2)


def test_su3_gf9_entry_constraints():
    # for q = 3 the canonical pick is -1 (norm 1, not a cube root of unity);
    # an order-4 element works equally well and must validate too
    _, report = su3_p4_witness(3)
    field = GF(9)
    a = field.from_int(report.a_index)
    assert a.multiplicative_order() in (2, 4)
    order4 = next(x for x in field.elements()
                  if not x.is_zero() and x.multiplicative_order() == 4)
    assert order4 ** 4 == field.one() and order4 ** 3 != field.one()


def test_sl3_matrices_live_in_special_linear():
    mats, _ = sl3_p4_witness(7)
    one = GF(7).one()
    for m in mats:
        assert m.det() == one


def test_su3_even_characteristic_entries():
    # in characteristic 2 the printed -1 entries coincide with 1; the
    # commutation pattern and unitarity still hold
    mats, report = su3_p4_witness(4)
    assert report.is_induced_p4
    g1 = mats[0]
    assert g1.rows[2][2] == GF(16).one()
