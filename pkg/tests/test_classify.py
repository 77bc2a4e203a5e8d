import numpy as np
import pytest

from commgraph import families
from commgraph.classify import (
    classify_group,
    is_ac_group,
    is_ca_group,
    is_generalized_dihedral_odd,
    omega_subgroup,
    verify_frobenius,
)
from commgraph.errors import NotASubgroup, NotFrobenius
from commgraph.recognition import ALL_CLASSES, CHORDAL, COGRAPH


def test_omega_elementary_abelian_two_group():
    om, abelian = omega_subgroup(families.abelian_product([2, 2, 2]))
    assert list(om) == [0] and abelian


def test_omega_d18_is_rotations():
    d18 = families.dihedral(9)
    om, abelian = omega_subgroup(d18)
    assert len(om) == 9 and abelian
    # oracle: the rotations are exactly the even indices in the table layout
    assert list(om) == [2 * a for a in range(9)]


def test_omega_s4_everything():
    om, abelian = omega_subgroup(families.symmetric(4))
    assert len(om) == 24 and not abelian


def test_gd_odd_recognition():
    ok, a = is_generalized_dihedral_odd(families.generalized_dihedral([9]))
    assert ok and len(a) == 9
    ok, _ = is_generalized_dihedral_odd(families.dihedral(6))
    assert not ok  # the rotation part has even order
    ok, _ = is_generalized_dihedral_odd(families.symmetric(4))
    assert not ok
    ok, _ = is_generalized_dihedral_odd(families.cyclic(9))
    assert not ok  # abelian groups are excluded


def test_ac_groups():
    assert is_ac_group(families.generalized_quaternion(2))[0]
    for factors in ([5], [2, 6], [3, 3]):
        assert is_ac_group(families.generalized_dihedral(list(factors)))[0]
    ok, counterexample = is_ac_group(families.symmetric(4))
    assert not ok
    # the counterexample must be a double transposition (order 2, centralizer 8)
    s4 = families.symmetric(4)
    assert s4.element_order(counterexample) == 2
    assert len(s4.centralizer(counterexample)) == 8


def test_ca_groups():
    assert is_ca_group(families.cyclic(12))
    assert is_ca_group(families.psl2(4))
    assert not is_ca_group(families.generalized_quaternion(2))


def test_frobenius_f20():
    f20 = families.frobenius20()
    orders = f20.element_orders()
    h = f20.subgroup_closure([int(np.nonzero(orders == 4)[0][0])])
    rec = verify_frobenius(f20, h)
    assert rec.kernel_order == 5 and rec.complement_order == 4
    korders = sorted(f20.element_order(k) for k in rec.kernel)
    assert korders == [1, 5, 5, 5, 5]


def test_frobenius_d10():
    d10 = families.generalized_dihedral([5])
    rec = verify_frobenius(d10, d10.subgroup_closure([1]))
    assert rec.kernel_order == 5


def test_frobenius_rejects_s4_point_stabilizer():
    s4 = families.symmetric(4)
    fix4 = [g for g in range(24) if s4.images[g][3] == 3]
    with pytest.raises(NotFrobenius):
        verify_frobenius(s4, s4.subgroup_closure(fix4))


def test_frobenius_rejects_non_subgroup():
    f20 = families.frobenius20()
    with pytest.raises(NotASubgroup):
        verify_frobenius(f20, [0, 1])


def test_classify_s4():
    report = classify_group(families.symmetric(4))
    assert {c: report.member(c) for c in ALL_CLASSES} == {
        "split": False, "threshold": False, "2k2free": False,
        "cograph": False, "chordal": True}
    assert not report.is_abelian and not report.is_ac
    assert report.center_size == 1


def test_classify_abelian_all_true():
    report = classify_group(families.cyclic(6))
    assert all(report.member(c) for c in ALL_CLASSES)


def test_classify_gd_z15():
    report = classify_group(families.generalized_dihedral([15]))
    assert all(report.member(c) for c in ALL_CLASSES)
    assert report.is_generalized_dihedral_odd


def test_classify_scope_recorded():
    report = classify_group(families.symmetric(3), scope="all")
    assert report.scope == "all"
    assert all(report.member(c) for c in (COGRAPH, CHORDAL))


def test_report_serialization_schema():
    report = classify_group(families.symmetric(4), label="S4")
    text = report.to_text()
    assert text.startswith("schema classreport/1\n")
    assert "group S4" in text
    assert "class cograph non-member witness P4" in text
    assert "class chordal member certificate-ok" in text


def test_report_validator_catches_inconsistency():
    report = classify_group(families.symmetric(4))
    report.is_abelian = True  # corrupt the report
    with pytest.raises(RuntimeError):
        report.validate()
