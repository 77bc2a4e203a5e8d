import math

import numpy as np
import pytest

from commgraph import families
from commgraph.errors import (
    BadParameter,
    NotCentral,
    OrderMismatch,
    SizeCap,
    UnsupportedParameter,
)
from commgraph.families import (
    FamilySpec,
    build_family,
    central_product,
    direct_product,
    family_spec_to_string,
    parse_family,
)


def test_family_string_round_trip():
    for text in ("Z12", "Z2xZ6", "D14", "D(Z3xZ9)", "Q16", "S5", "A6",
                  "PSL2(7)", "Sz(8)", "D8oD8", "D8oQ8", "F20"):
        spec = parse_family(text)
        assert parse_family(family_spec_to_string(spec)) == spec


def test_parse_family_rejects_garbage():
    for text in ("X9", "D9", "Q6", "PSL3(2)", ""):
        with pytest.raises(BadParameter):
            parse_family(text)


def test_family_orders():
    cases = {
        "Z12": 12, "Z2xZ6": 12, "D14": 14, "D(Z9)": 18, "D(Z2xZ6)": 24,
        "Q16": 16, "S4": 24, "S6": 720, "A5": 60, "A8": 20160,
        "PSL2(4)": 60, "PSL2(7)": 168, "PSL2(9)": 360, "Sz(2)": 20,
        "D8oD8": 32, "D8oQ8": 32, "F20": 20,
    }
    for text, order in cases.items():
        assert build_family(text).order == order, text


def test_psl2_orders_formula():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        expected = q * (q * q - 1) // math.gcd(2, q - 1)
        assert families.psl2(q).order == expected


def test_generalized_dihedral_observation():
    # outside elements are involutions; abelian iff elementary abelian 2
    for factors in ([5], [3, 3], [2, 6], [2, 2]):
        g = families.generalized_dihedral(list(factors))
        m = g.order // 2
        assert all(g.element_order(2 * a + 1) == 2 for a in range(m))
        assert g.is_abelian() == all(f in (1, 2) for f in factors)


def test_gd_center_of_z2xz6():
    assert len(families.generalized_dihedral([2, 6]).center()) == 4


def test_dihedral_is_special_case_of_gd():
    d6 = families.dihedral(3)
    gd = families.generalized_dihedral([3])
    assert np.array_equal(d6.table, gd.table)


def test_quaternion_relations():
    for m in (2, 3, 5, 8):
        q = families.generalized_quaternion(m)
        assert q.order == 4 * m
        # x^m = y^2 and the center is {e, x^m}
        y = 1
        x = 2
        xm = 0
        for _ in range(m):
            xm = q.multiply(xm, x)
        assert q.multiply(y, y) == xm
        assert list(q.center()) == [0, 2 * m]
        assert all(q.element_order(2 * i + 1) == 4 for i in range(2 * m))


def test_quaternion_parameter_check():
    with pytest.raises(BadParameter):
        families.generalized_quaternion(1)


def test_symmetric_alternating_bounds():
    with pytest.raises(UnsupportedParameter):
        families.symmetric(7)
    with pytest.raises(UnsupportedParameter):
        families.alternating(9)
    with pytest.raises(BadParameter):
        families.alternating(2)


def test_direct_product_indexing():
    h = families.cyclic(2)
    k = families.cyclic(3)
    p = direct_product(h, k)
    assert p.order == 6 and p.is_abelian()
    # element (a, b) at index a*|K| + b, componentwise product
    for a1 in range(2):
        for b1 in range(3):
            for a2 in range(2):
                for b2 in range(3):
                    got = p.multiply(a1 * 3 + b1, a2 * 3 + b2)
                    assert got == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3


def test_direct_product_s3s3():
    p = direct_product(families.symmetric(3), families.symmetric(3))
    assert p.order == 36 and not p.is_abelian()


def test_direct_product_large_uses_permutations():
    a6 = families.alternating(6)
    p = direct_product(a6, families.cyclic(31))
    assert p.order == 360 * 31
    assert p.backend == "permutation"
    # canonical indexing preserved: (h, k) at h*|K| + k
    assert p.multiply(1 * 31 + 5, 0 * 31 + 26) == p.multiply(31 + 5, 26)
    h, k = 3, 7
    hk = h * 31 + k
    assert np.array_equal(p.images[hk][:a6.degree], a6.images[h])


def test_central_product_basics():
    d8 = families.dihedral(4)
    q8 = families.generalized_quaternion(2)
    plus = families.extraspecial_plus_32()
    minus = families.extraspecial_minus_32()
    for g in (plus, minus):
        assert g.order == 32
        assert len(g.center()) == 2
    # non-isomorphic by involution count
    assert int((plus.element_orders() == 2).sum()) == 19
    assert int((minus.element_orders() == 2).sum()) == 11


def test_central_product_rejects_non_central():
    d8 = families.dihedral(4)
    with pytest.raises(NotCentral):
        central_product(d8, d8, 1, 1)  # a reflection is not central


def test_central_product_order_mismatch():
    z4 = families.cyclic(4)
    z2 = families.cyclic(2)
    with pytest.raises(OrderMismatch):
        central_product(z4, z2, 1, 1)  # orders 4 vs 2


def test_central_product_by_trivial_is_direct():
    # order-1 identification: quotient by the trivial diagonal
    h = families.cyclic(3)
    k = families.dihedral(3)
    g = central_product(h, k, 0, 0)
    assert g.order == 18


def test_suzuki_2():
    sz2 = families.suzuki(2)
    assert sz2.order == 20
    assert sorted(set(sz2.element_orders().tolist())) == [1, 2, 4, 5]


def test_suzuki_unsupported():
    with pytest.raises(UnsupportedParameter):
        families.suzuki(32)


def test_abelian_product_cap():
    with pytest.raises(SizeCap):
        families.abelian_product([2048, 2])
