import numpy as np
import pytest

from commgraph.errors import (
    ClosureLimitExceeded,
    IndexOutOfRange,
    NonBijectiveGenerator,
    NotASubgroup,
    NotNormal,
    OrderMismatch,
)
from commgraph.groups import (
    GeneratorSpec,
    Group,
    cycle_notation,
    group_from_generators,
    parse_cycles,
)


def perm_group(degree, *cycle_strs, **kw):
    gens = [parse_cycles(s, degree) for s in cycle_strs]
    return group_from_generators(GeneratorSpec.from_images(degree, gens), **kw)


@pytest.fixture(scope="module")
def s4():
    return perm_group(4, "(1 2)", "(1 2 3 4)")


def idx(group, cycles):
    img = np.array(parse_cycles(cycles, group.degree), dtype=group.images.dtype)
    return group._index_map[img.tobytes()]


def test_cycle_parsing_round_trip():
    for s in ["(1 2)", "(1 2 3)(4 5)", "()", "(2 4)(3 5)"]:
        img = parse_cycles(s, 5)
        assert parse_cycles(cycle_notation(img), 5) == img


def test_cyclic_generator_order_three():
    g = perm_group(3, "(1 2 3)")
    assert g.order == 3


def test_sn_generators_give_s4(s4):
    assert s4.order == 24
    assert s4.backend == "cayley"  # converted below the table threshold


def test_a5_closure_matches_schreier_sims_oracle():
    # independent order oracle: sympy's permutation group machinery
    from sympy.combinatorics import Permutation, PermutationGroup

    oracle = PermutationGroup([Permutation([1, 2, 0, 3, 4]),
                               Permutation([0, 1, 3, 4, 2])])
    assert oracle.order() == 60
    g = perm_group(5, "(1 2 3)", "(3 4 5)", order_hint=60)
    assert g.order == 60


def test_order_hint_mismatch():
    with pytest.raises(OrderMismatch):
        perm_group(3, "(1 2 3)", order_hint=4)


def test_non_bijective_generator_rejected():
    with pytest.raises(NonBijectiveGenerator):
        GeneratorSpec.from_images(3, [(0, 0, 2)])


def test_closure_cap():
    with pytest.raises(ClosureLimitExceeded):
        perm_group(5, "(1 2 3)", "(3 4 5)", closure_cap=10)


def test_identity_is_index_zero(s4):
    assert s4.multiply(0, 5) == 5
    assert s4.multiply(5, 0) == 5
    assert cycle_notation(s4.images[0]) == "()"


def test_multiplication_convention(s4):
    # (1 2) * (1 3) applies (1 3) first: the product is (1 3 2)
    p = s4.multiply(idx(s4, "(1 2)"), idx(s4, "(1 3)"))
    assert cycle_notation(s4.images[p]) == "(1 3 2)"


def test_element_orders(s4):
    assert s4.element_order(0) == 1
    assert s4.element_order(idx(s4, "(1 2 3 4)")) == 4
    assert s4.element_order(idx(s4, "(1 2)(3 4)")) == 2
    assert sorted(set(s4.element_orders().tolist())) == [1, 2, 3, 4]


def test_commutes(s4):
    assert s4.commutes(idx(s4, "(1 2)"), idx(s4, "(3 4)"))
    assert not s4.commutes(idx(s4, "(1 2)"), idx(s4, "(1 3)"))
    g = idx(s4, "(1 2 3)")
    assert s4.commutes(g, s4.multiply(g, g))  # powers commute


def test_center_of_s4_is_trivial_by_scan(s4):
    # brute-force oracle: elements commuting with everything
    brute = [g for g in range(24)
             if all(s4.commutes(g, h) for h in range(24))]
    assert brute == [0]
    assert list(s4.center()) == [0]


def test_centralizer_of_transposition(s4):
    got = {cycle_notation(s4.images[g]) for g in s4.centralizer(idx(s4, "(1 2)"))}
    assert got == {"()", "(1 2)", "(3 4)", "(1 2)(3 4)"}


def test_centralizer_of_four_cycle_is_cyclic(s4):
    four = idx(s4, "(1 2 3 4)")
    got = set(s4.centralizer(four).indices)
    powers = {0, four, s4.multiply(four, four),
              s4.multiply(four, s4.multiply(four, four))}
    assert got == powers


def test_centralizer_lagrange(s4):
    for g in range(24):
        assert 24 % len(s4.centralizer(g)) == 0


def test_subgroup_closure(s4):
    assert list(s4.subgroup_closure([])) == [0]
    full = s4.subgroup_closure([idx(s4, "(1 2 3)"), idx(s4, "(1 2 3 4)")])
    assert len(full) == 24
    v4 = s4.subgroup_closure([idx(s4, "(1 2)(3 4)"), idx(s4, "(1 3)(2 4)")])
    assert len(v4) == 4


def test_subgroup_closure_index_check(s4):
    with pytest.raises(IndexOutOfRange):
        s4.subgroup_closure([99])


def test_quotient_by_trivial_is_same_table(s4):
    q = s4.quotient(s4.subgroup_closure([]))
    assert q.order == 24
    assert np.array_equal(q.table, s4.table)


def test_quotient_z4_by_half():
    z4 = Group.from_table([[0, 1, 2, 3], [1, 2, 3, 0],
                           [2, 3, 0, 1], [3, 0, 1, 2]])
    q = z4.quotient(z4.subgroup_closure([2]))
    assert q.order == 2


def test_quotient_s4_by_v4_is_s3(s4):
    v4 = s4.subgroup_closure([idx(s4, "(1 2)(3 4)"), idx(s4, "(1 3)(2 4)")])
    q = s4.quotient(v4)
    assert q.order == 6 and not q.is_abelian()
    # oracle: the quotient must satisfy the group axioms
    t = q.table
    assert np.array_equal(t[t, :], t[:, t])


def test_quotient_rejects_non_subgroup(s4):
    with pytest.raises(NotASubgroup):
        s4.quotient([0, idx(s4, "(1 2)"), idx(s4, "(1 3)")])


def test_quotient_rejects_non_normal(s4):
    s3 = s4.subgroup_closure([idx(s4, "(1 2)"), idx(s4, "(1 2 3)")])
    with pytest.raises(NotNormal):
        s4.quotient(s3)


def test_nilpotency_class_examples(s4):
    from commgraph.families import cyclic, dihedral

    assert cyclic(1).nilpotency_class() == 0
    assert cyclic(5).nilpotency_class() == 1
    # upper central series oracle for D8: Z = {e, a^2}, then the quotient is
    # abelian, so the class is exactly 2
    d8 = dihedral(4)
    assert len(d8.center()) == 2
    assert d8.quotient(d8.center()).is_abelian()
    assert d8.nilpotency_class() == 2
    assert dihedral(3).nilpotency_class() is None
    assert s4.nilpotency_class() is None


def test_index_errors(s4):
    with pytest.raises(IndexOutOfRange):
        s4.multiply(0, 24)
    with pytest.raises(IndexOutOfRange):
        s4.element_order(-1)


def test_backend_agreement_after_conversion(s4):
    # the converted table reproduces permutation-backend products exactly
    for a in range(0, 24, 5):
        for b in range(24):
            composed = s4.images[a][s4.images[b]]
            assert s4._index_map[composed.tobytes()] == int(s4.table[a, b])
