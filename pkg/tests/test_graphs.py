import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commgraph import families
from commgraph.errors import IndexOutOfRange, SizeCap
from commgraph.graphs import (
    UndirectedGraph,
    commuting_graph,
    cycle_graph,
    path_graph,
    two_k2,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return UndirectedGraph.from_edges(n, edges)


def test_basic_queries():
    g = UndirectedGraph.from_edges(4, [(0, 1), (1, 2)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count() == 2


def test_loops_rejected():
    with pytest.raises(ValueError):
        UndirectedGraph.from_edges(2, [(1, 1)])


def test_induced_subgraph():
    g = path_graph(4)
    assert g.induced_subgraph([0, 1, 2, 3]) == g
    sub = g.induced_subgraph([0, 2, 3])
    assert sub.edges() == [(1, 2)]  # only the 2-3 edge survives
    assert g.induced_subgraph([]).n == 0
    with pytest.raises(IndexOutOfRange):
        g.induced_subgraph([0, 9])
    with pytest.raises(ValueError):
        g.induced_subgraph([2, 1])


@given(graphs())
@settings(max_examples=80)
def test_complement_involution(g):
    assert g.complement().complement() == g


def test_complement_examples():
    assert UndirectedGraph.complete(5).complement() == UndirectedGraph.empty(5)
    # P4 and C5 are self-complementary
    p4 = path_graph(4)
    comp = p4.complement()
    assert sorted(comp.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert comp.edge_count() == 3
    c5 = cycle_graph(5)
    assert sorted(c5.complement().degree(v) for v in range(5)) == [2] * 5


def test_remove_dominant():
    g, removed = UndirectedGraph.complete(4).remove_dominant()
    assert g.n == 0 and removed == [0, 1, 2, 3]
    star = UndirectedGraph.from_edges(5, [(0, i) for i in range(1, 5)])
    g, removed = star.remove_dominant()
    assert removed == [0] and g.n == 4 and g.edge_count() == 0
    g, removed = path_graph(4).remove_dominant()
    assert removed == [] and g.n == 4


def test_strong_product_complete_graphs():
    ka, kb = UndirectedGraph.complete(3), UndirectedGraph.complete(4)
    prod = ka.strong_product(kb)
    assert prod.n == 12
    assert prod.edge_count() == 12 * 11 // 2  # K_12


def test_strong_product_identity_vertex():
    one = UndirectedGraph.complete(1)
    g = path_graph(4)
    assert one.strong_product(g).rows == g.rows


def test_strong_product_cap():
    big = UndirectedGraph.empty(100)
    with pytest.raises(SizeCap):
        big.strong_product(UndirectedGraph.empty(100))


@given(graphs())
@settings(max_examples=60)
def test_edge_list_round_trip(g):
    assert UndirectedGraph.from_edge_list_text(g.to_edge_list_text()) == g


@given(graphs())
@settings(max_examples=60)
def test_packed_round_trip(g):
    assert UndirectedGraph.from_packed_text(g.to_packed_text()) == g


def test_packed_format_is_one_printable_line():
    text = cycle_graph(12).to_packed_text()
    assert "\n" not in text
    assert all(32 <= ord(c) < 127 for c in text)


def test_commuting_graph_abelian_complete():
    g = commuting_graph(families.cyclic(6), scope="all")
    assert g.edge_count() == 15  # K_6


def test_commuting_graph_q8_three_edges():
    g = commuting_graph(families.generalized_quaternion(2), scope="noncentral")
    assert g.n == 6
    assert g.edge_count() == 3
    assert sorted(len(c) for c in g.connected_components()) == [2, 2, 2]


def test_commuting_graph_gd_odd_structure():
    # complete graph on A with |A| pendant vertices at the identity
    g = commuting_graph(families.generalized_dihedral([7]), scope="all")
    degs = sorted(g.degree(v) for v in range(g.n))
    assert degs == [1] * 7 + [6] * 6 + [13]


def test_commuting_graph_scope_restriction():
    grp = families.dihedral(6)
    g_all = commuting_graph(grp, scope="all")
    g_nc = commuting_graph(grp, scope="noncentral")
    central = {0, 6}  # e and a^3
    keep = [i for i, lab in enumerate(g_all.labels) if lab not in central]
    assert g_all.induced_subgraph(keep).rows == g_nc.rows


def test_commuting_graph_labels_are_element_indices():
    g = commuting_graph(families.symmetric(3), scope="noncentral")
    assert g.labels == tuple(range(1, 6))


def test_permutation_backend_graph_agrees_with_table():
    grp = families.alternating(5)
    g_table = commuting_graph(grp, scope="noncentral")
    # force the permutation path on the same group
    from commgraph.groups import BACKEND_PERMUTATION, Group

    perm_only = Group(grp.order, BACKEND_PERMUTATION, images=grp.images,
                      degree=grp.degree, index_map=grp._index_map,
                      known_generators=grp.known_generators)
    g_perm = commuting_graph(perm_only, scope="noncentral")
    assert g_table.rows == g_perm.rows


def test_handshake_identity():
    grp = families.symmetric(4)
    g = commuting_graph(grp, scope="all")
    total = sum(len(grp.centralizer(x)) for x in range(grp.order))
    assert g.edge_count() == (total - grp.order) // 2
