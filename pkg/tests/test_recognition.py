from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commgraph.errors import LengthCapExceeded
from commgraph.graphs import UndirectedGraph, cycle_graph, path_graph, two_k2
from commgraph.recognition import (
    ALL_CLASSES,
    CHORDAL,
    COGRAPH,
    SPLIT,
    THRESHOLD,
    TWO_K2_FREE,
    Witness,
    find_induced,
    find_induced_exact_cycle,
    is_2k2_free,
    is_chordal,
    is_cograph,
    is_split,
    is_threshold,
    lex_bfs,
    random_graph,
    recognize_all,
    verify_certificate,
    verify_witness,
)


@st.composite
def graphs(draw, min_n=0, max_n=11):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return UndirectedGraph.from_edges(
        n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


# -- the four base patterns --------------------------------------------------


def test_base_pattern_verdicts():
    expected = {
        # graph: (split, threshold, 2k2free, cograph, chordal)
        "P4": (True, False, True, False, True),
        "C4": (False, False, True, True, False),
        "C5": (False, False, True, False, False),
        "2K2": (False, False, False, True, True),
    }
    built = {"P4": path_graph(4), "C4": cycle_graph(4),
             "C5": cycle_graph(5), "2K2": two_k2()}
    for name, graph in built.items():
        got = tuple(recognize_all(graph)[c].member for c in ALL_CLASSES)
        assert got == expected[name], name


def test_complete_and_empty_are_everything():
    for g in (UndirectedGraph.complete(6), UndirectedGraph.empty(5),
              UndirectedGraph.empty(0)):
        assert all(v.member for v in recognize_all(g).values())


def test_witness_patterns_are_correct_for_base_graphs():
    v = is_split(cycle_graph(4))
    assert not v.member and v.witness.pattern == "C4"
    v = is_split(cycle_graph(5))
    assert not v.member and v.witness.pattern == "C5"
    v = is_split(two_k2())
    assert not v.member and v.witness.pattern == "2K2"
    v = is_threshold(path_graph(4))
    assert not v.member and v.witness.pattern == "P4"
    v = is_chordal(cycle_graph(6))
    assert not v.member and v.witness.pattern == "C6"


# -- certificates ------------------------------------------------------------


def test_split_certificate_contents():
    g = UndirectedGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    v = is_split(g)
    assert v.member
    clique, indep = v.certificate
    assert sorted(clique) == [0, 1, 2]
    assert sorted(indep) == [3, 4]


def test_threshold_certificate_rebuilds():
    g = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    v = is_threshold(g)
    assert v.member
    assert verify_certificate(g, v)
    kinds = {vtx: kind for vtx, kind in v.certificate}
    assert kinds[0] == "dominating"


def test_cotree_evaluates():
    g = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
    v = is_cograph(g)
    assert v.member
    kind, children = v.certificate
    assert kind == "union" and len(children) == 2
    assert verify_certificate(g, v)


def test_peo_certificate():
    g = UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    v = is_chordal(g)
    assert v.member
    assert verify_certificate(g, v)
    assert sorted(v.certificate) == list(range(5))


def test_bad_certificates_rejected():
    g = cycle_graph(4)
    from commgraph.recognition import (
        verify_peo_certificate,
        verify_split_certificate,
        verify_threshold_certificate,
    )

    assert not verify_split_certificate(g, ((0, 1), (2, 3)))
    assert not verify_threshold_certificate(
        g, ((0, "isolated"), (1, "isolated"), (2, "isolated"), (3, "isolated")))
    assert not verify_peo_certificate(g, (0, 1, 2, 3))


def test_witness_verifier_rejects_wrong_patterns():
    g = path_graph(4)
    assert verify_witness(g, Witness("P4", (0, 1, 2, 3)))
    assert not verify_witness(g, Witness("C4", (0, 1, 2, 3)))
    assert not verify_witness(g, Witness("2K2", (0, 1, 2, 3)))
    assert not verify_witness(g, Witness("P4", (0, 1, 2, 2)))


# -- oracle ------------------------------------------------------------------


def brute_force_least(g, pattern):
    size = {"P4": 4, "C4": 4, "2K2": 4, "C5": 5}[pattern]
    for verts in combinations(range(g.n), size):
        if verify_witness(g, Witness(pattern, verts)):
            return list(verts)
    return None


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_find_induced_is_lexicographically_least(g):
    for pattern in ("P4", "C4", "C5", "2K2"):
        assert find_induced(g, pattern) == brute_force_least(g, pattern)


@given(graphs(max_n=10))
@settings(max_examples=150, deadline=None)
def test_recognizers_agree_with_oracle(g):
    ver = recognize_all(g)
    has = lambda p: find_induced(g, p, least=False) is not None
    hole = find_induced(g, ("hole", 4), cap=max(4, g.n)) is not None
    assert ver[SPLIT].member == (not (has("C4") or has("C5") or has("2K2")))
    assert ver[THRESHOLD].member == (not (has("P4") or has("C4") or has("2K2")))
    assert ver[TWO_K2_FREE].member == (not has("2K2"))
    assert ver[COGRAPH].member == (not has("P4"))
    assert ver[CHORDAL].member == (not hole)
    for cls in ver:
        assert verify_certificate(g, ver[cls])


@given(graphs(max_n=10))
@settings(max_examples=100, deadline=None)
def test_class_implications(g):
    ver = recognize_all(g)
    if ver[THRESHOLD].member:
        assert ver[SPLIT].member and ver[COGRAPH].member and ver[CHORDAL].member
    if ver[SPLIT].member:
        assert ver[TWO_K2_FREE].member


@given(graphs(max_n=10))
@settings(max_examples=100, deadline=None)
def test_cograph_complement_closure(g):
    assert is_cograph(g).member == is_cograph(g.complement()).member


def test_find_induced_on_k5_none():
    assert find_induced(UndirectedGraph.complete(5), "P4") is None


def test_hole_search():
    c6 = cycle_graph(6)
    assert find_induced(c6, ("hole", 4)) == [0, 1, 2, 3, 4, 5]
    assert find_induced(c6, ("hole", 7), cap=10) is None
    assert find_induced_exact_cycle(c6, 6) == [0, 1, 2, 3, 4, 5]
    assert find_induced_exact_cycle(c6, 5) is None
    assert find_induced_exact_cycle(UndirectedGraph.complete(4), 3) == [0, 1, 2]


def test_hole_cap():
    with pytest.raises(LengthCapExceeded):
        find_induced(cycle_graph(6), ("hole", 20), cap=10)
    with pytest.raises(ValueError):
        find_induced(cycle_graph(6), ("hole", 3))


def test_lex_bfs_is_a_permutation():
    g = random_graph(15, 3)
    order = lex_bfs(g)
    assert sorted(order) == list(range(15))


def test_random_graph_deterministic():
    assert random_graph(12, 7).rows == random_graph(12, 7).rows
    assert random_graph(12, 7).rows != random_graph(12, 8).rows


def test_witnesses_are_deterministic():
    g = random_graph(14, 2)
    first = recognize_all(g)
    second = recognize_all(g)
    for cls in first:
        assert first[cls] == second[cls]
