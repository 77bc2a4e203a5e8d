"""Named verification checks over a reproducible corpus of groups.

`run_theorem_suite` executes every check and returns a SuiteReport;
failures carry details and witnesses instead of raising, so the CLI can
render one pass/fail line per check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import families
from .classify import (
    classify_group,
    is_ac_group,
    is_ca_group,
    is_generalized_dihedral_odd,
    omega_subgroup,
    verify_frobenius,
)
from .graphs import UndirectedGraph, commuting_graph
from .recognition import (
    CHORDAL,
    COGRAPH,
    SPLIT,
    THRESHOLD,
    TWO_K2_FREE,
    Witness,
    find_induced,
    find_induced_exact_cycle,
    is_chordal,
    is_cograph,
    random_graph,
    recognize_all,
    verify_certificate,
    verify_witness,
)
from .scans import (
    EXPECTED_NONCOGRAPH_COUNTS,
    EXPECTED_NONCOGRAPH_IDS_36,
    minimal_nonchordal_order,
    minimal_noncograph_order,
    scan_nonchordal,
    table1_ids,
    table2_counts,
)
from .witnesses import sl3_p4_witness, su3_p4_witness


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class SuiteReport:
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.passed for r in self.results)

    def lines(self):
        out = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            detail = f"  [{r.detail}]" if r.detail else ""
            out.append(f"{status}  {r.name}  ({r.seconds:.2f}s){detail}")
        return out


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

GD_CORPUS_FACTORS = ([3], [5], [7], [9], [15], [3, 3], [3, 9], [2, 2], [2, 6], [4, 2])


def default_corpus(catalog=None, max_catalog_order=36):
    """(label, group) pairs: catalog groups plus the constructed families."""
    corpus = []
    if catalog is not None:
        for entry in catalog.entries:
            if entry.order <= max_catalog_order:
                corpus.append((f"[{entry.order},{entry.index}]", entry.build()))
    for n in range(1, 16):
        corpus.append((f"D{2 * n}", families.dihedral(n)))
    for factors in GD_CORPUS_FACTORS:
        label = "D(" + "x".join(f"Z{f}" for f in factors) + ")"
        corpus.append((label, families.generalized_dihedral(list(factors))))
    for m in range(2, 9):
        corpus.append((f"Q{4 * m}", families.generalized_quaternion(m)))
    return corpus


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def _check_group_axioms(corpus):
    rng = random.Random(20240811)
    for label, g in corpus:
        n = g.order
        for x in range(n):
            if g.multiply(0, x) != x or g.multiply(x, 0) != x:
                return False, f"{label}: identity axiom fails at {x}"
            if g.multiply(x, g.inverse(x)) != 0:
                return False, f"{label}: inverse axiom fails at {x}"
        if g.table is not None and n <= 64:
            t = g.table
            if not np.array_equal(t[t, :], t[:, t]):
                return False, f"{label}: associativity fails"
        else:
            for _ in range(10000 if n > 64 else 1000):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)):
                    return False, f"{label}: associativity fails at {(a, b, c)}"
    return True, f"{len(corpus)} groups"


def _check_lagrange(corpus):
    for label, g in corpus:
        for x in range(g.order):
            size = int(g.centralizer_mask(x).sum())
            if g.order % size:
                return False, f"{label}: |C({x})| = {size} does not divide {g.order}"
    return True, ""


def _check_center_intersection(corpus):
    done = 0
    for label, g in corpus:
        if g.order > 200:
            continue
        mask = np.ones(g.order, dtype=bool)
        for x in range(g.order):
            mask &= g.centralizer_mask(x)
        if not np.array_equal(mask, g.center_mask()):
            return False, f"{label}: center != intersection of centralizers"
        done += 1
    return True, f"{done} groups"


def _check_backend_agreement(corpus):
    rng = random.Random(77)
    done = 0
    for label, g in corpus:
        if g.table is None or g.images is None:
            continue
        n = g.order
        pairs = ([(a, b) for a in range(n) for b in range(n)] if n <= 64
                 else [(rng.randrange(n), rng.randrange(n)) for _ in range(10000)])
        for a, b in pairs:
            composed = g.images[a][g.images[b]]
            if g._index_map[composed.tobytes()] != int(g.table[a, b]):
                return False, f"{label}: backends disagree at {(a, b)}"
        done += 1
    return True, f"{done} permutation-built groups"


def _check_quotients(_corpus):
    s4 = families.symmetric(4)
    orders = s4.element_orders()
    v4 = s4.subgroup_closure([g for g in range(24)
                              if orders[g] == 2 and s4.images[g][0] != 0
                              and all(s4.images[g][i] != i for i in range(4))])
    q = s4.quotient(v4)
    if q.order != 6 or q.is_abelian():
        return False, "S4/V4 is not a non-abelian group of order 6"
    z4 = families.cyclic(4)
    if z4.quotient(z4.subgroup_closure([2])).order != 2:
        return False, "Z4/{0,2} has the wrong order"
    if s4.quotient(s4.subgroup_closure([])).order != 24:
        return False, "S4/{e} has the wrong order"
    return True, ""


def _check_scope_consistency(corpus):
    for label, g in corpus:
        g_all = commuting_graph(g, scope="all")
        g_nc = commuting_graph(g, scope="noncentral")
        central = set(int(i) for i in np.nonzero(g.center_mask())[0])
        keep = [i for i, lab in enumerate(g_all.labels) if lab not in central]
        if g_all.induced_subgraph(keep).rows != g_nc.rows:
            return False, f"{label}: scope restriction mismatch"
    return True, ""


def _check_subgroup_induced(_corpus):
    # the commuting graph of a subgroup is the induced subgraph on it
    s4 = families.symmetric(4)
    orders = s4.element_orders()
    cases = [
        s4.subgroup_closure([int(np.nonzero(orders == 4)[0][0])]),
        s4.subgroup_closure([int(np.nonzero(orders == 3)[0][0])]),
        s4.subgroup_closure([g for g in range(24) if orders[g] == 2
                             and all(s4.images[g][i] != i for i in range(4))]),
    ]
    g_all = commuting_graph(s4, scope="all")
    for sub in cases:
        induced = g_all.induced_subgraph(list(sub.indices))
        adj = np.zeros((len(sub), len(sub)), dtype=bool)
        for i, a in enumerate(sub.indices):
            for j, b in enumerate(sub.indices):
                adj[i, j] = a != b and s4.commutes(a, b)
        expect = UndirectedGraph.from_bool_matrix(adj)
        if induced.rows != expect.rows:
            return False, f"subgroup of size {len(sub)} mismatch"
    return True, f"{len(cases)} subgroups of S4"


def _check_handshake(corpus):
    for label, g in corpus:
        graph = commuting_graph(g, scope="all")
        total = sum(int(g.centralizer_mask(x).sum()) for x in range(g.order))
        expect = (total - g.order) // 2
        if graph.edge_count() != expect:
            return False, f"{label}: edge count {graph.edge_count()} != {expect}"
    return True, ""


def _check_strong_product_identity(_corpus):
    pairs = [
        (families.symmetric(3), families.symmetric(3)),
        (families.cyclic(2), families.symmetric(3)),
        (families.dihedral(4), families.generalized_quaternion(2)),
        (families.cyclic(6), families.dihedral(5)),
        (families.alternating(4), families.cyclic(2)),
        (families.symmetric(4), families.cyclic(3)),
        (families.dihedral(6), families.dihedral(4)),
        (families.generalized_quaternion(3), families.cyclic(4)),
        (families.abelian_product([2, 2]), families.dihedral(7)),
        (families.symmetric(3), families.generalized_quaternion(2)),
    ]
    for h, k in pairs:
        prod = families.direct_product(h, k)
        left = commuting_graph(prod, scope="all")
        right = commuting_graph(h, scope="all").strong_product(
            commuting_graph(k, scope="all"))
        if left.rows != right.rows:
            return False, f"({h.label}) x ({k.label}) strong-product mismatch"
    return True, f"{len(pairs)} pairs"


def _check_strong_product_commutes(_corpus):
    a = commuting_graph(families.symmetric(3), scope="all")
    b = commuting_graph(families.cyclic(4), scope="all")
    ab = a.strong_product(b)
    ba = b.strong_product(a)
    # swap bijection (i, j) -> (j, i)
    nb = b.n
    na = a.n
    perm = [(idx % nb) * na + idx // nb for idx in range(na * nb)]
    rows = [0] * (na * nb)
    for v in range(na * nb):
        for u in ab.neighbors(v):
            rows[perm[v]] |= 1 << perm[u]
    if tuple(rows) != ba.rows:
        return False, "strong product not commutative under the swap"
    return True, ""


def _check_dominant_stability(corpus):
    rng = random.Random(5)
    sample = [lab_g for lab_g in corpus if lab_g[1].order <= 100]
    sample = rng.sample(sample, min(12, len(sample)))
    for label, g in sample:
        graph = commuting_graph(g, scope="all")
        reduced, _removed = graph.remove_dominant()
        before = recognize_all(graph)
        after = recognize_all(reduced)
        for cls in before:
            if before[cls].member != after[cls].member:
                return False, f"{label}: {cls} changes under dominant removal"
    return True, f"{len(sample)} groups"


def _check_theorem_equivalence(corpus):
    checked = 0
    for label, g in corpus:
        report = classify_group(g, label=label)   # validates internally
        expected = report.is_abelian or report.is_generalized_dihedral_odd
        if report.member(SPLIT) != expected:
            return False, f"{label}: split verdict disagrees with group structure"
        checked += 1
    return True, f"{checked} groups, zero violations"


def _check_ac_implies(corpus):
    for label, g in corpus:
        ac, _ = is_ac_group(g)
        if not ac:
            continue
        graph = commuting_graph(g, scope="noncentral")
        if not (is_cograph(graph).member and is_chordal(graph).member):
            return False, f"{label}: AC-group with a non-cograph or non-chordal graph"
    return True, ""


def _check_trivial_center_ca(corpus):
    for label, g in corpus:
        if int(g.center_mask().sum()) != 1:
            continue
        ac, _ = is_ac_group(g)
        if ac != is_ca_group(g):
            return False, f"{label}: trivial center but AC != CA"
    return True, ""


def _check_small_quotient_ac(corpus):
    def at_most_three_primes(m):
        count = 0
        p = 2
        while m > 1 and p * p <= m * 2:
            while m % p == 0:
                count += 1
                m //= p
            p += 1
        return count <= 3 and m == 1 or (m > 1 and count <= 2)

    for label, g in corpus:
        if g.order > 36:
            continue
        zsize = int(g.center_mask().sum())
        m = g.order // zsize
        # count prime factors with multiplicity
        cnt, mm, p = 0, m, 2
        while mm > 1:
            while mm % p == 0:
                cnt += 1
                mm //= p
            p += 1 if p == 2 else 2
        if 1 <= cnt <= 3 and m > 1:
            ac, witness = is_ac_group(g)
            if not ac:
                return False, f"{label}: |G/Z| = {m} but not AC ({witness})"
    return True, ""


def _check_direct_product_theorem(_corpus):
    hs = [families.cyclic(4), families.symmetric(3), families.dihedral(4),
          families.symmetric(4), families.abelian_product([2, 2])]
    ks = [families.cyclic(3), families.generalized_quaternion(2),
          families.alternating(4), families.dihedral(6)]
    for h in hs:
        for k in ks:
            prod = families.direct_product(h, k)
            graph = commuting_graph(prod, scope="noncentral")
            gh = commuting_graph(h, scope="noncentral")
            gk = commuting_graph(k, scope="noncentral")
            cog = is_cograph(graph).member
            expect = ((h.is_abelian() and is_cograph(gk).member)
                      or (k.is_abelian() and is_cograph(gh).member))
            if cog != expect:
                return False, f"cograph law fails for {h.label} x {k.label}"
            cho = is_chordal(graph).member
            expect_c = ((h.is_abelian() and is_chordal(gk).member)
                        or (k.is_abelian() and is_chordal(gh).member))
            if cho != expect_c:
                return False, f"chordal law fails for {h.label} x {k.label}"
    return True, f"{len(hs) * len(ks)} pairs"


def _central_product_witness(grp):
    """Indices of the defining generator images {x, z, y, w} in H o K."""
    h, k, zh, zk = grp.central_product_of
    def noncommuting_pair(g):
        for a in range(1, g.order):
            for b in range(a + 1, g.order):
                if not g.commutes(a, b):
                    return a, b
        raise AssertionError("abelian factor in a central product")
    x, y = noncommuting_pair(h)
    z, w = noncommuting_pair(k)
    co = grp.coset_of
    korder = k.order
    return [int(co[x * korder]), int(co[z]), int(co[y * korder]), int(co[w])]


def _check_central_products(_corpus):
    for builder, label in ((families.extraspecial_plus_32, "D8oD8"),
                           (families.extraspecial_minus_32, "D8oQ8")):
        grp = builder()
        quad = _central_product_witness(grp)
        graph = commuting_graph(grp, scope="all")
        pos = {lab: i for i, lab in enumerate(graph.labels)}
        verts = tuple(sorted(pos[v] for v in quad))
        if not verify_witness(graph, Witness("C4", verts)):
            return False, f"{label}: generator quadruple is not an induced C4"
        if is_chordal(graph).member:
            return False, f"{label}: unexpectedly chordal"
        if is_cograph(graph).member:
            return False, f"{label}: unexpectedly a cograph"
    return True, "D8oD8 and D8oQ8"


def _check_frobenius_graphs(_corpus):
    cases = []
    f20 = families.frobenius20()
    orders = f20.element_orders()
    h = f20.subgroup_closure([int(np.nonzero(orders == 4)[0][0])])
    cases.append(("Sz(2)", f20, h))
    d10 = families.generalized_dihedral([5])
    cases.append(("D(Z5)", d10, d10.subgroup_closure([1])))
    d14 = families.dihedral(7)
    cases.append(("D14", d14, d14.subgroup_closure([1])))
    for label, g, comp in cases:
        rec = verify_frobenius(g, comp)
        gg = commuting_graph(g, scope="noncentral")
        gk = commuting_graph(g, scope="all").induced_subgraph(
            [i for i in rec.kernel.indices])
        gh = commuting_graph(g, scope="all").induced_subgraph(
            [i for i in rec.complement.indices])
        for checker in (is_cograph, is_chordal):
            whole = checker(gg).member
            parts = checker(gk).member and checker(gh).member
            if whole != parts:
                return False, f"{label}: graph law fails for {checker.__name__}"
    return True, f"{len(cases)} Frobenius groups"


def _check_abelian_all_classes(corpus):
    for label, g in corpus:
        if not g.is_abelian():
            continue
        report = classify_group(g, label=label)
        if not all(report.member(c) for c in report.verdicts):
            return False, f"{label}: abelian group missing a class"
    return True, ""


def _check_q4m_structure(_corpus):
    for m in range(2, 9):
        q = families.generalized_quaternion(m)
        zmask = q.center_mask()
        if sorted(np.nonzero(zmask)[0].tolist()) != [0, 2 * m]:
            return False, f"Q{4 * m}: center is not {{e, x^m}}"
        for i in range(2 * m):
            if q.element_order(2 * i + 1) != 4:
                return False, f"Q{4 * m}: x^{i} y does not have order 4"
        graph = commuting_graph(q, scope="noncentral")
        comps = graph.connected_components()
        sizes = sorted(len(c) for c in comps)
        if sizes != [2] * m + [2 * m - 2]:
            return False, f"Q{4 * m}: graph is not K_(2m-2) plus m edges"
        for comp in comps:
            sub = graph.induced_subgraph(comp)
            if sub.edge_count() != sub.n * (sub.n - 1) // 2:
                return False, f"Q{4 * m}: a component is not complete"
    return True, "m in 2..8"


def _check_gd_structure(_corpus):
    for factors in GD_CORPUS_FACTORS:
        g = families.generalized_dihedral(list(factors))
        m = g.order // 2
        for a in range(m):
            if g.element_order(2 * a + 1) != 2:
                return False, f"D(A) {factors}: outside element of order > 2"
        elem_ab2 = all(f in (1, 2) for f in factors)
        if g.is_abelian() != elem_ab2:
            return False, f"D(A) {factors}: abelian iff elementary abelian 2 fails"
        if m % 2 == 1:
            graph = commuting_graph(g, scope="all")
            # complete graph on A plus |A| pendants at the identity
            avert = [2 * a for a in range(m)]
            sub = graph.induced_subgraph(avert)
            if sub.edge_count() != m * (m - 1) // 2:
                return False, f"D(A) {factors}: A is not a clique"
            for a in range(m):
                if graph.degree(2 * a + 1) != 1 or not graph.has_edge(2 * a + 1, 0):
                    return False, f"D(A) {factors}: reflection not pendant at e"
    return True, ""


def _check_omega(_corpus):
    d18 = families.dihedral(9)
    om, ab = omega_subgroup(d18)
    if len(om) != 9 or not ab:
        return False, "D18: rotation subgroup expected"
    s4 = families.symmetric(4)
    om, ab = omega_subgroup(s4)
    if len(om) != 24 or ab:
        return False, "S4: omega should be all of S4, non-abelian"
    e8 = families.abelian_product([2, 2, 2])
    om, ab = omega_subgroup(e8)
    if len(om) != 1 or not ab:
        return False, "C2^3: omega should be trivial"
    flag, a = is_generalized_dihedral_odd(families.generalized_dihedral([9]))
    if not flag or len(a) != 9:
        return False, "D(Z9) should be generalized dihedral over Z9"
    flag, _ = is_generalized_dihedral_odd(families.dihedral(6))
    if flag:
        return False, "D12 wrongly recognized as odd generalized dihedral"
    return True, ""


def _check_nilpotency(_corpus):
    if families.dihedral(4).nilpotency_class() != 2:
        return False, "D8 should have class 2"
    if families.dihedral(3).nilpotency_class() is not None:
        return False, "S3 should not be nilpotent"
    if families.cyclic(6).nilpotency_class() != 1:
        return False, "Z6 should have class 1"
    if families.extraspecial_plus_32().nilpotency_class() != 2:
        return False, "D8oD8 should have class 2"
    return True, ""


def _check_sn_sweep(_corpus):
    for n in range(1, 7):
        g = commuting_graph(families.symmetric(n), scope="noncentral")
        if is_cograph(g).member != (n <= 3):
            return False, f"S{n}: cograph verdict wrong"
        if is_chordal(g).member != (n <= 4):
            return False, f"S{n}: chordal verdict wrong"
    return True, "n in 1..6"


def _perm_index(group, cycles):
    from .groups import parse_cycles

    img = np.array(parse_cycles(cycles, group.degree), dtype=group.images.dtype)
    return group._index_map[img.tobytes()]


def _graph_vertices(graph, labels):
    pos = {lab: i for i, lab in enumerate(graph.labels)}
    return tuple(sorted(pos[x] for x in labels))


def _check_an_sweep(_corpus):
    for n in (4, 5, 6):
        grp = families.alternating(n)
        g = commuting_graph(grp, scope="noncentral")
        expect = n <= 5
        if is_cograph(g).member != expect:
            return False, f"A{n}: cograph verdict wrong"
        cho = is_chordal(g)
        if cho.member != expect:
            return False, f"A{n}: chordal verdict wrong"
        if n == 6:
            if len(cho.witness.vertices) < 4:
                return False, "A6: hole witness too short"
            # published path and 12-cycle
            a6 = grp
            p4 = [_perm_index(a6, c) for c in
                  ("(1 2)(5 6)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 3)(5 6)")]
            if not verify_witness(g, Witness("P4", _graph_vertices(g, p4))):
                return False, "A6: published P4 does not validate"
            c12_cycles = ["(1 3)(4 5)", "(1 4)(3 5)", "(1 4)(2 6)", "(1 2)(4 6)",
                          "(1 2)(3 5)", "(1 3)(2 5)", "(1 3)(4 6)", "(1 4)(3 6)",
                          "(1 4)(2 5)", "(1 2)(4 5)", "(1 2)(3 6)", "(1 3)(2 6)"]
            c12 = [_perm_index(a6, c) for c in c12_cycles]
            if not verify_witness(g, Witness("C12", _graph_vertices(g, c12))):
                return False, "A6: published C12 does not validate"
    # A7 hexagon and A8 square witnesses
    a7 = families.alternating(7)
    c6 = [_perm_index(a7, c) for c in
          ("(1 2 3)", "(4 5 6)", "(1 2 7)", "(3 4 5)", "(1 2 6)", "(4 5 7)")]
    if not _labels_induce_cycle(a7, c6):
        return False, "A7: published C6 does not validate"
    a8 = families.alternating(8)
    c4 = [_perm_index(a8, c) for c in
          ("(1 2)(3 4)", "(5 6 7)", "(3 4 8)", "(1 2)(5 6)")]
    if not _labels_induce_cycle(a8, c4):
        return False, "A8: published C4 does not validate"
    return True, "A4..A6 sweeps plus A7/A8 witnesses"


def _labels_induce_cycle(group, elems):
    """Do these elements induce a chordless cycle, in the given order?"""
    k = len(elems)
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = group.commutes(elems[i], elems[j])
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def _check_psl2_dichotomy(_corpus):
    good = {2, 3, 4, 5, 8, 16}
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        g = commuting_graph(families.psl2(q), scope="noncentral")
        if is_cograph(g).member != (q in good):
            return False, f"PSL2({q}): cograph verdict wrong"
    return True, "q in {2,3,4,5,7,8,9,11,13,16}"


def _check_sl3_su3(_corpus):
    for q in (3, 5, 7, 8, 9):
        _, rep = sl3_p4_witness(q)
        if not rep.is_induced_p4:
            return False, f"special linear witness fails for q={q}"
    for q in (3, 4, 5):
        _, rep = su3_p4_witness(q)
        if not rep.is_induced_p4:
            return False, f"special unitary witness fails for q={q}"
    from .errors import BadQ

    for q in (2, 4):
        try:
            sl3_p4_witness(q)
            return False, f"q={q} should be rejected for the linear witness"
        except BadQ:
            pass
    try:
        su3_p4_witness(2)
        return False, "q=2 should be rejected for the unitary witness"
    except BadQ:
        pass
    return True, ""


def _check_d12_witness(_corpus):
    d12 = families.dihedral(6)   # a = index 2 (rotation), x = index 1
    a = 2
    x = 1
    a4 = d12.multiply(a, d12.multiply(a, d12.multiply(a, a)))
    a3 = d12.multiply(a, d12.multiply(a, a))
    xa3 = d12.multiply(x, a3)
    graph = commuting_graph(d12, scope="noncentral")
    quad = _graph_vertices(graph, [a, a4, x, xa3])
    if not verify_witness(graph, Witness("2K2", quad)):
        return False, "published 2K2 quadruple does not validate in D12"
    if is_2k2_verdict_member(graph):
        return False, "D12 wrongly 2K2-free"
    return True, ""


def is_2k2_verdict_member(graph):
    from .recognition import is_2k2_free

    return is_2k2_free(graph).member


def _check_s4_centralizers(_corpus):
    s4 = families.symmetric(4)
    t12 = _perm_index(s4, "(1 2)")
    expect = {0, t12, _perm_index(s4, "(3 4)"), _perm_index(s4, "(1 2)(3 4)")}
    if set(s4.centralizer(t12).indices) != expect:
        return False, "centralizer of a transposition is wrong"
    four = _perm_index(s4, "(1 2 3 4)")
    if set(s4.centralizer(four).indices) != set(
            s4.subgroup_closure([four]).indices):
        return False, "centralizer of a 4-cycle is wrong"
    dbl = _perm_index(s4, "(1 2)(3 4)")
    if len(s4.centralizer(dbl)) != 8:
        return False, "centralizer of a double transposition should have 8 elements"
    q8graph = commuting_graph(families.generalized_quaternion(2), scope="noncentral")
    comps = q8graph.connected_components()
    if sorted(len(c) for c in comps) != [2, 2, 2]:
        return False, "Q8 graph is not three disjoint edges"
    return True, ""


def _check_table1(catalog):
    ids = table1_ids(catalog)
    if ids != EXPECTED_NONCOGRAPH_IDS_36:
        return False, f"got {ids}"
    return True, "9 IDs match"


def _check_table2(catalog):
    counts = table2_counts(catalog, max_order=72)
    expect = {o: c for o, c in EXPECTED_NONCOGRAPH_COUNTS.items()
              if catalog.is_complete(o)}
    if counts != expect:
        return False, f"got {counts}, expected {expect}"
    return True, f"{len(expect)} orders match"


def _check_minimal_orders(catalog):
    mc = minimal_noncograph_order(catalog)
    if mc != 24:
        return False, f"least non-cograph order is {mc}"
    mh = minimal_nonchordal_order(catalog)
    if mh != 32:
        return False, f"least non-chordal order is {mh}"
    for row in scan_nonchordal(catalog, 32):
        if row.order == 32:
            if not {49, 50} <= set(row.ids):
                return False, f"order-32 non-chordal IDs: {row.ids}"
    return True, "24 and 32, with [32,49], [32,50] present"


def _check_oracle_samples(_corpus):
    rng = random.Random(99)
    for trial in range(60):
        n = rng.randrange(5, 16)
        g = random_graph(n, trial, seed_base=0xACCE)
        ver = recognize_all(g)
        has = lambda p: find_induced(g, p, least=False) is not None
        hole = find_induced(g, ("hole", 4), cap=max(4, n)) is not None
        expect = {
            SPLIT: not (has("C4") or has("C5") or has("2K2")),
            THRESHOLD: not (has("P4") or has("C4") or has("2K2")),
            TWO_K2_FREE: not has("2K2"),
            COGRAPH: not has("P4"),
            CHORDAL: not hole,
        }
        for cls in ver:
            if ver[cls].member != expect[cls]:
                return False, f"trial {trial}: {cls} disagrees with the oracle"
            if not verify_certificate(g, ver[cls]):
                return False, f"trial {trial}: {cls} certificate fails"
        if ver[THRESHOLD].member and not (ver[SPLIT].member and ver[COGRAPH].member
                                          and ver[CHORDAL].member):
            return False, f"trial {trial}: threshold implications fail"
        if ver[SPLIT].member and not ver[TWO_K2_FREE].member:
            return False, f"trial {trial}: split does not imply 2K2-free"
        comp = g.complement()
        if is_cograph(g).member != is_cograph(comp).member:
            return False, f"trial {trial}: cograph complement closure fails"
    return True, "60 random graphs"


def _check_sz2(_corpus):
    sz2 = families.suzuki(2)
    orders = sz2.element_orders()
    h = sz2.subgroup_closure([int(np.nonzero(orders == 4)[0][0])])
    rec = verify_frobenius(sz2, h)
    if rec.kernel_order != 5 or rec.complement_order != 4:
        return False, f"kernel {rec.kernel_order}, complement {rec.complement_order}"
    g = commuting_graph(sz2, scope="noncentral")
    if not is_cograph(g).member:
        return False, "Sz(2) graph is not a cograph"
    return True, "kernel 5, cograph"


def _check_sz8(_corpus):
    sz8 = families.suzuki(8)
    graph = commuting_graph(sz8, scope="noncentral")
    verdict = is_cograph(graph)
    if not verdict.member:
        return False, "Sz(8) commuting graph is not a cograph"
    return True, f"{graph.n} vertices, cograph confirmed"


def _check_a6_holes(_corpus):
    a6 = families.alternating(6)
    graph = commuting_graph(a6, scope="noncentral")
    found = []
    for length in range(4, 12):
        cyc = find_induced_exact_cycle(graph, length)
        if cyc is not None:
            found.append(length)
    detail = ("holes of length " + ",".join(map(str, found))
              if found else "no holes of length 4..11")
    cyc12 = find_induced_exact_cycle(graph, 12)
    if cyc12 is None:
        return False, detail + "; no 12-hole found"
    return True, detail + "; 12-hole present"


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

CHECKS = [
    ("group-axioms", _check_group_axioms, "corpus"),
    ("lagrange-centralizers", _check_lagrange, "corpus"),
    ("center-intersection", _check_center_intersection, "corpus"),
    ("backend-agreement", _check_backend_agreement, "corpus"),
    ("quotient-axioms", _check_quotients, "corpus"),
    ("scope-consistency", _check_scope_consistency, "corpus"),
    ("subgroup-induced-graphs", _check_subgroup_induced, "corpus"),
    ("centralizer-handshake", _check_handshake, "corpus"),
    ("strong-product-identity", _check_strong_product_identity, "corpus"),
    ("strong-product-commutes", _check_strong_product_commutes, "corpus"),
    ("dominant-vertex-stability", _check_dominant_stability, "corpus"),
    ("split-threshold-2k2-equivalence", _check_theorem_equivalence, "corpus"),
    ("ac-implies-cograph-chordal", _check_ac_implies, "corpus"),
    ("trivial-center-ac-iff-ca", _check_trivial_center_ca, "corpus"),
    ("small-central-quotient-ac", _check_small_quotient_ac, "corpus"),
    ("direct-product-laws", _check_direct_product_theorem, "corpus"),
    ("central-product-squares", _check_central_products, "corpus"),
    ("frobenius-graph-laws", _check_frobenius_graphs, "corpus"),
    ("abelian-all-classes", _check_abelian_all_classes, "corpus"),
    ("quaternion-structure", _check_q4m_structure, "corpus"),
    ("generalized-dihedral-structure", _check_gd_structure, "corpus"),
    ("omega-subgroup", _check_omega, "corpus"),
    ("nilpotency-class", _check_nilpotency, "corpus"),
    ("symmetric-sweep", _check_sn_sweep, "corpus"),
    ("alternating-sweep", _check_an_sweep, "corpus"),
    ("psl2-cograph-dichotomy", _check_psl2_dichotomy, "corpus"),
    ("matrix-p4-witnesses", _check_sl3_su3, "corpus"),
    ("dihedral-2k2-witness", _check_d12_witness, "corpus"),
    ("s4-centralizer-structure", _check_s4_centralizers, "corpus"),
    ("recognizer-oracle-sample", _check_oracle_samples, "corpus"),
    ("suzuki-2-frobenius", _check_sz2, "corpus"),
    ("table-1-reproduction", _check_table1, "catalog"),
    ("table-2-reproduction", _check_table2, "catalog"),
    ("minimal-order-theorems", _check_minimal_orders, "catalog"),
]

SLOW_CHECKS = [
    ("suzuki-8-cograph", _check_sz8, "corpus"),
    ("a6-hole-lengths", _check_a6_holes, "corpus"),
]


def run_theorem_suite(catalog=None, slow=False, names=None):
    """Run every named check (plus slow ones on request)."""
    corpus = default_corpus(catalog)
    report = SuiteReport()
    todo = list(CHECKS) + (list(SLOW_CHECKS) if slow else [])
    for name, fn, kind in todo:
        if names is not None and name not in names:
            continue
        if kind == "catalog" and catalog is None:
            report.results.append(CheckResult(name, False, "no catalog supplied"))
            continue
        arg = catalog if kind == "catalog" else corpus
        t0 = time.perf_counter()
        try:
            passed, detail = fn(arg)
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"exception: {exc!r}"
        report.results.append(
            CheckResult(name, passed, detail, time.perf_counter() - t0))
    return report
