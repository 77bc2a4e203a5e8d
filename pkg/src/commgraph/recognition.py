"""Certified recognition of split / threshold / 2K2-free / cograph / chordal.

Every verdict carries either a checkable certificate (partition, creation
sequence, cotree, elimination ordering) or a forbidden-subgraph witness,
and `verify_certificate` / `verify_witness` re-check them from scratch.
`find_induced` is the independent brute-force oracle used to cross-validate
the structural recognizers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import LengthCapExceeded
from .graphs import UndirectedGraph, bits_of

HOLE_LENGTH_CAP = 64

SPLIT = "split"
THRESHOLD = "threshold"
TWO_K2_FREE = "2k2free"
COGRAPH = "cograph"
CHORDAL = "chordal"

ALL_CLASSES = (SPLIT, THRESHOLD, TWO_K2_FREE, COGRAPH, CHORDAL)


@dataclass(frozen=True)
class Witness:
    pattern: str          # "P4", "C4", "C5", "2K2", or "C<k>" for holes
    vertices: tuple       # sorted vertex indices inducing the pattern


@dataclass(frozen=True)
class ClassVerdict:
    cls: str
    member: bool
    certificate: object = None
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.member and self.witness is not None:
            raise ValueError("member verdicts carry no witness")
        if not self.member and self.witness is None:
            raise ValueError("non-member verdicts need a witness")


# ---------------------------------------------------------------------------
# witnesses and certificates: verification
# ---------------------------------------------------------------------------


def _induced_profile(g, verts):
    sub = [g.rows[v] for v in verts]
    mask = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in verts:
            if u != v and g.has_edge(u, v):
                r |= 1 << mask[u]
        rows.append(r)
    return rows


def _is_connected_rows(rows):
    n = len(rows)
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def verify_witness(g, witness):
    """Does the induced subgraph on the witness vertices match its pattern?"""
    verts = list(witness.vertices)
    if sorted(set(verts)) != verts:
        return False
    if verts and (verts[0] < 0 or verts[-1] >= g.n):
        return False
    rows = _induced_profile(g, verts)
    degs = sorted(r.bit_count() for r in rows)
    edges = sum(degs) // 2
    k = len(verts)
    pat = witness.pattern
    if pat == "P4":
        return k == 4 and edges == 3 and degs == [1, 1, 2, 2] and _is_connected_rows(rows)
    if pat == "2K2":
        return k == 4 and edges == 2 and degs == [1, 1, 1, 1]
    if pat.startswith("C"):
        try:
            length = int(pat[1:])
        except ValueError:
            return False
        return (k == length and length >= 4 and edges == length
                and degs == [2] * length and _is_connected_rows(rows))
    return False


def hole_witness(vertices):
    return Witness(pattern=f"C{len(vertices)}", vertices=tuple(sorted(vertices)))


def verify_split_certificate(g, cert):
    clique, indep = cert
    verts = sorted(clique) + sorted(indep)
    if sorted(verts) != list(range(g.n)):
        return False
    for a, b in combinations(sorted(clique), 2):
        if not g.has_edge(a, b):
            return False
    for a, b in combinations(sorted(indep), 2):
        if g.has_edge(a, b):
            return False
    return True


def verify_threshold_certificate(g, cert):
    """Rebuild the graph from the creation sequence; must match exactly."""
    present = []
    rows = [0] * g.n
    seen = set()
    for v, kind in cert:
        if v in seen or not 0 <= v < g.n:
            return False
        seen.add(v)
        if kind == "dominating":
            for u in present:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        elif kind != "isolated":
            return False
        present.append(v)
    return len(seen) == g.n and tuple(rows) == g.rows


def evaluate_cotree(node, n):
    """Build the graph a cotree denotes (vertex set must be 0..n-1)."""
    kind = node[0]
    if kind == "leaf":
        return {node[1]}, {node[1]: 0}
    rows = [0] * n
    acc = _eval_rec(node, rows)
    return acc, rows


def _eval_rec(node, rows):
    kind = node[0]
    if kind == "leaf":
        return 1 << node[1]
    masks = [_eval_rec(child, rows) for child in node[1]]
    if kind == "join":
        for i, mi in enumerate(masks):
            for mj in masks[i + 1:]:
                for v in bits_of(mi):
                    rows[v] |= mj
                for v in bits_of(mj):
                    rows[v] |= mi
    elif kind != "union":
        raise ValueError(f"bad cotree node kind {kind!r}")
    out = 0
    for m in masks:
        out |= m
    return out


def verify_cotree_certificate(g, cert):
    rows = [0] * g.n
    covered = _eval_rec(cert, rows) if g.n else 0
    return covered == (1 << g.n) - 1 and tuple(rows) == g.rows


def verify_peo_certificate(g, order):
    """Each vertex's later neighbors in the ordering must form a clique."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        return False
    remaining = (1 << g.n) - 1
    for v in order:
        remaining &= ~(1 << v)
        lmask = g.rows[v] & remaining
        for u in bits_of(lmask):
            if lmask & ~g.rows[u] & ~(1 << u):
                return False
    return True


def verify_certificate(g, verdict):
    if not verdict.member:
        return verify_witness(g, verdict.witness)
    if verdict.cls == SPLIT:
        return verify_split_certificate(g, verdict.certificate)
    if verdict.cls == THRESHOLD:
        return verify_threshold_certificate(g, verdict.certificate)
    if verdict.cls == COGRAPH:
        return verify_cotree_certificate(g, verdict.certificate)
    if verdict.cls == CHORDAL:
        return verify_peo_certificate(g, verdict.certificate)
    if verdict.cls == TWO_K2_FREE:
        return verdict.certificate is None
    return False


# ---------------------------------------------------------------------------
# structural witness extraction helpers
# ---------------------------------------------------------------------------


def _find_2k2_edgescan(g, alive=None):
    """First 2K2 under lexicographic edge order, or None."""
    full = (1 << g.n) - 1 if alive is None else alive
    for a in range(g.n):
        if not (full >> a) & 1:
            continue
        ra = g.rows[a] & full
        nb = ra >> (a + 1)
        b = a + 1
        while nb:
            shift = (nb & -nb).bit_length() - 1
            b += shift
            rest = full & ~(g.rows[a] | g.rows[b] | (1 << a) | (1 << b))
            for c in bits_of(rest):
                rc = g.rows[c] & rest
                rc &= ~((1 << (c + 1)) - 1)
                if rc:
                    d = (rc & -rc).bit_length() - 1
                    return (a, b, c, d)
            nb >>= shift + 1
            b += 1
    return None


def _find_c4(g):
    """First C4 as a sorted 4-set {u, w} nonadjacent + 2 nonadjacent commons."""
    for u in range(g.n):
        ru = g.rows[u]
        for w in range(u + 1, g.n):
            if (ru >> w) & 1:
                continue
            common = ru & g.rows[w]
            if common.bit_count() < 2:
                continue
            for x in bits_of(common):
                rest = common & ~g.rows[x] & ~(1 << x)
                rest &= ~((1 << (x + 1)) - 1)
                if rest:
                    y = (rest & -rest).bit_length() - 1
                    return tuple(sorted((u, x, w, y)))
    return None


def _find_p4_pathscan(g, mask=None):
    """An induced 4-path a-b-c-d inside mask, or None (ordered path)."""
    full = (1 << g.n) - 1 if mask is None else mask
    for b in range(g.n):
        if not (full >> b) & 1:
            continue
        rb = g.rows[b] & full
        for c in bits_of(rb):
            rc = g.rows[c] & full
            a_set = rb & ~rc & ~(1 << c)
            d_set = rc & ~rb & ~(1 << b)
            if not a_set or not d_set:
                continue
            for a in bits_of(a_set):
                free = d_set & ~g.rows[a] & ~(1 << a)
                if free:
                    d = (free & -free).bit_length() - 1
                    return (a, b, c, d)
    return None


def _bfs_path(g, allowed, src, dst):
    """Shortest path src -> dst within the allowed mask, or None."""
    if src == dst:
        return [src]
    prev = {src: None}
    frontier = 1 << src
    seen = 1 << src
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            cand = g.rows[v] & allowed & ~seen
            for u in bits_of(cand):
                prev[u] = v
                if u == dst:
                    path = [u]
                    while path[-1] != src:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
            nxt |= cand
            seen |= cand
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------


def is_split(g):
    """Degree-sequence split test with a greedy partition certificate."""
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs == rhs:
        cert = _split_partition(g, order, m)
        if cert is not None:
            return ClassVerdict(SPLIT, True, certificate=cert)
        raise AssertionError("split degree test passed but no partition found")
    quad = _find_c4(g)
    if quad is not None:
        return ClassVerdict(SPLIT, False, witness=Witness("C4", quad))
    pair = _find_2k2_edgescan(g)
    if pair is not None:
        return ClassVerdict(SPLIT, False, witness=Witness("2K2", tuple(sorted(pair))))
    hole = _extract_any_hole(g)
    if hole is not None and len(hole) == 5:
        return ClassVerdict(SPLIT, False, witness=hole_witness(hole))
    raise AssertionError("split degree test failed but no forbidden subgraph found")


def _split_partition(g, order, m):
    """Try top-m clique / rest independent, repairing boundary-degree ties."""
    cand = (tuple(sorted(order[:m])), tuple(sorted(order[m:])))
    if verify_split_certificate(g, cand):
        return cand
    if m == 0 or m == g.n:
        return None
    boundary = g.degree(order[m - 1])
    ins = [v for v in order[:m] if g.degree(v) == boundary]
    outs = [v for v in order[m:] if g.degree(v) == boundary]
    for u in ins:
        for w in outs:
            clique = sorted(set(order[:m]) - {u} | {w})
            indep = sorted(set(order[m:]) - {w} | {u})
            cand = (tuple(clique), tuple(indep))
            if verify_split_certificate(g, cand):
                return cand
    return None


def is_threshold(g):
    """Peel isolated/dominating vertices; certificate is the insertion order."""
    n = g.n
    alive = (1 << n) - 1
    rows = list(g.rows)
    peel = []
    count = n
    while count:
        pick = None
        for v in bits_of(alive):
            if rows[v] == 0:
                pick = (v, "isolated")
                break
        if pick is None:
            for v in bits_of(alive):
                if rows[v].bit_count() == count - 1:
                    pick = (v, "dominating")
                    break
        if pick is None:
            break
        v = pick[0]
        alive &= ~(1 << v)
        for u in bits_of(rows[v]):
            rows[u] &= ~(1 << v)
        rows[v] = 0
        peel.append(pick)
        count -= 1
    if count == 0:
        creation = tuple(reversed(peel))
        return ClassVerdict(THRESHOLD, True, certificate=creation)
    witness = _incomparable_witness(g, alive)
    return ClassVerdict(THRESHOLD, False, witness=witness)


def _incomparable_witness(g, alive):
    """P4 / C4 / 2K2 from a vicinal-incomparable pair in the stuck subgraph."""
    verts = bits_of(alive)
    for i, u in enumerate(verts):
        ru = g.rows[u] & alive
        for v in verts[i + 1:]:
            rv = g.rows[v] & alive
            a_set = ru & ~rv & ~(1 << v)
            b_set = rv & ~ru & ~(1 << u)
            if not a_set or not b_set:
                continue
            a = (a_set & -a_set).bit_length() - 1
            b = (b_set & -b_set).bit_length() - 1
            uv = g.has_edge(u, v)
            ab = g.has_edge(a, b)
            quad = tuple(sorted((u, v, a, b)))
            if not uv and not ab:
                return Witness("2K2", quad)
            if not uv and ab:
                return Witness("P4", quad)   # u-a-b-v
            if uv and not ab:
                return Witness("P4", quad)   # a-u-v-b
            return Witness("C4", quad)       # u-a-b-v-u
    raise AssertionError("stuck threshold peel without an incomparable pair")


def is_2k2_free(g):
    found = _find_2k2_edgescan(g)
    if found is None:
        return ClassVerdict(TWO_K2_FREE, True)
    return ClassVerdict(TWO_K2_FREE, False, witness=Witness("2K2", tuple(sorted(found))))


def is_cograph(g):
    """Recursive union / join decomposition with an explicit work stack."""
    if g.n == 0:
        return ClassVerdict(COGRAPH, True, certificate=("union", ()))
    full = (1 << g.n) - 1
    # each frame: (mask, parent_children, kind) built bottom-up
    result = {}
    stack = [("visit", full, None)]
    order = []
    while stack:
        action, mask, key = stack.pop()
        if action == "emit":
            kind, parts = key
            children = tuple(result.pop(p) for p in parts)
            result[mask] = (kind, children)
            continue
        count = mask.bit_count()
        if count == 1:
            result[mask] = ("leaf", mask.bit_length() - 1)
            continue
        comps = _components_in_mask(g.rows, mask)
        if len(comps) > 1:
            stack.append(("emit", mask, ("union", comps)))
            stack.extend(("visit", c, None) for c in comps)
            continue
        cocomps = _co_components_in_mask(g.rows, mask)
        if len(cocomps) > 1:
            stack.append(("emit", mask, ("join", cocomps)))
            stack.extend(("visit", c, None) for c in cocomps)
            continue
        path = _find_p4_pathscan(g, mask)
        if path is None:
            raise AssertionError("connected co-connected subgraph without a P4")
        return ClassVerdict(COGRAPH, False,
                            witness=Witness("P4", tuple(sorted(path))))
    return ClassVerdict(COGRAPH, True, certificate=result[full])


def _components_in_mask(rows, mask):
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= rows[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def _co_components_in_mask(rows, mask):
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= ~rows[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def lex_bfs(g):
    """LexBFS visit order; ties broken toward the lowest vertex index."""
    if g.n == 0:
        return []
    slices = [list(range(g.n))]
    out = []
    while slices:
        head = slices[0]
        v = head.pop(0)
        if not head:
            slices.pop(0)
        out.append(v)
        nbrs = g.rows[v]
        new_slices = []
        for sl in slices:
            hit = [u for u in sl if (nbrs >> u) & 1]
            miss = [u for u in sl if not (nbrs >> u) & 1]
            if hit:
                new_slices.append(hit)
            if miss:
                new_slices.append(miss)
        slices = new_slices
    return out


def is_chordal(g):
    """LexBFS + elimination check; failures yield an induced hole."""
    sigma = lex_bfs(g)
    pos = {v: i for i, v in enumerate(sigma)}
    earlier = [0] * g.n   # neighbors visited before v
    seen_mask = 0
    for v in sigma:
        earlier[v] = g.rows[v] & seen_mask
        seen_mask |= 1 << v
    failures = []
    for v in sigma:
        rn = earlier[v]
        if rn.bit_count() < 2:
            continue
        p = max(bits_of(rn), key=lambda u: pos[u])
        missing = rn & ~g.rows[p] & ~(1 << p)
        if missing:
            failures.append((v, p, missing))
    if not failures:
        peo = tuple(reversed(sigma))
        return ClassVerdict(CHORDAL, True, certificate=peo)
    for v, p, missing in failures:
        for x in bits_of(missing):
            hole = _hole_through(g, v, x, p)
            if hole is not None:
                return ClassVerdict(CHORDAL, False, witness=hole_witness(hole))
    hole = _extract_any_hole(g)
    if hole is not None:
        return ClassVerdict(CHORDAL, False, witness=hole_witness(hole))
    raise AssertionError("elimination check failed but no hole found")


def _hole_through(g, u, x, p):
    """Hole u-x-...-p-u via a shortest x..p path avoiding N[u] - {x, p}."""
    full = (1 << g.n) - 1
    allowed = full & ~(g.rows[u] | (1 << u)) | (1 << x) | (1 << p)
    path = _bfs_path(g, allowed, x, p)
    if path is None or len(path) < 3:
        return None
    return [u] + path


def _extract_any_hole(g):
    """DFS for any chordless cycle of length >= 4 (exhaustive)."""
    return _hole_dfs(g, 4, g.n)


def _hole_dfs(g, min_len, max_len):
    """First chordless cycle with length in [min_len, max_len], or None.

    Exhaustive canonical DFS: a hole is produced as a path starting at its
    minimum vertex, with the second vertex smaller than the closing one.
    Prefixes keep the invariant that non-consecutive path vertices are
    non-adjacent, and interior vertices avoid the start's neighborhood.
    """
    lo = max(min_len, 4)
    hi = max_len
    if hi < lo:
        return None
    for v0 in range(g.n):
        above = -1 << (v0 + 1)  # vertices strictly greater than v0
        r0 = g.rows[v0]
        stack = [[v0, v1] for v1 in reversed(bits_of(r0 & above))]
        while stack:
            path = stack.pop()
            tail = path[-1]
            length = len(path)
            closes = length > 2 and bool((r0 >> tail) & 1)
            if closes:
                # tail adjacent to the start: either an admissible hole
                # or a dead end (extending would chord through v0)
                if lo <= length <= hi and path[1] < tail:
                    return path
                continue
            if length >= hi:
                continue
            cand = g.rows[tail] & above & ~(1 << path[1])
            for p in path[1:-1]:
                cand &= ~g.rows[p] & ~(1 << p)
            for w in reversed(bits_of(cand)):
                stack.append(path + [w])
    return None


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


def _matches_pattern(g, verts, pattern):
    return verify_witness(g, Witness(pattern, tuple(verts)))


def _pattern_codes(size, pattern):
    """All pair-bit codes of labeled graphs on `size` vertices inducing it."""
    pairs = list(combinations(range(size), 2))
    out = set()
    for code in range(1 << len(pairs)):
        g = UndirectedGraph.from_edges(
            size, [pairs[i] for i in range(len(pairs)) if (code >> i) & 1])
        if _matches_pattern(g, tuple(range(size)), pattern):
            out.add(code)
    return frozenset(out)


_CODES = {}


def _codes_for(pattern):
    if pattern not in _CODES:
        _CODES[pattern] = _pattern_codes(5 if pattern == "C5" else 4, pattern)
    return _CODES[pattern]


def _find_2k2_pairwise(g):
    """Independent exhaustive 2K2 test: scan all pairs of disjoint edges."""
    edges = g.edges()
    if not edges:
        return None
    closed = [g.rows[a] | g.rows[b] | (1 << a) | (1 << b) for a, b in edges]
    ebits = [(1 << a) | (1 << b) for a, b in edges]
    if g.n <= 64:
        import numpy as np

        c = np.array(closed, dtype=np.uint64)
        e = np.array(ebits, dtype=np.uint64)
        hits = np.nonzero((c[:, None] & e[None, :]) == 0)
        if len(hits[0]) == 0:
            return None
        i, j = int(hits[0][0]), int(hits[1][0])
        return list(edges[i]) + list(edges[j])
    for i in range(len(edges)):
        ci = closed[i]
        for j in range(i + 1, len(edges)):
            if not ci & ebits[j]:
                return list(edges[i]) + list(edges[j])
    return None


def _pattern_find(g, pattern):
    """Fast exhaustive search; returns a sorted witness list or None."""
    if pattern == "P4":
        found = _find_p4_pathscan(g)
        return sorted(found) if found is not None else None
    if pattern == "C4":
        found = _find_c4(g)
        return sorted(found) if found is not None else None
    if pattern == "C5":
        found = _hole_dfs(g, 5, 5)
        return sorted(found) if found is not None else None
    if pattern == "2K2":
        found = _find_2k2_pairwise(g)
        return sorted(found) if found is not None else None
    raise ValueError(f"unknown pattern {pattern!r}")


def find_induced(g, pattern, cap=HOLE_LENGTH_CAP, least=True):
    """Lexicographically least induced copy of a fixed pattern, or None.

    Patterns: "P4", "C4", "C5", "2K2", or ("hole", k) for a chordless cycle
    of length >= k (found by bounded DFS, not lexicographically least).
    Absence is decided by a fast exhaustive scan before the ordered subset
    enumeration locates the least witness; with least=False the scan's own
    (deterministic, not necessarily least) witness is returned directly.
    """
    if isinstance(pattern, tuple) and pattern[0] == "hole":
        k = pattern[1]
        if k < 4:
            raise ValueError("holes have length at least 4")
        if k > cap:
            raise LengthCapExceeded(f"hole length {k} beyond cap {cap}")
        return _hole_dfs(g, k, min(cap, g.n))
    size = {"P4": 4, "C4": 4, "2K2": 4, "C5": 5}[pattern]
    found = _pattern_find(g, pattern)
    if found is None or not least:
        return found
    codes = _codes_for(pattern)
    rows = g.rows
    for verts in combinations(range(g.n), size):
        code = 0
        bit = 1
        for i in range(size):
            ri = rows[verts[i]]
            for j in range(i + 1, size):
                if (ri >> verts[j]) & 1:
                    code |= bit
                bit <<= 1
        if code in codes:
            return list(verts)
    raise AssertionError("pattern existence scan disagreed with enumeration")


def find_induced_exact_cycle(g, length):
    """Any induced cycle of exactly this length, by exhaustive DFS."""
    if length == 3:
        for a in range(g.n):
            ra = g.rows[a] & (-1 << (a + 1))
            for b in bits_of(ra):
                common = ra & g.rows[b] & (-1 << (b + 1))
                if common:
                    c = (common & -common).bit_length() - 1
                    return [a, b, c]
        return None
    return _hole_dfs(g, length, length)


def recognize_all(g):
    """All five verdicts keyed by class tag."""
    return {
        SPLIT: is_split(g),
        THRESHOLD: is_threshold(g),
        TWO_K2_FREE: is_2k2_free(g),
        COGRAPH: is_cograph(g),
        CHORDAL: is_chordal(g),
    }


def random_graph(n, index, seed_base=0x5EED):
    """Deterministic test graph: generator seeded by (seed_base, n, index);
    edge density drawn uniformly per graph, then independent edge bits."""
    rng = random.Random(seed_base * 0x1000003 + n * 0x10001 + index)
    thresh = rng.randint(1, 9) * 2 ** 16 // 10
    npairs = n * (n - 1) // 2
    words = rng.getrandbits(16 * npairs) if npairs else 0
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (words >> (16 * k)) & 0xFFFF < thresh:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return UndirectedGraph(n, rows)
