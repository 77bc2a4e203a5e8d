"""Simple undirected graphs over indexed vertices with packed-bit adjacency.

Rows are stored as Python integers used as bitsets (bit j of row i set iff
{i, j} is an edge), which keeps the n <= 64 case allocation-free and still
handles the tens-of-thousands-of-vertices commuting graphs within memory
(a 29120-vertex graph is about 106 MB of row bitmaps).
"""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange, SizeCap

STRONG_PRODUCT_CAP = 8192


class UndirectedGraph:
    """Immutable simple graph; vertices 0..n-1, optional labels."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n, rows, labels=None):
        self.n = n
        self.rows = tuple(rows)
        self.labels = tuple(labels) if labels is not None else None
        if len(self.rows) != n:
            raise ValueError("row count must equal vertex count")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def from_bool_matrix(cls, mat, labels=None):
        mat = np.asarray(mat, dtype=bool)
        n = mat.shape[0]
        np.fill_diagonal(mat, False)
        if not np.array_equal(mat, mat.T):
            raise ValueError("adjacency matrix must be symmetric")
        packed = np.packbits(mat, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
        return cls(n, rows, labels)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << i) for i in range(n)])

    @classmethod
    def empty(cls, n):
        return cls(n, [0] * n)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v):
        return self.rows[v].bit_count()

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                shift = (r & -r).bit_length() - 1
                out.append((u, v + shift))
                r >>= shift + 1
                v += shift + 1
        return out

    def neighbors(self, v):
        return bits_of(self.rows[v])

    def label_of(self, v):
        return self.labels[v] if self.labels is not None else v

    def __eq__(self, other):
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"<UndirectedGraph n={self.n} m={self.edge_count()}>"

    # -- derived graphs ----------------------------------------------------

    def induced_subgraph(self, vertices):
        verts = list(vertices)
        if any(verts[i] >= verts[i + 1] for i in range(len(verts) - 1)):
            raise ValueError("vertex list must be strictly increasing")
        if verts and (verts[0] < 0 or verts[-1] >= self.n):
            raise IndexOutOfRange("vertex index out of range")
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            r = self.rows[v]
            new = 0
            for u in verts:
                if (r >> u) & 1:
                    new |= 1 << pos[u]
            rows.append(new)
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in verts]
        elif verts:
            labels = verts
        return UndirectedGraph(len(verts), rows, labels)

    def complement(self):
        full = (1 << self.n) - 1
        rows = [(~r) & full & ~(1 << i) for i, r in enumerate(self.rows)]
        return UndirectedGraph(self.n, rows, self.labels)

    def remove_dominant(self):
        """Iteratively strip vertices adjacent to every other vertex.

        Returns (reduced graph, removed vertex indices of this graph).
        A single isolated vertex counts as dominant (it is adjacent to all
        zero other vertices), matching the complete-graph convention.
        """
        alive = list(range(self.n))
        rows = list(self.rows)
        removed = []
        while alive:
            full = 0
            for v in alive:
                full |= 1 << v
            dominant = [v for v in alive if rows[v] == full & ~(1 << v)]
            if not dominant:
                break
            removed.extend(dominant)
            dom_mask = 0
            for v in dominant:
                dom_mask |= 1 << v
            alive = [v for v in alive if not (dom_mask >> v) & 1]
            for v in alive:
                rows[v] &= ~dom_mask
        removed.sort()
        sub = self.induced_subgraph(alive)
        return sub, removed

    def strong_product(self, other):
        """Vertex (v, w) indexed v*|other| + w; adjacency when both
        coordinates are equal-or-adjacent and not both equal."""
        n1, n2 = self.n, other.n
        if n1 * n2 > STRONG_PRODUCT_CAP:
            raise SizeCap(f"strong product on {n1 * n2} vertices exceeds the cap")
        rows = []
        closed1 = [r | (1 << i) for i, r in enumerate(self.rows)]
        closed2 = [r | (1 << i) for i, r in enumerate(other.rows)]
        for v in range(n1):
            cv = closed1[v]
            for w in range(n2):
                cw = closed2[w]
                row = 0
                rem = cv
                while rem:
                    bpos = (rem & -rem).bit_length() - 1
                    rem &= rem - 1
                    row |= cw << (bpos * n2)
                row &= ~(1 << (v * n2 + w))
                rows.append(row)
        return UndirectedGraph(n1 * n2, rows)

    def connected_components(self):
        """List of sorted vertex lists, ordered by least vertex."""
        unseen = (1 << self.n) - 1
        comps = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits_of(frontier):
                    nxt |= self.rows[v]
                nxt &= ~comp
                comp |= nxt
                frontier = nxt
            comps.append(bits_of(comp))
            unseen &= ~comp
        return comps

    # -- serialization -----------------------------------------------------

    def to_edge_list_text(self):
        lines = [f"{self.n} {self.edge_count()}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n, m = (int(tok) for tok in lines[0].split())
        edges = []
        for ln in lines[1:]:
            u, v = (int(tok) for tok in ln.split())
            edges.append((u, v))
        if len(edges) != m:
            raise ValueError(f"header declares {m} edges, found {len(edges)}")
        return cls.from_edges(n, edges)

    def to_packed_text(self):
        """One-line format: ``n payload``, upper-triangle bits row-major
        ((0,1),(0,2),...,(1,2),...), packed into 6-bit chunks rendered as
        the printable characters chr(48+v)."""
        bits = []
        for u in range(self.n):
            r = self.rows[u]
            for v in range(u + 1, self.n):
                bits.append((r >> v) & 1)
        while len(bits) % 6:
            bits.append(0)
        chars = []
        for i in range(0, len(bits), 6):
            val = 0
            for j in range(6):
                val = (val << 1) | bits[i + j]
            chars.append(chr(48 + val))
        return f"{self.n} {''.join(chars)}"

    @classmethod
    def from_packed_text(cls, text):
        parts = text.split()
        n = int(parts[0])
        payload = parts[1] if len(parts) > 1 else ""
        bits = []
        for ch in payload:
            val = ord(ch) - 48
            if not 0 <= val < 64:
                raise ValueError(f"bad packed character {ch!r}")
            bits.extend((val >> (5 - j)) & 1 for j in range(6))
        rows = [0] * n
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                if idx < len(bits) and bits[idx]:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                idx += 1
        return cls(n, rows)


def bits_of(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        b = (mask & -mask).bit_length() - 1
        out.append(b)
        mask &= mask - 1
    return out


def commuting_graph(group, scope="noncentral"):
    """The commuting graph of a group on all or the non-central elements.

    Vertices follow element-index order; the vertex labels record the
    element indices. Under the all-elements scope every central element is
    a dominant vertex.
    """
    if scope not in ("all", "noncentral"):
        raise ValueError("scope must be 'all' or 'noncentral'")
    n = group.order
    if scope == "noncentral":
        verts = np.nonzero(~group.center_mask())[0]
    else:
        verts = np.arange(n)
    verts = verts.astype(np.int64)
    m = len(verts)
    if group.table is not None:
        sub = group.table[np.ix_(verts, verts)]
        adj = sub == sub.T
        np.fill_diagonal(adj, False)
        packed = np.packbits(adj, axis=1, bitorder="little")
        rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(m)]
        return UndirectedGraph(m, rows, labels=verts.tolist())
    images = group.images[verts]
    rows = []
    for i in range(m):
        pg = images[i]
        left = images[:, pg]
        right = pg[images]
        eq = (left == right).all(axis=1)
        eq[i] = False
        packed = np.packbits(eq, bitorder="little")
        rows.append(int.from_bytes(packed.tobytes(), "little"))
    return UndirectedGraph(m, rows, labels=verts.tolist())


def path_graph(n):
    return UndirectedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    edges = [(i, (i + 1) % n) for i in range(n)]
    return UndirectedGraph.from_edges(n, edges)


def two_k2():
    return UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
