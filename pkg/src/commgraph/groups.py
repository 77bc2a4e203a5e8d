"""Finite groups with Cayley-table and permutation backends.

Elements are always the indices 0..order-1 with index 0 the identity.
Permutation-backend groups are built by breadth-first closure of their
generators, so element indexing is reproducible: generators are applied
in input order to elements in discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ClosureLimitExceeded,
    IndexOutOfRange,
    NonBijectiveGenerator,
    NotASubgroup,
    NotNormal,
    OrderMismatch,
)

CAYLEY_THRESHOLD = 2048
CLOSURE_CAP = 2_000_000

BACKEND_CAYLEY = "cayley"
BACKEND_PERMUTATION = "permutation"


class Group:
    """A finite group on element indices 0..order-1 (0 = identity).

    Exactly one of the two backends drives multiplication:

    * ``cayley``: a full order x order multiplication table.
    * ``permutation``: per-element image arrays on ``degree`` points,
      multiplied by composition, with an index keyed on the image bytes.

    Groups of order <= CAYLEY_THRESHOLD built from permutations are
    converted to the table backend but keep their permutation images for
    labels and cross-checks.
    """

    def __init__(self, order, backend, table=None, inv=None, images=None,
                 degree=None, index_map=None, names=None, label=None,
                 known_generators=None):
        self.order = order
        self.backend = backend
        self.table = table
        self.inv = inv
        self.images = images
        self.degree = degree
        self._index_map = index_map
        self.names = names
        self.label = label
        self.known_generators = known_generators
        self._order_cache = None
        self._center_cache = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_table(cls, table, names=None, label=None):
        """Build a Cayley-table group; validates identity and inverses."""
        table = np.asarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise ValueError("multiplication table must be square")
        if not (np.array_equal(table[0], np.arange(n))
                and np.array_equal(table[:, 0], np.arange(n))):
            raise ValueError("index 0 must act as a two-sided identity")
        inv = np.empty(n, dtype=np.int32)
        for g in range(n):
            hits = np.nonzero(table[g] == 0)[0]
            if len(hits) != 1:
                raise ValueError(f"element {g} does not have a unique inverse")
            inv[g] = hits[0]
        return cls(n, BACKEND_CAYLEY, table=table, inv=inv, names=names,
                   label=label)

    def _check(self, g):
        if not 0 <= g < self.order:
            raise IndexOutOfRange(f"element index {g} out of range 0..{self.order - 1}")
        return int(g)

    # -- arithmetic ----------------------------------------------------

    def multiply(self, g, h):
        g = self._check(g)
        h = self._check(h)
        if self.table is not None:
            return int(self.table[g, h])
        composed = self.images[g][self.images[h]]
        return self._index_map[composed.tobytes()]

    def inverse(self, g):
        g = self._check(g)
        if self.inv is not None:
            return int(self.inv[g])
        inv_img = np.empty(self.degree, dtype=self.images.dtype)
        inv_img[self.images[g]] = np.arange(self.degree, dtype=self.images.dtype)
        return self._index_map[inv_img.tobytes()]

    def element_order(self, g):
        g = self._check(g)
        if self._order_cache is not None:
            return int(self._order_cache[g])
        k, acc = 1, g
        while acc != 0:
            acc = self.multiply(acc, g)
            k += 1
        return k

    def element_orders(self):
        """Orders of all elements, cached."""
        if self._order_cache is None:
            self._order_cache = np.array(
                [self.element_order(g) for g in range(self.order)],
                dtype=np.int32)
        return self._order_cache

    def commutes(self, g, h):
        return self.multiply(g, h) == self.multiply(h, g)

    def conjugate(self, g, x):
        """x * g * x^-1."""
        return self.multiply(self.multiply(x, g), self.inverse(x))

    def commutator(self, g, h):
        """g h g^-1 h^-1; identity exactly when g and h commute."""
        return self.multiply(self.multiply(g, h),
                             self.inverse(self.multiply(h, g)))

    # -- subsets -------------------------------------------------------

    def centralizer_mask(self, g):
        """Boolean vector over all elements: commutes with g."""
        g = self._check(g)
        if self.table is not None:
            return np.asarray(self.table[g, :] == self.table[:, g])
        pg = self.images[g]
        left = self.images[:, pg]          # h(g(x)) = (h*g)(x)
        right = pg[self.images]            # g(h(x)) = (g*h)(x)
        return (left == right).all(axis=1)

    def centralizer(self, g):
        return ElementSet(self, np.nonzero(self.centralizer_mask(g))[0].tolist())

    def center_mask(self):
        if self._center_cache is None:
            if self.table is not None:
                self._center_cache = np.asarray(self.table == self.table.T).all(axis=1)
            else:
                mask = np.ones(self.order, dtype=bool)
                # commuting with a generating set suffices; all elements are
                # products of the rows discovered during closure, so a full
                # scan against every element is avoided by intersecting
                # centralizer masks of a generating set.
                for g in self.generator_indices():
                    mask &= self.centralizer_mask(g)
                self._center_cache = mask
        return self._center_cache

    def center(self):
        return ElementSet(self, np.nonzero(self.center_mask())[0].tolist())

    def generator_indices(self):
        """A small generating set, found greedily over the index order."""
        if self.known_generators is not None:
            return list(self.known_generators)
        if self.order == 1:
            return []
        gens = []
        known = {0}
        for g in range(1, self.order):
            if g in known:
                continue
            gens.append(g)
            known = set(self._closure_indices(gens))
            if len(known) == self.order:
                break
        return gens

    def _closure_indices(self, seed):
        out = [0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in seed:
                    y = self.multiply(x, s)
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
                        nxt.append(y)
            frontier = nxt
        return out

    def subgroup_closure(self, seed):
        """Smallest subgroup containing seed; enforces the Lagrange check."""
        seed_idx = _as_index_list(self, seed)
        elems = sorted(self._closure_indices(seed_idx))
        if self.order % len(elems) != 0:
            raise AssertionError(
                f"closure size {len(elems)} does not divide group order {self.order}")
        return ElementSet(self, elems)

    def is_abelian(self):
        if self.table is not None:
            return bool(np.array_equal(self.table, self.table.T))
        gens = self.generator_indices()
        return all(self.commutes(g, h) for g in gens for h in gens)

    # -- element labels ------------------------------------------------

    def element_name(self, g):
        g = self._check(g)
        if self.names is not None:
            return self.names[g]
        if self.images is not None:
            return cycle_notation(self.images[g])
        return f"g{g}"

    # -- quotients and series -------------------------------------------

    def quotient(self, normal):
        """Quotient by a verified normal subgroup (table backend only).

        Coset representative = least element index in the coset; the coset
        of the identity comes first, so index 0 stays the identity.
        """
        if self.table is None:
            raise NotASubgroup("quotient requires a Cayley-table backend")
        nset = _as_index_list(self, normal)
        members = set(nset)
        if 0 not in members:
            raise NotASubgroup("subgroup must contain the identity")
        for a in nset:
            for b in nset:
                if self.multiply(a, b) not in members:
                    raise NotASubgroup("set is not closed under multiplication")
        for g in range(self.order):
            for a in nset:
                if self.conjugate(a, g) not in members:
                    raise NotNormal(f"conjugate of {a} by {g} escapes the subgroup")
        coset_of = np.full(self.order, -1, dtype=np.int32)
        reps = []
        for g in range(self.order):
            if coset_of[g] >= 0:
                continue
            cid = len(reps)
            reps.append(g)
            for a in nset:
                coset_of[self.multiply(g, a)] = cid
        m = len(reps)
        qtable = np.empty((m, m), dtype=np.int32)
        for i, r in enumerate(reps):
            for j, s in enumerate(reps):
                qtable[i, j] = coset_of[self.multiply(r, s)]
        label = f"{self.label}/N" if self.label else None
        q = Group.from_table(qtable, label=label)
        q.coset_reps = reps
        q.coset_of = coset_of
        return q

    def nilpotency_class(self):
        """Upper central series length, or None if not nilpotent.

        Z_{i+1} = {g : [g, x] in Z_i for all x}; no quotient groups needed,
        so this works on either backend.
        """
        if self.order == 1:
            return 0
        in_z = self.center_mask().copy()
        level = 1
        while True:
            if in_z.all():
                return level
            grew = False
            new = in_z.copy()
            for g in range(self.order):
                if new[g]:
                    continue
                if all(in_z[self.commutator(g, x)] for x in range(self.order)):
                    new[g] = True
                    grew = True
            if not grew:
                return None
            in_z = new
            level += 1

    # -- conversion ------------------------------------------------------

    def to_cayley(self):
        """Build the full multiplication table from the permutation images."""
        if self.table is not None:
            return self
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        for g in range(n):
            composed = self.images[g][self.images]  # table[g, h] = g*h
            for h in range(n):
                table[g, h] = self._index_map[composed[h].tobytes()]
        grp = Group(n, BACKEND_CAYLEY, table=table, images=self.images,
                    degree=self.degree, index_map=self._index_map,
                    names=self.names, label=self.label,
                    known_generators=self.known_generators)
        grp.inv = np.empty(n, dtype=np.int32)
        for g in range(n):
            grp.inv[g] = int(np.nonzero(table[g] == 0)[0][0])
        return grp

    def __repr__(self):
        tag = self.label or "Group"
        return f"<{tag} order={self.order} backend={self.backend}>"


@dataclass(frozen=True)
class ElementSet:
    """A sorted set of element indices inside a fixed group."""

    group: Group
    indices: Sequence[int]

    def __post_init__(self):
        idx = list(self.indices)
        if idx != sorted(set(idx)):
            raise ValueError("indices must be strictly increasing")
        if idx and (idx[0] < 0 or idx[-1] >= self.group.order):
            raise IndexOutOfRange("element index out of range")
        object.__setattr__(self, "indices", tuple(idx))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, g):
        return g in set(self.indices)

    def is_abelian_subset(self):
        idx = self.indices
        for i, a in enumerate(idx):
            for b in idx[i + 1:]:
                if not self.group.commutes(a, b):
                    return False
        return True


@dataclass(frozen=True)
class GeneratorSpec:
    """Degree plus a list of permutations given as image tuples on 0..degree-1."""

    degree: int
    generators: tuple

    @classmethod
    def from_images(cls, degree, generators):
        gens = []
        for g in generators:
            img = tuple(int(x) for x in g)
            if len(img) != degree or sorted(img) != list(range(degree)):
                raise NonBijectiveGenerator(f"not a permutation of degree {degree}: {g}")
            gens.append(img)
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls(degree, tuple(gens))


def _as_index_list(group, seed):
    if isinstance(seed, ElementSet):
        if seed.group is not group:
            raise ValueError("element set belongs to a different group")
        return list(seed.indices)
    out = []
    for g in seed:
        if not 0 <= g < group.order:
            raise IndexOutOfRange(f"element index {g} out of range")
        out.append(int(g))
    return out


def group_from_generators(spec, order_hint=None, closure_cap=CLOSURE_CAP,
                          cayley_threshold=CAYLEY_THRESHOLD, label=None):
    """Closure-enumerate the group generated by permutation generators.

    Breadth-first over generator applications (generators in input order),
    starting from the identity, so indexing is deterministic. Groups of
    order <= cayley_threshold are converted to the table backend.
    """
    if not isinstance(spec, GeneratorSpec):
        spec = GeneratorSpec.from_images(spec[0], spec[1])
    d = spec.degree
    dtype = np.int16 if d < 2 ** 15 else np.int32
    gens = [np.array(g, dtype=dtype) for g in spec.generators]
    ident = np.arange(d, dtype=dtype)
    index_map = {ident.tobytes(): 0}
    elems = [ident]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            base = elems[x]
            for gen in gens:
                img = base[gen]  # (x * gen)(p) = x(gen(p))
                key = img.tobytes()
                if key not in index_map:
                    if len(elems) >= closure_cap:
                        raise ClosureLimitExceeded(
                            f"closure exceeded cap of {closure_cap} elements")
                    index_map[key] = len(elems)
                    elems.append(img)
                    nxt.append(index_map[key])
        frontier = nxt
    order = len(elems)
    if order_hint is not None and order_hint != order:
        raise OrderMismatch(order_hint, order)
    images = np.vstack(elems).astype(dtype)
    gen_idx = sorted({index_map[g.tobytes()] for g in gens} - {0})
    grp = Group(order, BACKEND_PERMUTATION, images=images, degree=d,
                index_map=index_map, label=label, known_generators=gen_idx)
    if order <= cayley_threshold:
        grp = grp.to_cayley()
    return grp


def cycle_notation(image, one_based=True):
    """Cycle notation of an image array; fixed points suppressed, () if identity."""
    n = len(image)
    seen = [False] * n
    parts = []
    off = 1 if one_based else 0
    for start in range(n):
        if seen[start] or image[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        cur = int(image[start])
        while cur != start:
            cyc.append(cur)
            seen[cur] = True
            cur = int(image[cur])
        parts.append("(" + " ".join(str(c + off) for c in cyc) + ")")
    return "".join(parts) if parts else "()"


def parse_cycles(text, degree):
    """Parse a cycle expression like ``(1 2)(3 4)`` into a 0-based image tuple.

    Points are 1..degree; whitespace and commas inside cycles are both
    accepted as separators. ``()`` denotes the identity.
    """
    image = list(range(degree))
    body = text.strip()
    if body in ("()", ""):
        return tuple(image)
    if body.count("(") != body.count(")"):
        raise ValueError(f"unbalanced cycle expression: {text!r}")
    moved = set()
    for chunk in body.replace(")", ")\x00").split("\x00"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad cycle chunk {chunk!r} in {text!r}")
        inner = chunk[1:-1].replace(",", " ").split()
        if not inner:
            continue
        pts = [int(tok) - 1 for tok in inner]
        for p in pts:
            if not 0 <= p < degree:
                raise ValueError(f"point {p + 1} outside degree {degree}")
            if p in moved:
                raise ValueError(f"point {p + 1} repeated in {text!r}")
            moved.add(p)
        for i, p in enumerate(pts):
            image[p] = pts[(i + 1) % len(pts)]
    if sorted(image) != list(range(degree)):
        raise NonBijectiveGenerator(f"cycle expression is not a permutation: {text!r}")
    return tuple(image)
