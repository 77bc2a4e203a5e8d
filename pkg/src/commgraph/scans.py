"""Catalog scans for groups whose commuting graph misses a class.

The expected-value fixtures come from the published classification of
small groups by commuting-graph class (the non-cograph groups of order
at most 36 by ID, and the non-cograph counts per order up to 128).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import IncompleteCoverage
from .graphs import commuting_graph
from .recognition import CHORDAL, COGRAPH, is_chordal, is_cograph

# Known classification fixtures: IDs of the groups of order <= 36 whose
# commuting graph is not a cograph.
EXPECTED_NONCOGRAPH_IDS_36 = (
    (24, 12), (32, 6), (32, 7), (32, 8), (32, 43), (32, 44),
    (32, 49), (32, 50), (36, 10),
)

# Known non-cograph group counts per order, up to order 128.
EXPECTED_NONCOGRAPH_COUNTS = {
    24: 1, 32: 7, 36: 1, 48: 10, 54: 2, 60: 2, 64: 115, 72: 11,
    80: 12, 84: 1, 96: 112, 100: 2, 108: 10, 112: 8, 120: 15,
    126: 2, 128: 1539,
}


@dataclass
class TableRow:
    order: int
    ids: list                     # indices of the flagged groups
    witnesses: dict = field(default_factory=dict)   # index -> Witness

    @property
    def count(self):
        return len(self.ids)


def _thread_count():
    try:
        return max(1, int(os.environ.get("COMMGRAPH_THREADS", "1")))
    except ValueError:
        return 1


def _scan(catalog, max_order, predicate, orders=None):
    """Rows of catalog groups failing the predicate, per complete order."""
    if orders is not None:
        for order in orders:
            if not catalog.is_complete(order):
                raise IncompleteCoverage(order)
        targets = sorted(orders)
    else:
        targets = [o for o in catalog.orders()
                   if o <= max_order and catalog.is_complete(o)]
    entries = [e for e in catalog.entries if e.order in set(targets)]

    def job(entry):
        group = entry.build()
        graph = commuting_graph(group, scope="noncentral")
        verdict = predicate(graph)
        return entry, verdict

    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, entries))
    else:
        results = [job(e) for e in entries]
    rows = {o: TableRow(order=o, ids=[]) for o in targets}
    for entry, verdict in sorted(results, key=lambda t: (t[0].order, t[0].index)):
        if not verdict.member:
            row = rows[entry.order]
            row.ids.append(entry.index)
            row.witnesses[entry.index] = verdict.witness
    return [rows[o] for o in targets]


def scan_noncograph(catalog, max_order, orders=None):
    return _scan(catalog, max_order, is_cograph, orders=orders)


def scan_nonchordal(catalog, max_order, orders=None):
    return _scan(catalog, max_order, is_chordal, orders=orders)


def table1_ids(catalog):
    """(order, index) pairs with a non-cograph commuting graph, order <= 36."""
    out = []
    for row in scan_noncograph(catalog, 36):
        out.extend((row.order, idx) for idx in row.ids)
    return tuple(out)


def table2_counts(catalog, max_order=72):
    """Non-cograph counts per covered order (only nonzero rows)."""
    out = {}
    for row in scan_noncograph(catalog, max_order):
        if row.count:
            out[row.order] = row.count
    return out


def minimal_noncograph_order(catalog, max_order=36):
    for row in scan_noncograph(catalog, max_order):
        if row.count:
            return row.order
    return None


def minimal_nonchordal_order(catalog, max_order=36):
    for row in scan_nonchordal(catalog, max_order):
        if row.count:
            return row.order
    return None
