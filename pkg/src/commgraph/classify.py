"""Group-level predicates and the per-group classification report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import NotASubgroup, NotFrobenius
from .graphs import commuting_graph
from .groups import ElementSet, Group
from .recognition import (
    ALL_CLASSES,
    CHORDAL,
    COGRAPH,
    SPLIT,
    THRESHOLD,
    TWO_K2_FREE,
    recognize_all,
    verify_certificate,
)

REPORT_SCHEMA = "classreport/1"


def omega_subgroup(group):
    """Closure of all elements of order > 2, plus an is-abelian flag.

    The closure is abelian exactly when the seed commutes pairwise.
    """
    orders = group.element_orders()
    seed = [int(g) for g in np.nonzero(orders > 2)[0]]
    closure = group.subgroup_closure(seed)
    abelian = True
    for i, a in enumerate(seed):
        if not abelian:
            break
        for b in seed[i + 1:]:
            if not group.commutes(a, b):
                abelian = False
                break
    return closure, abelian


def is_generalized_dihedral_odd(group):
    """Non-abelian G = A + x*A with A abelian of odd order and every
    outside element an involution inverting A. Returns (flag, A-or-None)."""
    if group.is_abelian():
        return False, None
    omega, abelian = omega_subgroup(group)
    if not abelian or len(omega) % 2 == 0 or 2 * len(omega) != group.order:
        return False, None
    members = set(omega)
    for x in range(group.order):
        if x in members:
            continue
        if group.element_order(x) != 2:
            return False, None
        for a in omega:
            if group.conjugate(a, x) != group.inverse(a):
                return False, None
    return True, omega


def _abelian_subset(group, indices):
    if group.table is not None:
        sub = group.table[np.ix_(indices, indices)]
        return bool(np.array_equal(sub, sub.T))
    for i, a in enumerate(indices):
        for b in indices[i + 1:]:
            if not group.commutes(a, b):
                return False
    return True


def is_ac_group(group):
    """Every non-central element has an abelian centralizer.
    Returns (flag, counterexample element or None)."""
    central = group.center_mask()
    for g in range(group.order):
        if central[g]:
            continue
        cz = np.nonzero(group.centralizer_mask(g))[0]
        if not _abelian_subset(group, cz):
            return False, g
    return True, None


def is_ca_group(group):
    """Every non-identity element has an abelian centralizer."""
    for g in range(1, group.order):
        cz = np.nonzero(group.centralizer_mask(g))[0]
        if not _abelian_subset(group, cz):
            return False
    return True


@dataclass(frozen=True)
class FrobeniusRecord:
    kernel: ElementSet
    complement: ElementSet
    kernel_order: int
    complement_order: int


def verify_frobenius(group, complement):
    """Check the trivial-intersection property for H, build the kernel, and
    verify the kernel/complement centralizer containments."""
    h = set(complement.indices if isinstance(complement, ElementSet) else complement)
    closure = group.subgroup_closure(sorted(h))
    if set(closure.indices) != h:
        raise NotASubgroup("the complement candidate is not a subgroup")
    union = set()
    for g in range(group.order):
        conj = frozenset(group.conjugate(x, g) for x in h)
        union |= conj
        if g not in h and len(conj & h) != 1:
            raise NotFrobenius(f"H meets its conjugate by element {g} beyond the identity")
    kernel = sorted(({0} | (set(range(group.order)) - union)))
    kclos = group.subgroup_closure(kernel)
    if set(kclos.indices) != set(kernel):
        raise NotFrobenius("kernel candidate is not closed")
    for g in range(group.order):
        for k in kernel:
            if group.conjugate(k, g) not in set(kernel):
                raise NotFrobenius("kernel is not normal")
    if len(kernel) * len(h) != group.order:
        raise NotFrobenius("kernel/complement orders do not multiply to the group order")
    kset = set(kernel)
    for x in sorted(h):
        if x == 0:
            continue
        cz = np.nonzero(group.centralizer_mask(x))[0]
        if not set(int(c) for c in cz) <= h:
            raise NotFrobenius(f"centralizer of complement element {x} escapes H")
    for k in kernel:
        if k == 0:
            continue
        cz = np.nonzero(group.centralizer_mask(k))[0]
        if not set(int(c) for c in cz) <= kset:
            raise NotFrobenius(f"centralizer of kernel element {k} escapes K")
    return FrobeniusRecord(kernel=ElementSet(group, kernel),
                           complement=ElementSet(group, sorted(h)),
                           kernel_order=len(kernel), complement_order=len(h))


@dataclass
class ClassReport:
    group_label: str
    order: int
    center_size: int
    scope: str
    verdicts: dict                 # class tag -> ClassVerdict
    is_abelian: bool
    is_generalized_dihedral_odd: bool
    is_ac: bool
    is_ca: bool
    frobenius: Optional[FrobeniusRecord] = None
    timings: dict = field(default_factory=dict)

    def member(self, cls):
        return self.verdicts[cls].member

    def validate(self):
        """Internal consistency: the split/threshold/2K2-free verdicts must
        coincide with each other and with the group predicate; threshold
        implies cograph and chordal. A violation is an implementation bug."""
        s, t, k = (self.member(SPLIT), self.member(THRESHOLD),
                   self.member(TWO_K2_FREE))
        expected = self.is_abelian or self.is_generalized_dihedral_odd
        if not (s == t == k == expected):
            raise RuntimeError(
                f"split/threshold/2K2-free equivalence violated for "
                f"{self.group_label}: split={s} threshold={t} 2k2free={k} "
                f"abelian-or-gdo={expected}")
        if t and not (self.member(COGRAPH) and self.member(CHORDAL)):
            raise RuntimeError(
                f"threshold verdict without cograph/chordal for {self.group_label}")

    def to_text(self):
        lines = [f"schema {REPORT_SCHEMA}",
                 f"group {self.group_label}",
                 f"order {self.order}",
                 f"center {self.center_size}",
                 f"scope {self.scope}",
                 f"abelian {_yn(self.is_abelian)}",
                 f"generalized-dihedral-odd {_yn(self.is_generalized_dihedral_odd)}",
                 f"ac-group {_yn(self.is_ac)}",
                 f"ca-group {_yn(self.is_ca)}"]
        for cls in ALL_CLASSES:
            v = self.verdicts[cls]
            if v.member:
                lines.append(f"class {cls} member certificate-ok")
            else:
                w = v.witness
                verts = " ".join(str(x) for x in w.vertices)
                lines.append(f"class {cls} non-member witness {w.pattern} {verts}")
        for name, dt in sorted(self.timings.items()):
            lines.append(f"timing {name} {dt:.6f}")
        return "\n".join(lines) + "\n"


def _yn(flag):
    return "yes" if flag else "no"


def classify_group(group, scope="noncentral", label=None, check_certificates=True):
    """Build the commuting graph, run all five recognizers and the group
    predicates, and validate the cross-class consistency rules."""
    t0 = time.perf_counter()
    graph = commuting_graph(group, scope=scope)
    timings = {"graph": time.perf_counter() - t0}
    verdicts = {}
    for cls, verdict in recognize_all(graph).items():
        t1 = time.perf_counter()
        if check_certificates and not verify_certificate(graph, verdict):
            raise RuntimeError(f"certificate for {cls} failed verification")
        verdicts[cls] = verdict
        timings[cls] = time.perf_counter() - t1
    t2 = time.perf_counter()
    abelian = group.is_abelian()
    gdo, _ = is_generalized_dihedral_odd(group)
    ac, _ = is_ac_group(group)
    ca = is_ca_group(group)
    timings["predicates"] = time.perf_counter() - t2
    report = ClassReport(
        group_label=label or group.label or f"order{group.order}",
        order=group.order,
        center_size=int(group.center_mask().sum()),
        scope=scope,
        verdicts=verdicts,
        is_abelian=abelian,
        is_generalized_dihedral_odd=gdo,
        is_ac=ac,
        is_ca=ca,
        timings=timings,
    )
    report.validate()
    return report
