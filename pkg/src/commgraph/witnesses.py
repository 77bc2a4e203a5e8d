"""Explicit 3x3 matrix quadruples inducing a 4-path in commuting graphs.

For special linear groups the quadruple lives in SL(3, q); for special
unitary groups in SU(3, q) inside GL(3, q^2), preserving the Hermitian
form x1^(q+1) + x2^(q+1) + x3^(q+1). In both cases the four matrices
commute exactly along the path g1 - g2 - g3 - g4, and for each
non-commuting pair the products g_i g_j and g_j g_i differ by more than a
scalar factor, so the path survives any central quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadQ
from .gf import GF, Matrix3

_PATH_PAIRS = {(0, 1), (1, 2), (2, 3)}


@dataclass(frozen=True)
class WitnessReport:
    q: int
    a_index: int
    b_index: int
    determinants_ok: bool
    commuting_pairs: tuple        # sorted (i, j) pairs that commute, 0-based
    nonscalar_ok: bool            # g_i g_j never a scalar multiple of g_j g_i
    hermitian_ok: bool = True     # unitary case only; trivially true for SL

    @property
    def is_induced_p4(self):
        return (set(self.commuting_pairs) == _PATH_PAIRS
                and self.determinants_ok and self.nonscalar_ok
                and self.hermitian_ok)


def _commutation_report(mats):
    commuting = []
    nonscalar_ok = True
    for i in range(4):
        for j in range(i + 1, 4):
            ij = mats[i] * mats[j]
            ji = mats[j] * mats[i]
            if ij == ji:
                commuting.append((i, j))
            elif ij.scalar_multiple_of(ji):
                nonscalar_ok = False
    return tuple(commuting), nonscalar_ok


def sl3_p4_witness(q):
    """Four SL(3, q) matrices inducing a P4; q in {2, 4} is excluded
    because no a with a^3 != 1 exists there."""
    if q in (2, 4):
        raise BadQ(f"no valid diagonal entry exists in GF({q})")
    field = GF(q)
    one = field.one()
    a = None
    for idx in range(1, q):
        cand = field.from_int(idx)
        if cand ** 3 != one:
            a = cand
            break
    if a is None:
        raise BadQ(f"no element with cube != 1 in GF({q})")
    b = a ** (-2)
    zero = field.zero()
    g1 = Matrix3(field, ((one, one, zero), (zero, one, zero), (zero, zero, one)))
    g2 = Matrix3.diagonal(field, a, a, b)
    g3 = Matrix3.diagonal(field, b, a, a)
    g4 = Matrix3(field, ((one, zero, zero), (zero, one, one), (zero, zero, one)))
    mats = (g1, g2, g3, g4)
    commuting, nonscalar_ok = _commutation_report(mats)
    dets_ok = all(m.det() == one for m in mats)
    report = WitnessReport(q=q, a_index=a.to_int(), b_index=b.to_int(),
                           determinants_ok=dets_ok, commuting_pairs=commuting,
                           nonscalar_ok=nonscalar_ok)
    return mats, report


def su3_p4_witness(q):
    """Four SU(3, q) matrices (entries in GF(q^2)) inducing a P4; q = 2 is
    excluded because every norm-1 element of GF(4) is a cube root of 1."""
    if q <= 2:
        raise BadQ("q must exceed 2")
    field = GF(q * q)
    one = field.one()
    a = None
    for idx in range(1, q * q):
        cand = field.from_int(idx)
        if cand ** (q + 1) == one and cand ** 3 != one:
            a = cand
            break
    if a is None:
        raise BadQ(f"no norm-1 element with cube != 1 in GF({q * q})")
    b = a ** (-2)
    zero = field.zero()
    neg_one = -one
    g1 = Matrix3(field, ((zero, one, zero), (one, zero, zero), (zero, zero, neg_one)))
    g2 = Matrix3.diagonal(field, a, a, b)
    g3 = Matrix3.diagonal(field, b, a, a)
    g4 = Matrix3(field, ((neg_one, zero, zero), (zero, zero, one), (zero, one, zero)))
    mats = (g1, g2, g3, g4)
    commuting, nonscalar_ok = _commutation_report(mats)
    dets_ok = all(m.det() == one for m in mats)
    frob_times = field.k // 2  # x -> x^q on GF(q^2) with q = p^(k/2)
    ident = Matrix3.identity(field)
    hermitian_ok = all(m.conj_transpose(frob_times) * m == ident for m in mats)
    report = WitnessReport(q=q, a_index=a.to_int(), b_index=b.to_int(),
                           determinants_ok=dets_ok, commuting_pairs=commuting,
                           nonscalar_ok=nonscalar_ok, hermitian_ok=hermitian_ok)
    return mats, report
