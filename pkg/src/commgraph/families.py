"""Constructors for the named group families and group products.

Families are identified by a FamilySpec (tag plus integer parameters) with
a compact string form used by the CLI, e.g. ``Z12``, ``Z2xZ6``, ``D14``,
``D(Z3xZ9)``, ``Q16``, ``S5``, ``A6``, ``PSL2(7)``, ``Sz(8)``, ``D8oD8``,
``D8oQ8``, ``F20``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import BadParameter, NotCentral, OrderMismatch, SizeCap, UnsupportedParameter
from .gf import GF
from .groups import (
    CAYLEY_THRESHOLD,
    BACKEND_PERMUTATION,
    GeneratorSpec,
    Group,
    group_from_generators,
    parse_cycles,
)

DIRECT_PRODUCT_CAP = 2_000_000


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple

    def __str__(self):
        return family_spec_to_string(self)


_FAMILY_RES = [
    (re.compile(r"^[ZC](\d+)$", re.I), lambda m: FamilySpec("cyclic", (int(m.group(1)),))),
    (re.compile(r"^[ZC]\d+(?:x[ZC]\d+)+$", re.I),
     lambda m: FamilySpec("abelian", tuple(int(p[1:]) for p in m.group(0).split("x")))),
    (re.compile(r"^D(\d+)$", re.I), lambda m: FamilySpec("dihedral", (int(m.group(1)) // 2,))
     if int(m.group(1)) % 2 == 0 else None),
    (re.compile(r"^D\(([ZC0-9x]+)\)$", re.I),
     lambda m: FamilySpec("generalized_dihedral",
                          tuple(int(p[1:]) for p in m.group(1).split("x")))),
    (re.compile(r"^Q(\d+)$", re.I), lambda m: FamilySpec("generalized_quaternion", (int(m.group(1)) // 4,))
     if int(m.group(1)) % 4 == 0 else None),
    (re.compile(r"^S(\d+)$"), lambda m: FamilySpec("symmetric", (int(m.group(1)),))),
    (re.compile(r"^A(\d+)$"), lambda m: FamilySpec("alternating", (int(m.group(1)),))),
    (re.compile(r"^PSL2?\(?2?,?\(?(\d+)\)$", re.I), lambda m: FamilySpec("psl2", (int(m.group(1)),))),
    (re.compile(r"^Sz\((\d+)\)$", re.I), lambda m: FamilySpec("suzuki", (int(m.group(1)),))),
    (re.compile(r"^D8oD8$", re.I), lambda m: FamilySpec("extraspecial_plus", (32,))),
    (re.compile(r"^D8oQ8$", re.I), lambda m: FamilySpec("extraspecial_minus", (32,))),
    (re.compile(r"^F20$", re.I), lambda m: FamilySpec("frobenius20", (20,))),
]


def parse_family(text):
    """Parse the CLI string form of a family spec."""
    s = text.strip().replace(" ", "")
    for rex, mk in _FAMILY_RES:
        m = rex.match(s)
        if m:
            spec = mk(m)
            if spec is not None:
                return spec
    raise BadParameter(f"unrecognized family spec {text!r}")


def family_spec_to_string(spec):
    tag, p = spec.tag, spec.params
    if tag == "cyclic":
        return f"Z{p[0]}"
    if tag == "abelian":
        return "x".join(f"Z{f}" for f in p)
    if tag == "dihedral":
        return f"D{2 * p[0]}"
    if tag == "generalized_dihedral":
        return "D(" + "x".join(f"Z{f}" for f in p) + ")"
    if tag == "generalized_quaternion":
        return f"Q{4 * p[0]}"
    if tag == "symmetric":
        return f"S{p[0]}"
    if tag == "alternating":
        return f"A{p[0]}"
    if tag == "psl2":
        return f"PSL2({p[0]})"
    if tag == "suzuki":
        return f"Sz({p[0]})"
    if tag == "extraspecial_plus":
        return "D8oD8"
    if tag == "extraspecial_minus":
        return "D8oQ8"
    if tag == "frobenius20":
        return "F20"
    raise BadParameter(f"unknown family tag {tag!r}")


def build_family(spec):
    """Build the group named by a FamilySpec (or its string form)."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    tag, p = spec.tag, spec.params
    if tag == "cyclic":
        return cyclic(p[0])
    if tag == "abelian":
        return abelian_product(list(p))
    if tag == "dihedral":
        return dihedral(p[0])
    if tag == "generalized_dihedral":
        return generalized_dihedral(list(p))
    if tag == "generalized_quaternion":
        return generalized_quaternion(p[0])
    if tag == "symmetric":
        return symmetric(p[0])
    if tag == "alternating":
        return alternating(p[0])
    if tag == "psl2":
        return psl2(p[0])
    if tag == "suzuki":
        return suzuki(p[0])
    if tag == "extraspecial_plus":
        return extraspecial_plus_32()
    if tag == "extraspecial_minus":
        return extraspecial_minus_32()
    if tag == "frobenius20":
        return frobenius20()
    raise BadParameter(f"unknown family tag {tag!r}")


# -- abelian-backed tables ----------------------------------------------


def _mixed_radix_table(factors):
    """Cayley table of a direct product of cyclic groups."""
    n = math.prod(factors)
    idx = np.arange(n)
    digits = []
    rest = idx.copy()
    for f in reversed(factors):
        digits.append(rest % f)
        rest //= f
    digits.reverse()  # digits[i] has radix factors[i], most significant first
    table = np.zeros((n, n), dtype=np.int64)
    weight = 1
    weights = []
    for f in reversed(factors):
        weights.append(weight)
        weight *= f
    weights.reverse()
    for d, f, w in zip(digits, factors, weights):
        table += w * ((d[:, None] + d[None, :]) % f)
    return table.astype(np.int32)


def cyclic(n):
    if n < 1:
        raise BadParameter("cyclic order must be positive")
    return abelian_product([n])


def abelian_product(factors):
    """Direct product of cyclic groups Z_{f1} x ... x Z_{fk}."""
    factors = [int(f) for f in factors]
    if not factors or any(f < 1 for f in factors):
        raise BadParameter("abelian factors must be positive integers")
    n = math.prod(factors)
    if n > CAYLEY_THRESHOLD:
        raise SizeCap(f"abelian product of order {n} exceeds the table threshold")
    table = _mixed_radix_table(factors)
    names = None
    if len(factors) == 1:
        names = [f"a^{i}" if i else "e" for i in range(n)]
    label = "x".join(f"Z{f}" for f in factors)
    grp = Group.from_table(table, names=names, label=label)
    grp.abelian_factors = tuple(factors)
    return grp


def generalized_dihedral(factors):
    """D(A) for A the abelian group with the given cyclic factors.

    Elements are pairs (a, eps) indexed 2*a + eps; the eps = 1 coset
    consists of the inverting involutions.
    """
    A = abelian_product(factors)
    m = A.order
    n = 2 * m
    if n > CAYLEY_THRESHOLD:
        raise SizeCap(f"generalized dihedral of order {n} exceeds the table threshold")
    at = A.table
    ainv = A.inv
    table = np.empty((n, n), dtype=np.int32)
    for a in range(m):
        for b in range(m):
            table[2 * a, 2 * b] = 2 * at[a, b]                 # a * b
            table[2 * a, 2 * b + 1] = 2 * at[a, b] + 1         # a * (b x)
            table[2 * a + 1, 2 * b] = 2 * at[a, ainv[b]] + 1   # (a x) * b = a b^-1 x
            table[2 * a + 1, 2 * b + 1] = 2 * at[a, ainv[b]]   # (a x)(b x) = a b^-1
    names = [f"a{a}" if eps == 0 else f"a{a}*x"
             for a in range(m) for eps in (0, 1)]
    names[0] = "e"
    names[1] = "x"
    label = "D(" + "x".join(f"Z{f}" for f in factors) + ")"
    grp = Group.from_table(table, names=names, label=label)
    grp.dihedral_part = tuple(factors)
    return grp


def dihedral(n):
    """The dihedral group of order 2n."""
    if n < 1:
        raise BadParameter("dihedral parameter must be positive")
    grp = generalized_dihedral([n])
    grp.label = f"D{2 * n}"
    return grp


def generalized_quaternion(m):
    """Q_{4m}: x of order 2m, y with y^2 = x^m and y^-1 x y = x^-1.

    Elements are x^i y^eps indexed 2*i + eps for i in 0..2m-1.
    """
    if m < 2:
        raise BadParameter("generalized quaternion parameter must be at least 2")
    n = 4 * m
    if n > CAYLEY_THRESHOLD:
        raise SizeCap(f"Q_{4 * m} exceeds the table threshold")
    two_m = 2 * m
    table = np.empty((n, n), dtype=np.int32)
    for i in range(two_m):
        for j in range(two_m):
            table[2 * i, 2 * j] = 2 * ((i + j) % two_m)
            table[2 * i, 2 * j + 1] = 2 * ((i + j) % two_m) + 1
            # (x^i y)(x^j) = x^(i-j) y
            table[2 * i + 1, 2 * j] = 2 * ((i - j) % two_m) + 1
            # (x^i y)(x^j y) = x^(i-j) y^2 = x^(i-j+m)
            table[2 * i + 1, 2 * j + 1] = 2 * ((i - j + m) % two_m)
    names = [f"x^{i}" if eps == 0 else f"x^{i}*y"
             for i in range(two_m) for eps in (0, 1)]
    names[0] = "e"
    names[1] = "y"
    grp = Group.from_table(table, names=names, label=f"Q{n}")
    return grp


# -- permutation-backed families ------------------------------------------


def symmetric(n):
    if n < 1:
        raise BadParameter("symmetric degree must be positive")
    if n > 6:
        raise UnsupportedParameter("symmetric groups beyond S6 are not supported")
    if n == 1:
        gens = []
    elif n == 2:
        gens = [parse_cycles("(1 2)", 2)]
    else:
        gens = [parse_cycles("(1 2)", n),
                parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n)]
    spec = GeneratorSpec.from_images(max(n, 1), gens)
    return group_from_generators(spec, order_hint=math.factorial(n), label=f"S{n}")


def alternating(n):
    if n < 3:
        raise BadParameter("alternating degree must be at least 3")
    if n > 8:
        raise UnsupportedParameter("alternating groups beyond A8 are not supported")
    if n == 3:
        gens = [parse_cycles("(1 2 3)", 3)]
    elif n % 2 == 1:
        gens = [parse_cycles("(1 2 3)", n),
                parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n)]
    else:
        gens = [parse_cycles("(1 2 3)", n),
                parse_cycles("(" + " ".join(str(i) for i in range(2, n + 1)) + ")", n)]
    spec = GeneratorSpec.from_images(n, gens)
    return group_from_generators(spec, order_hint=math.factorial(n) // 2,
                                 label=f"A{n}")


def _psl2_point_perm(field, a, b, c, d):
    """Image array of [[a,b],[c,d]] acting on GF(q) + infinity (index q)."""
    q = field.q
    img = [0] * (q + 1)
    for x_idx in range(q):
        x = field.from_int(x_idx)
        den = c * x + d
        if den.is_zero():
            img[x_idx] = q
        else:
            img[x_idx] = ((a * x + b) * den.inverse()).to_int()
    img[q] = (a * c.inverse()).to_int() if not c.is_zero() else q
    return tuple(img)


def psl2(q):
    """PSL(2, q) acting on the q+1 points of the projective line."""
    if q < 2:
        raise BadParameter("q must be a prime power at least 2")
    field = GF(q)  # raises for non prime powers
    one, zero = field.one(), field.zero()
    gens = [
        _psl2_point_perm(field, one, one, zero, one),   # x -> x + 1
        _psl2_point_perm(field, one, zero, one, one),   # x -> x / (x + 1)
    ]
    if q > 3:
        g = field.primitive_element()
        gens.append(_psl2_point_perm(field, g, zero, zero, g.inverse()))
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    spec = GeneratorSpec.from_images(q + 1, gens)
    return group_from_generators(spec, order_hint=expected, label=f"PSL2({q})")


def frobenius20():
    """The Frobenius group 5:4 on five points."""
    spec = GeneratorSpec.from_images(5, [parse_cycles("(1 2 3 4 5)", 5),
                                         parse_cycles("(2 3 5 4)", 5)])
    return group_from_generators(spec, order_hint=20, label="F20")


def suzuki(q):
    """Sz(2) as the Frobenius group 5:4; Sz(8) from the shipped data file."""
    if q == 2:
        grp = frobenius20()
        grp.label = "Sz(2)"
        return grp
    if q == 8:
        return _load_sz8()
    raise UnsupportedParameter("only Sz(2) and Sz(8) are supported")


def _load_sz8():
    from .catalog import parse_catalog_text

    text = resources.files("commgraph.data").joinpath("sz8.cat").read_text()
    entries, _cover = parse_catalog_text(text)
    if len(entries) != 1:
        raise OrderMismatch(1, len(entries))
    entry = entries[0]
    spec = GeneratorSpec.from_images(entry.degree, entry.generators)
    return group_from_generators(spec, order_hint=entry.order, label="Sz(8)")


# -- products ---------------------------------------------------------------


def direct_product(h, k, label=None):
    """H x K with element (a, b) indexed a*|K| + b."""
    n = h.order * k.order
    if n > DIRECT_PRODUCT_CAP:
        raise SizeCap(f"direct product of order {n} exceeds the cap")
    if label is None:
        label = f"({h.label or 'H'})x({k.label or 'K'})"
    if n <= CAYLEY_THRESHOLD:
        ht = h.table if h.table is not None else h.to_cayley().table
        kt = k.table if k.table is not None else k.to_cayley().table
        big = (ht.astype(np.int64)[:, None, :, None] * k.order
               + kt.astype(np.int64)[None, :, None, :])
        table = big.reshape(n, n).astype(np.int32)
        names = None
        if h.order <= 64 and k.order <= 64:
            names = [f"({h.element_name(a)},{k.element_name(b)})"
                     for a in range(h.order) for b in range(k.order)]
        grp = Group.from_table(table, names=names, label=label)
        grp.product_factors = (h, k)
        return grp
    himg = h.images if h.images is not None else _regular_images(h)
    kimg = k.images if k.images is not None else _regular_images(k)
    dh, dk = himg.shape[1], kimg.shape[1]
    dtype = np.int16 if dh + dk < 2 ** 15 else np.int32
    images = np.empty((n, dh + dk), dtype=dtype)
    for a in range(h.order):
        base = a * k.order
        images[base:base + k.order, :dh] = himg[a]
        images[base:base + k.order, dh:] = kimg + dh
    index_map = {images[i].tobytes(): i for i in range(n)}
    gens = sorted({a * k.order for a in h.generator_indices()}
                  | {b for b in k.generator_indices()})
    grp = Group(n, BACKEND_PERMUTATION, images=images, degree=dh + dk,
                index_map=index_map, label=label, known_generators=gens)
    grp.product_factors = (h, k)
    return grp


def _regular_images(g):
    if g.table is None:
        raise SizeCap("factor too large for a regular representation")
    return g.table.astype(np.int32)


def central_product(h, k, z_h, z_k, label=None):
    """(H x K) / <(z_h, z_k)> for central z_h, z_k of equal order."""
    if not bool(h.center_mask()[z_h]):
        raise NotCentral(f"element {z_h} is not central in the first factor")
    if not bool(k.center_mask()[z_k]):
        raise NotCentral(f"element {z_k} is not central in the second factor")
    if h.element_order(z_h) != k.element_order(z_k):
        raise OrderMismatch(h.element_order(z_h), k.element_order(z_k))
    prod = direct_product(h, k)
    if prod.table is None:
        raise SizeCap("central product requires a table-backend direct product")
    diag = prod.subgroup_closure([z_h * k.order + z_k])
    q = prod.quotient(diag)
    q.label = label or f"({h.label or 'H'})o({k.label or 'K'})"
    q.central_product_of = (h, k, z_h, z_k)
    return q


def _central_involution(g):
    mask = g.center_mask()
    for i in range(1, g.order):
        if mask[i] and g.element_order(i) == 2:
            return i
    raise NotCentral("no central involution found")


def extraspecial_plus_32():
    """The order-32 central product of two dihedral groups of order 8."""
    d8a, d8b = dihedral(4), dihedral(4)
    grp = central_product(d8a, d8b, _central_involution(d8a),
                          _central_involution(d8b), label="D8oD8")
    return grp


def extraspecial_minus_32():
    """The order-32 central product of D8 and the quaternion group."""
    d8, q8 = dihedral(4), generalized_quaternion(2)
    grp = central_product(d8, q8, _central_involution(d8),
                          _central_involution(q8), label="D8oQ8")
    return grp
