"""Arithmetic in small finite fields GF(p^k) and 3x3 matrices over them.

The modulus polynomial for GF(p^k) is fixed deterministically: the monic
irreducible polynomial of degree k over GF(p) whose non-leading coefficient
vector (c_0, ..., c_{k-1}), read as the integer sum c_i * p^i, is smallest.
This rule yields, for example:

    GF(4):  t^2 + t + 1        GF(8):  t^3 + t + 1
    GF(9):  t^2 + 1            GF(16): t^4 + t + 1
    GF(25): t^2 + 2            GF(27): t^3 + 2t + 1
    GF(49): t^2 + 1            GF(64): t^6 + t + 1

Elements are indexed 0..q-1 by their coefficient vectors (same integer
reading), so element 0 is zero and element 1 is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a = _poly_trim(a)
    return a


def _is_irreducible(f, p):
    """Trial division by all monic polynomials of degree 1..deg(f)//2."""
    k = len(f) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for code in range(p ** d):
            div = [(code // p ** i) % p for i in range(d)] + [1]
            if not _poly_mod(f, div, p):
                return False
    return True


@lru_cache(maxsize=None)
def _find_modulus(p, k):
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        body = [(code // p ** i) % p for i in range(k)]
        f = body + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial found for GF({p}^{k})")


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^k) with a fixed irreducible modulus."""

    p: int
    k: int
    modulus: tuple

    @property
    def q(self):
        return self.p ** self.k

    def element(self, coeffs):
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        c = list(coeffs)[: self.k] + [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(x % self.p for x in c))

    def from_int(self, n):
        if not 0 <= n < self.q:
            raise ValueError(f"element index {n} outside 0..{self.q - 1}")
        c = []
        for _ in range(self.k):
            c.append(n % self.p)
            n //= self.p
        return FieldElement(self, tuple(c))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def elements(self):
        return [self.from_int(n) for n in range(self.q)]

    def primitive_element(self):
        """Smallest-index element of multiplicative order q-1."""
        target = self.q - 1
        for n in range(2, self.q):
            if self.from_int(n).multiplicative_order() == target:
                return self.from_int(n)
        return self.one()  # GF(2)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q):
    """The field with q elements under the fixed deterministic modulus."""
    p, k = _factor_prime_power(q)
    return FieldSpec(p, k, _find_modulus(p, k))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple

    def _join(self, other):
        if not isinstance(other, FieldElement):
            other = self.field.element(other)
        if other.field != self.field:
            raise FieldMismatch(f"mixing {self.field} and {other.field}")
        return other

    def to_int(self):
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        other = self._join(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._join(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._join(other)
        p = self.field.p
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), p)
        red = _poly_mod(prod, list(self.field.modulus), p) if self.field.k > 1 else prod
        red = red + [0] * (self.field.k - len(red))
        return FieldElement(self.field, tuple(red[: self.field.k]))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.field.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def multiplicative_order(self):
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative order")
        k, acc = 1, self
        one = self.field.one()
        while acc != one:
            acc = acc * self
            k += 1
        return k

    def frobenius(self, times=1):
        """Apply x -> x^p repeatedly."""
        return self ** (self.field.p ** times)

    def __repr__(self):
        return f"{self.to_int()}@{self.field!r}"


def field_arith(field, op, *operands):
    """Dispatch basic field arithmetic by name: add, sub, mul, inv, pow, neg."""
    ops = {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "inv": lambda a: a.inverse(),
        "pow": lambda a, e: a ** e,
    }
    if op not in ops:
        raise ValueError(f"unknown field op {op!r}")
    args = [x if isinstance(x, FieldElement) or op == "pow" and i == 1
            else field.element(x)
            for i, x in enumerate(operands)]
    return ops[op](*args)


class Matrix3:
    """A 3x3 matrix over one field, with just enough algebra for witnesses."""

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(
            tuple(field.element(x) if not isinstance(x, FieldElement) else x
                  for x in row)
            for row in rows)
        for row in self.rows:
            for x in row:
                if x.field != field:
                    raise FieldMismatch("matrix entries from different fields")

    @classmethod
    def identity(cls, field):
        one, zero = field.one(), field.zero()
        return cls(field, ((one, zero, zero), (zero, one, zero), (zero, zero, one)))

    @classmethod
    def diagonal(cls, field, a, b, c):
        z = field.zero()
        return cls(field, ((a, z, z), (z, b, z), (z, z, c)))

    def __mul__(self, other):
        if other.field != self.field:
            raise FieldMismatch("matrix product across fields")
        z = self.field.zero()
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = z
                for k in range(3):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return Matrix3(self.field, tuple(out))

    def __eq__(self, other):
        return isinstance(other, Matrix3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def det(self):
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def scalar_multiple_of(self, other):
        """Is self = lambda * other for some non-zero scalar lambda?"""
        lam = None
        for i in range(3):
            for j in range(3):
                a, b = self.rows[i][j], other.rows[i][j]
                if b.is_zero():
                    if not a.is_zero():
                        return False
                    continue
                ratio = a * b.inverse()
                if lam is None:
                    lam = ratio
                elif ratio != lam:
                    return False
        return lam is not None and not lam.is_zero()

    def conj_transpose(self, frob_times):
        """Transpose with entrywise x -> x^(p^frob_times)."""
        return Matrix3(self.field, tuple(
            tuple(self.rows[j][i].frobenius(frob_times) for j in range(3))
            for i in range(3)))

    def __repr__(self):
        return "Matrix3(" + "; ".join(
            " ".join(str(x.to_int()) for x in row) for row in self.rows) + ")"
