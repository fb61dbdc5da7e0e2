"""Arithmetic in GF(2^w), traces, Frobenius and self-dual bases.

Elements are plain ints holding the coefficient bit-string in the polynomial
basis (bit i is the coefficient of x^i).  ``GF2m`` carries the modulus and the
log/exp tables; ``FieldElement`` is a thin checked wrapper for callers that
want operator syntax and mixed-field detection.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

MAX_W = 16

# pinned moduli, bit i = coefficient of x^i
PINNED_MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    6: 0b1000011,
    8: 0b100011011,
}


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    return r


def _poly2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """Trial division over GF(2)[x]; fine for degree <= 16."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(2, 1 << (deg // 2 + 1)):
        if _poly2_mod(poly, d) == 0:
            return False
    return True


def smallest_irreducible(w: int) -> int:
    for p in range(1 << w, 1 << (w + 1)):
        if p & 1 and is_irreducible_gf2(p):
            return p
    raise AssertionError("no irreducible polynomial of degree %d" % w)


class GF2m:
    """The field GF(2^w) with a fixed modulus."""

    def __init__(self, w: int, modulus: int | None = None):
        if not 1 <= w <= MAX_W:
            raise ValueError("extension degree must be in 1..%d, got %r" % (MAX_W, w))
        if modulus is None:
            modulus = PINNED_MODULI.get(w) or smallest_irreducible(w)
        if modulus.bit_length() != w + 1:
            raise ValueError("modulus must have degree %d" % w)
        if w > 1 and not is_irreducible_gf2(modulus):
            raise ValueError("modulus %s is reducible" % bin(modulus))
        self.w = w
        self.q = 1 << w
        self.modulus = modulus
        self._build_tables()
        # Tr is GF(2)-linear, so Tr(a) = parity(a & trace_mask)
        self.trace_mask = sum(self._trace_slow(1 << i) << i for i in range(w))

    def _build_tables(self):
        q = self.q
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        g = self._find_generator()
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        exp[q - 1:2 * q - 2] = exp[:q - 1]
        self.generator = g
        self._exp = exp
        self._log = log
        self._exp_l = exp.tolist()
        self._log_l = log.tolist()

    def _mul_slow(self, a: int, b: int) -> int:
        return _poly2_mod(_clmul(a, b), self.modulus)

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        order = q - 1
        primes = [p for p in range(2, order + 1) if order % p == 0
                  and all(p % d for d in range(2, int(p ** 0.5) + 1))]
        for g in range(2, q):
            if all(self._pow_slow(g, order // p) != 1 for p in primes):
                return g
        raise AssertionError("no primitive element")

    def _pow_slow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return r

    def _trace_slow(self, a: int) -> int:
        s, x = 0, a
        for _ in range(self.w):
            s ^= x
            x = self._mul_slow(x, x)
        assert s in (0, 1)
        return s

    def __repr__(self):
        return "GF2m(w=%d, modulus=0x%x)" % (self.w, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF2m) and (self.w, self.modulus) == (other.w, other.modulus)

    def __hash__(self):
        return hash((self.w, self.modulus))

    def __reduce__(self):
        return (GF2m, (self.w, self.modulus))

    # scalar arithmetic on ints

    def elements(self):
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_l[self._log_l[a] + self._log_l[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        return self._exp_l[(self.q - 1 - self._log_l[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp_l[(self._log_l[a] * k) % (self.q - 1)]

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, pow(2, k % self.w, self.q - 1) if self.q > 2 else 1)

    # vectorised helpers used by the matrix code

    def mul_array(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_array(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    # serialisation

    @property
    def hex_width(self) -> int:
        return (self.w + 3) // 4

    def to_hex(self, a: int) -> str:
        return format(a, "0%dx" % self.hex_width)

    def from_hex(self, s: str) -> int:
        a = int(s, 16)
        if a >= self.q:
            raise ValueError("%r is not an element of %r" % (s, self))
        return a


@functools.lru_cache(maxsize=None)
def field_make(w: int) -> GF2m:
    """Field of order 2^w with the pinned modulus."""
    return GF2m(w)


@dataclass(frozen=True)
class FieldElement:
    field: GF2m
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError("%d out of range for %r" % (self.value, self.field))

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed-field operands: %r and %r" % (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self) -> int:
        return self.field.trace(self.value)

    def frobenius(self, k: int = 1) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.value, k))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.field.w))

    def hex(self) -> str:
        return self.field.to_hex(self.value)

    def __bool__(self):
        return self.value != 0


def arith(op: str, a: FieldElement, b) -> FieldElement:
    """Dispatch form of the field operations: add, mul, inv, pow."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError("unknown operation %r" % op)


def trace(field: GF2m, a: int) -> int:
    return field.trace(a)


def frobenius(field: GF2m, a: int, k: int = 1) -> int:
    return field.frobenius(a, k)


@functools.lru_cache(maxsize=None)
def find_self_dual_basis(field: GF2m) -> tuple[int, ...]:
    """Lexicographically first tuple (e_1..e_w) with Tr(e_i e_j) = delta_ij.

    Depth-first search in lexicographic order; since every constraint is
    pairwise, the first complete tuple reached is the lexicographic minimum.
    An orthonormal tuple is automatically linearly independent.
    """
    w = field.w
    # Tr(a*a) = Tr(a), so diagonal condition is Tr(a) = 1
    cands = [a for a in range(1, field.q) if field.trace(a) == 1]
    chosen: list[int] = []

    def dfs(start: int) -> bool:
        if len(chosen) == w:
            return True
        for idx in range(start, len(cands)):
            c = cands[idx]
            if all(field.trace(field.mul(c, e)) == 0 for e in chosen):
                chosen.append(c)
                if dfs(idx + 1):
                    return True
                chosen.pop()
        return False

    if not dfs(0):
        raise AssertionError("self-dual basis search failed for %r" % field)
    return tuple(chosen)


def expand_element(field: GF2m, a: int, basis) -> tuple[int, ...]:
    """Coordinates of ``a`` in a self-dual basis: a_j = Tr(a e_j)."""
    return tuple(field.trace(field.mul(a, e)) for e in basis)


def combine_element(field: GF2m, bits, basis) -> int:
    a = 0
    for b, e in zip(bits, basis):
        if b:
            a ^= e
    return a


@functools.lru_cache(maxsize=None)
def embedding(small: GF2m, big: GF2m) -> tuple[int, ...]:
    """Table of the field embedding small -> big (requires small.w | big.w).

    The image of the class of x is the smallest root in ``big`` of the modulus
    of ``small``.
    """
    if big.w % small.w:
        raise ValueError("%r does not embed in %r" % (small, big))
    mod = small.modulus
    root = None
    for b in big.elements():
        acc, pw = 0, 1
        for i in range(small.w + 1):
            if (mod >> i) & 1:
                acc ^= pw
            pw = big.mul(pw, b)
        if acc == 0:
            root = b
            break
    if root is None:
        raise AssertionError("no root of the modulus found")
    powers = [big.pow(root, i) for i in range(small.w)]
    table = []
    for a in small.elements():
        v = 0
        for i in range(small.w):
            if (a >> i) & 1:
                v ^= powers[i]
        table.append(v)
    return tuple(table)


def double_field(field: GF2m) -> GF2m:
    """GF(2^{2w}) as an independent field of degree 2w."""
    return field_make(2 * field.w)
