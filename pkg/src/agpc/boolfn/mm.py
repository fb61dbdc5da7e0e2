"""Maiorana-McFarland vectorial functions F_j(x, y) = x . phi_j(y) + h_j(y).

Input index layout: x takes bits 0..r-1, y takes bits r..r+s-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..codes import LinearCode, coset_min_weight, DEFAULT_ENUM_BUDGET
from ..field import field_make
from .truthtable import (DEFAULT_MAT_BUDGET, MaterializationBudgetExceeded, TruthTable,
                         resiliency_order)


def _bits_to_int(bits) -> int:
    return sum(int(b) << i for i, b in enumerate(bits))


def _int_to_bits(x: int, n: int) -> np.ndarray:
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class AffineMap:
    """y -> A y + v over GF(2), A of shape (r, s)."""
    A: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=np.uint8) & 1
        if A.ndim != 2:
            raise ValueError("A must be a matrix")
        v = np.zeros(A.shape[0], dtype=np.uint8) if self.v is None else np.asarray(self.v, dtype=np.uint8) & 1
        if v.shape != (A.shape[0],):
            raise ValueError("v has length %d, A has %d rows" % (v.size, A.shape[0]))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "v", v)

    @classmethod
    def linear(cls, A) -> AffineMap:
        return cls(A, None)

    @property
    def r(self) -> int:
        return self.A.shape[0]

    @property
    def s(self) -> int:
        return self.A.shape[1]

    def __eq__(self, other):
        return (isinstance(other, AffineMap) and np.array_equal(self.A, other.A)
                and np.array_equal(self.v, other.v))

    def __add__(self, other: AffineMap) -> AffineMap:
        return AffineMap(self.A ^ other.A, self.v ^ other.v)

    def __call__(self, y: int) -> int:
        ybits = _int_to_bits(y, self.s)
        return _bits_to_int((self.A.astype(np.int64) @ ybits + self.v) & 1)

    def column_ints(self) -> list[int]:
        return [_bits_to_int(self.A[:, j]) for j in range(self.s)]

    def image_table(self) -> np.ndarray:
        """phi(y) packed as integers, indexed by y; built by XOR doubling."""
        vals = np.array([_bits_to_int(self.v)], dtype=np.uint64)
        for c in self.column_ints():
            vals = np.concatenate([vals, vals ^ np.uint64(c)])
        return vals


def _affine_sum(maps, a: int) -> AffineMap:
    r, s = maps[0].r, maps[0].s
    out = AffineMap(np.zeros((r, s), dtype=np.uint8), np.zeros(r, dtype=np.uint8))
    for j, phi in enumerate(maps):
        if (a >> j) & 1:
            out = out + phi
    return out


@dataclass(frozen=True)
class MMStructure:
    r: int
    s: int
    phis: tuple
    hs: tuple

    @property
    def m(self) -> int:
        return len(self.phis)

    def combination(self, a: int):
        """(phi_a, h_a) for the output combination sum_j a_j F_j (bit j-1 of a picks F_j)."""
        phi = _affine_sum(self.phis, a)
        h = np.zeros(1 << self.s, dtype=np.uint8)
        for j, hj in enumerate(self.hs):
            if (a >> j) & 1 and hj is not None:
                h ^= hj.bits
        return phi, h


def mm_build(phis, hs=None) -> VectorialFunction:
    phis = tuple(phis)
    if not phis:
        raise ValueError("need at least one output")
    r, s = phis[0].r, phis[0].s
    for phi in phis:
        if (phi.r, phi.s) != (r, s):
            raise ValueError("maps disagree on dimensions: (%d, %d) vs (%d, %d)" % (phi.r, phi.s, r, s))
    if hs is None:
        hs = (None,) * len(phis)
    hs = tuple(hs)
    if len(hs) != len(phis):
        raise ValueError("%d h-functions for %d maps" % (len(hs), len(phis)))
    for h in hs:
        if h is not None and h.n != s:
            raise ValueError("h has %d variables, expected %d" % (h.n, s))
    return VectorialFunction(r + s, len(phis), structure=MMStructure(r, s, phis, hs))


def _mm_table(r: int, s: int, phi: AffineMap, h: np.ndarray) -> np.ndarray:
    vals = phi.image_table()
    xs = np.arange(1 << r, dtype=np.uint64)
    out = np.empty((1 << s, 1 << r), dtype=np.uint8)
    step = max(1, (1 << 22) >> r)
    for lo in range(0, 1 << s, step):
        hi = min(lo + step, 1 << s)
        dots = np.bitwise_count(vals[lo:hi, None] & xs[None, :]) & 1
        out[lo:hi] = dots.astype(np.uint8) ^ h[lo:hi, None]
    return out.ravel()


@dataclass
class VectorialFunction:
    n: int
    m: int
    structure: MMStructure | None = None
    tables: list | None = None
    _combos: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.structure is None and self.tables is None:
            raise ValueError("a vectorial function needs a structure or tables")
        if self.tables is not None:
            self.tables = list(self.tables)
            if len(self.tables) != self.m or any(t.n != self.n for t in self.tables):
                raise ValueError("tables do not match (n, m) = (%d, %d)" % (self.n, self.m))

    @classmethod
    def from_tables(cls, tables) -> VectorialFunction:
        tables = list(tables)
        if not tables:
            raise ValueError("need at least one table")
        return cls(tables[0].n, len(tables), tables=tables)

    def evaluate(self, x: int) -> tuple[int, ...]:
        if self.tables is not None:
            return tuple(t(x) for t in self.tables)
        st = self.structure
        xb, y = x & ((1 << st.r) - 1), x >> st.r
        out = []
        for phi, h in zip(st.phis, st.hs):
            bit = bin(xb & phi(y)).count("1") & 1
            out.append(bit ^ (h(y) if h is not None else 0))
        return tuple(out)

    def _check_budget(self, budget: int):
        if self.n > budget:
            raise MaterializationBudgetExceeded(
                "%d variables exceed the materialization budget of %d" % (self.n, budget))

    def materialize(self, budget: int = DEFAULT_MAT_BUDGET) -> list[TruthTable]:
        if self.tables is None:
            self._check_budget(budget)
            self.tables = [self.combination(1 << j, budget) for j in range(self.m)]
        return self.tables

    def combination(self, a: int, budget: int = DEFAULT_MAT_BUDGET) -> TruthTable:
        """Truth table of sum_j a_j f_j."""
        if not 0 < a < 1 << self.m:
            raise ValueError("combination %d outside 1..%d" % (a, (1 << self.m) - 1))
        if a in self._combos:
            return self._combos[a]
        self._check_budget(budget)
        if self.tables is not None:
            bits = np.zeros(1 << self.n, dtype=np.uint8)
            for j, t in enumerate(self.tables):
                if (a >> j) & 1:
                    bits ^= t.bits
            t = TruthTable(bits, self.n)
        else:
            st = self.structure
            phi, h = st.combination(a)
            t = TruthTable(_mm_table(st.r, st.s, phi, h), self.n)
        self._combos[a] = t
        return t


def materialize(F: VectorialFunction, budget: int = DEFAULT_MAT_BUDGET) -> list[TruthTable]:
    return F.materialize(budget)


def evaluate(F: VectorialFunction, x: int) -> tuple[int, ...]:
    return F.evaluate(x)


def mm_exact_resiliency(st: MMStructure, a: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Exact resiliency of sum_j a_j F_j from the affine structure.

    With h_a constant, the Walsh support is {(u, w): u in image(phi_a), w
    orthogonal to ker A_a}; the smallest-weight point is (u, 0) for the
    lightest u in the coset v_a + colspace(A_a).  A nonconstant h_a falls back
    to the truth table.
    """
    phi, h = st.combination(a)
    if np.any(h != h[0]):
        F = VectorialFunction(st.r + st.s, st.m, structure=st)
        return resiliency_order(F.combination(a))
    colspace = LinearCode(field_make(1), phi.A.T.astype(np.int64), n=st.r)
    return coset_min_weight(colspace, phi.v.astype(np.int64), budget) - 1
