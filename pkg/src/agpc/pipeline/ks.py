"""Bilinear comparator f(x, y) = x . (R^T Q y) and the Carlet sufficient conditions."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..boolfn import AffineMap, VectorialFunction, mm_build
from ..boolfn.truthtable import low_weight_vectors
from ..codes import DEFAULT_ENUM_BUDGET, BudgetExceeded, LinearCode, dual_code, min_distance
from .theorem1 import Claim


@dataclass
class KSBuild:
    C1: LinearCode
    C2: LinearCode
    distances: dict
    claim: Claim
    function: VectorialFunction


def kurosawa_satoh(C1: LinearCode, C2: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> KSBuild:
    """Single-output function from two binary codes of equal dimension.

    Claims PC(min(d1', d2') - 1) of order min(d1, d2) - 1, with d' the dual
    distances.  No resiliency is claimed (phi(0) = 0).
    """
    for c in (C1, C2):
        if c.field.w != 1:
            raise ValueError("codes must be binary")
    if C1.k != C2.k:
        raise ValueError("dimensions differ: %d vs %d" % (C1.k, C2.k))
    if C1.k == 0:
        raise ValueError("zero-dimensional codes")
    d = {}
    for name, c in (("d1", C1), ("d2", C2), ("d1_dual", dual_code(C1)), ("d2_dual", dual_code(C2))):
        try:
            dist = min_distance(c, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded("%s: %s" % (name, exc)) from exc
        d[name] = None if dist == math.inf else int(dist)
    dual = [x for x in (d["d1_dual"], d["d2_dual"]) if x is not None]
    l = min(dual) - 1 if dual else min(C1.n, C2.n)
    k = min(d["d1"], d["d2"]) - 1
    A = (C2.gen.T @ C1.gen) & 1
    F = mm_build([AffineMap.linear(A)])
    return KSBuild(C1, C2, d, Claim(l, k, -1), F)


def _packed_rows(M: np.ndarray) -> list[int]:
    return [sum(int(b) << j for j, b in enumerate(row)) for row in M]


def _min_image_weight(M: np.ndarray, l: int, budget: int):
    """min wt(M z) over z with 1 <= wt(z) <= l (z indexes the columns of M)."""
    cols = _packed_rows(M.T)
    count = sum(math.comb(len(cols), j) for j in range(1, min(l, len(cols)) + 1))
    if count > budget:
        raise BudgetExceeded("%d low-weight vectors exceed the budget %d" % (count, budget))
    best = None
    for z in low_weight_vectors(len(cols), 1, l):
        acc = 0
        j = 0
        while z:
            if z & 1:
                acc ^= cols[j]
            z >>= 1
            j += 1
        w = bin(acc).count("1")
        if best is None or w < best:
            best = w
    return best


def carlet_check(phi: AffineMap, l: int, k: int, budget: int = DEFAULT_ENUM_BUDGET):
    """(cond1, cond2) for phi(y) = A y + v.

    cond1: every sum of 1..l coordinates of phi is k-resilient, i.e.
    wt(A^T g) >= k + 1 for 1 <= wt(g) <= l.
    cond2: phi(y + b) and phi(y) differ in >= k + 1 places, i.e.
    wt(A b) >= k + 1 for 1 <= wt(b) <= l.
    """
    if l <= 0:
        return True, True
    w1 = _min_image_weight(phi.A.T, l, budget)
    w2 = _min_image_weight(phi.A, l, budget)
    c1 = w1 is None or w1 >= k + 1
    c2 = w2 is None or w2 >= k + 1
    return c1, c2
