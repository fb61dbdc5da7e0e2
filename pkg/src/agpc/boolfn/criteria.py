"""Criteria over all nonzero output combinations of a vectorial function."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .mm import VectorialFunction
from .truthtable import (DEFAULT_MAT_BUDGET, DEFAULT_SUBFUNCTION_BUDGET, pc_degree_at_order,
                         resiliency_order)


@dataclass
class CombinationReport:
    a: int
    resiliency: int
    # order k' -> largest l with PC(l) of order k' (None: over budget)
    pc_degree: dict = field(default_factory=dict)

    def to_json(self):
        return {"a": self.a, "resiliency": self.resiliency,
                "pc_degree": {str(k): v for k, v in sorted(self.pc_degree.items())}}


@dataclass
class CriteriaReport:
    n: int
    m: int
    l: int
    k: int
    t: int
    combos: list

    def _min(self, values):
        values = list(values)
        return None if any(v is None for v in values) else min(values)

    @property
    def achieved_t(self) -> int:
        return min(c.resiliency for c in self.combos)

    def achieved_l(self, order: int):
        """Exact PC degree at ``order``, minimised over combinations."""
        return self._min(c.pc_degree.get(order) for c in self.combos)

    def pc_pass(self, order: int):
        if self.l <= 0:
            return True
        got = self.achieved_l(order)
        if got is None:
            return None
        return got >= min(self.l, self.n - order)

    def achieved_k(self):
        """Largest k' among the checked orders with PC(l) at every order 0..k'.

        -1 when PC(l) already fails at order 0; None when order 0 is unknown.
        """
        best = -1
        for order in sorted(self.combos[0].pc_degree):
            ok = self.pc_pass(order)
            if ok is None:
                return None if best < 0 else best
            if not ok:
                break
            best = order
        return best

    @property
    def passed(self):
        pc = self.pc_pass(self.k) if self.k >= 0 else True
        res = self.achieved_t >= self.t
        if pc is None:
            return None if res else False
        return pc and res

    def to_json(self):
        return {
            "n": self.n, "m": self.m,
            "requested": {"l": self.l, "k": self.k, "t": self.t},
            "achieved": {
                "t": self.achieved_t,
                "l_by_order": {str(k): self.achieved_l(k) for k in sorted(self.combos[0].pc_degree)},
                "k": self.achieved_k(),
            },
            "passed": self.passed,
            "combinations": [c.to_json() for c in self.combos],
        }


def vectorial_criteria(F: VectorialFunction, l: int, k: int, t: int,
                       budget: int = DEFAULT_SUBFUNCTION_BUDGET,
                       mat_budget: int = DEFAULT_MAT_BUDGET,
                       max_order: int | None = None, threads: int = 1) -> CriteriaReport:
    """Resiliency and PC degrees at orders 0..max(k, max_order) for every nonzero a."""
    if F.m > 20:
        raise ValueError("too many outputs (%d) for exhaustive combination checks" % F.m)
    top = max(k, 0) if max_order is None else max(max_order, k, 0)
    top = min(top, F.n)

    def one(a):
        tab = F.combination(a, mat_budget)
        rep = CombinationReport(a, resiliency_order(tab))
        for order in range(top + 1):
            rep.pc_degree[order] = pc_degree_at_order(tab, order, budget)
        return rep

    combos = range(1, 1 << F.m)
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            reports = list(ex.map(one, combos))
    else:
        reports = [one(a) for a in combos]
    return CriteriaReport(F.n, F.m, l, k, t, reports)
