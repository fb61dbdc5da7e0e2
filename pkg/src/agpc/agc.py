"""Functional and residual AG codes C_L(P, G) and C_Omega(P, G)."""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, dual_code, format_code
from .curve import CurveBackend, Divisor, Place


class AGCodeError(ValueError):
    pass


@dataclass(frozen=True)
class AGCodeSpec:
    curve: CurveBackend
    P: tuple
    G: Divisor
    code: LinearCode
    eval_matrix: np.ndarray
    basis: tuple

    @property
    def n(self) -> int:
        return len(self.P)

    @property
    def d_bound(self) -> int:
        """Designed distance n - deg G of the functional code."""
        return self.n - self.G.deg()

    @property
    def dual_d_bound(self) -> int:
        """Designed distance deg G - 2g + 2 of the residual code."""
        return self.G.deg() - 2 * self.curve.genus + 2

    def sidecar(self) -> dict:
        return {
            "curve": self.curve.name,
            "P": [p.label for p in self.P],
            "G": self.G.to_json(),
            "n": self.n,
            "k": self.code.k,
            "d_bound": self.d_bound,
            "dual_d_bound": self.dual_d_bound,
        }


def check_spec(curve: CurveBackend, P, G: Divisor, strict: bool = True):
    P = tuple(P)
    for p in P:
        curve.check_place(p)
        if p.degree != 1:
            raise AGCodeError("evaluation place %s is not rational" % p.label)
    if len(set(P)) != len(P):
        raise AGCodeError("evaluation places are not distinct")
    curve.check_divisor(G)
    overlap = G.support() & set(P)
    if overlap:
        raise AGCodeError("supp(G) meets P at %s" % sorted(p.label for p in overlap))
    if strict:
        g = curve.genus
        if not 2 * g - 2 < G.deg() < len(P):
            raise AGCodeError("deg G = %d outside the window (%d, %d)" % (G.deg(), 2 * g - 2, len(P)))
    return P


@functools.lru_cache(maxsize=256)
def _functional(curve: CurveBackend, P: tuple, G: Divisor):
    basis = curve.rr_space(G)
    rows = [[curve.evaluate(f, p) for p in P] for f in basis]
    m = np.array(rows, dtype=np.int64).reshape(len(basis), len(P))
    return tuple(basis), m


def functional_code(curve: CurveBackend, P, G: Divisor, strict: bool = True) -> AGCodeSpec:
    """C_L(P, G): evaluations of a basis of L(G) at the places P.

    ``strict=False`` drops the degree window (the code dimension is then
    whatever the evaluation map gives, still checked for injectivity when
    deg G < n).
    """
    P = check_spec(curve, P, G, strict)
    basis, m = _functional(curve, P, G)
    code = LinearCode(curve.field, m, n=len(P))
    if G.deg() < len(P) and code.k != len(basis):
        raise AGCodeError("evaluation map is not injective (rank %d < %d)" % (code.k, len(basis)))
    code.d_bound = max(len(P) - G.deg(), 0)
    code.dual_d_bound = G.deg() - 2 * curve.genus + 2
    return AGCodeSpec(curve, P, G, code, m, basis)


def residual_code(spec: AGCodeSpec) -> LinearCode:
    """C_Omega(P, G), realised as the dual of the functional code."""
    c = dual_code(spec.code)
    c.d_bound = spec.dual_d_bound
    c.dual_d_bound = spec.d_bound
    return c


def write_agcode(spec: AGCodeSpec, code_path, sidecar_path):
    with open(code_path, "w") as fh:
        fh.write(format_code(spec.code))
    with open(sidecar_path, "w") as fh:
        json.dump(spec.sidecar(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def places_by_label(curve: CurveBackend, labels) -> list[Place]:
    return [curve.parse_place(s) for s in labels]
