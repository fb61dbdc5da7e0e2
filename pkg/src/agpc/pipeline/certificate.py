"""Certificates: theorem-side claims next to independently verified values."""
from __future__ import annotations

import hashlib
import json

from ..boolfn import DEFAULT_MAT_BUDGET, DEFAULT_SUBFUNCTION_BUDGET, mm_exact_resiliency, vectorial_criteria
from ..codes import DEFAULT_ENUM_BUDGET, BudgetExceeded
from ..field import field_make, find_self_dual_basis
from .ks import KSBuild
from .theorem1 import Claim, Theorem1Build


def conventions() -> dict:
    return {
        "index_bits": "variable x_j is bit j-1 of the table index",
        "mm_layout": "x block in the low bits, y block above it",
        "combination": "bit j-1 of a selects output f_j",
        "moduli": {str(w): field_make(w).modulus for w in range(1, 9)},
        "self_dual_basis": {str(w): list(find_self_dual_basis(field_make(w))) for w in range(1, 9)},
        "expansion": "symbol s -> (Tr(s e_1), ..., Tr(s e_w))",
        "place_order": "p1: monic irreducibles by descending coefficient tuple, inf last; "
                       "elliptic: O, then (x, y) ascending; degree-2 orbits by smallest member",
        "rr_basis": "p1: x^j / D; elliptic: Z first, then null-space vectors",
        "v_selection": "rref rows of B'(C_L(P',H)) independent of B'(C_L(P',max U'))",
        "bftt": "BFTT0001, u32 n, u32 m little endian, LSB-first tables",
    }


def conventions_hash() -> str:
    blob = json.dumps(conventions(), sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def verify(F, claim: Claim, mat_budget: int = DEFAULT_MAT_BUDGET,
           sub_budget: int = DEFAULT_SUBFUNCTION_BUDGET, enum_budget: int = DEFAULT_ENUM_BUDGET,
           threads: int = 1, max_order: int | None = None) -> dict:
    """Exact criteria values for F.

    Within the materialization budget everything is computed from truth
    tables.  Beyond it, only the resiliency order is obtained, from the affine
    structure; PC values are left unknown.
    """
    order = claim.order
    if F.n <= mat_budget:
        rep = vectorial_criteria(F, claim.l, order, claim.t, budget=sub_budget,
                                 mat_budget=mat_budget, max_order=max_order, threads=threads)
        l_ver = rep.achieved_l(order)
        if claim.l <= 0:
            k_ver = order if l_ver is not None else None
        else:
            k_ver = rep.achieved_k()
        return {
            "method": "exhaustive",
            "l": l_ver, "k": k_ver, "t": rep.achieved_t,
            "l_by_order": {str(k): rep.achieved_l(k) for k in sorted(rep.combos[0].pc_degree)},
            "combinations": [c.to_json() for c in rep.combos],
        }
    if F.structure is not None:
        try:
            res = [mm_exact_resiliency(F.structure, a, enum_budget) for a in range(1, 1 << F.m)]
        except BudgetExceeded:
            res = None
        if res is not None:
            return {
                "method": "structured", "l": None, "k": None, "t": min(res),
                "combinations": [{"a": a, "resiliency": r} for a, r in zip(range(1, 1 << F.m), res)],
            }
    return {"method": "budget-exceeded", "l": None, "k": None, "t": None}


def meets_claim(claim: Claim, verified: dict) -> dict:
    """Per criterion: True / False, or None when the verified value is unknown.

    Absent claims (l <= 0, t < 0) are vacuous.
    """
    out = {}
    for key, want, vacuous in (("l", claim.l, claim.l <= 0), ("k", claim.order, claim.l <= 0),
                               ("t", claim.t, claim.t < 0)):
        got = verified.get(key)
        if vacuous:
            out[key] = True
        elif got is None:
            out[key] = None
        else:
            out[key] = got >= want
    return out


def theorem1_certificate(b: Theorem1Build, verified: dict | None = None) -> dict:
    p = b.params
    cert = {
        "construction": p.name,
        "kind": "theorem1",
        "dimensions": {"w": p.w, "w_prime": p.wp, "n": p.n, "n_prime": p.np_, "m": p.m,
                       "variables": p.variables, "x_block": b.function.structure.r,
                       "y_block": b.function.structure.s},
        "params": p.to_json(),
        "validation": b.validation.to_json(),
        "claimed": b.claim.to_json(),
        "audit": b.audit,
        "codes": b.codes,
        "conventions_hash": conventions_hash(),
    }
    _attach(cert, b.claim, verified)
    return cert


def ks_certificate(b: KSBuild, name: str = "kurosawa-satoh", verified: dict | None = None) -> dict:
    cert = {
        "construction": name,
        "kind": "kurosawa-satoh",
        "dimensions": {"n1": b.C1.n, "n2": b.C2.n, "k": b.C1.k, "m": 1,
                       "variables": b.C1.n + b.C2.n, "x_block": b.C2.n, "y_block": b.C1.n},
        "params": {"C1": b.C1.gen.tolist(), "C2": b.C2.gen.tolist()},
        "claimed": {"l": b.claim.l, "k": b.claim.k, "t": None, "notes": ["no resiliency claim"]},
        "codes": [{"name": nm, "n": c.n, "k": c.k, "d_bound": None, "d_exact": b.distances[key]}
                  for nm, c, key in (("C1", b.C1, "d1"), ("C2", b.C2, "d2"))],
        "distances": b.distances,
        "conventions_hash": conventions_hash(),
    }
    _attach(cert, b.claim, verified)
    return cert


def _attach(cert, claim, verified):
    if verified is None:
        cert["verified"] = {"method": None, "l": None, "k": None, "t": None}
        cert["meets_claim"] = None
    else:
        cert["verified"] = verified
        cert["meets_claim"] = meets_claim(claim, verified)


def claim_from_certificate(cert: dict) -> Claim:
    c = cert["claimed"]
    t = c.get("t")
    return Claim(int(c["l"]), int(c["k"]), -1 if t is None else int(t))


def dump_certificate(cert: dict) -> str:
    return json.dumps(cert, indent=2, sort_keys=True) + "\n"
