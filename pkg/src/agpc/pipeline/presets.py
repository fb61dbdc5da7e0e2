"""Named parameter sets.  Every choice of place follows canonical enumeration order."""
from __future__ import annotations

import re

import numpy as np

from ..codes import code_from_rows
from ..curve import Divisor, make_curve
from .theorem1 import Theorem1Params

HAMMING_7_4 = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 1, 0, 1],
]


def example1() -> Theorem1Params:
    """P^1 over GF(4): all 5 rational places, U_1, U_2 the first two degree-2 places, H = 0."""
    X = make_curve("p1-gf4")
    P = X.places_of_degree(1)
    quad = X.places_of_degree(2)
    U = [Divisor.of((quad[0], 1)), Divisor.of((quad[1], 1))]
    return Theorem1Params(X, X, P, P, U, U, Divisor(), name="example1")


def example1_tiny() -> Theorem1Params:
    """12 variables: P^1 over GF(4), P = x, x+1, x+2, U = (x+3), H = inf."""
    X = make_curve("p1-gf4")
    rat = X.places_of_degree(1)
    U = [Divisor.of((rat[3], 1))]
    H = Divisor.of((X.infinity, 1))
    return Theorem1Params(X, X, rat[:3], rat[:3], U, U, H, name="example1-tiny")


def example2(n: int, m: int, t: int, tp: int) -> Theorem1Params:
    """Genus-1 curve y^2 + y = x^3 over GF(4), deg U_i = t, deg H = t'.

    Supports go on degree-2 places when the curve has enough of them (then
    t, t' must be even); otherwise on rational places taken in canonical
    order, each carrying its divisor with full multiplicity.  P is the first
    n rational places left over.
    """
    X = make_curve("elliptic-gf4")
    rat = X.places_of_degree(1)
    quad = X.places_of_degree(2)
    if n < 1 or m < 1 or t < 1 or tp < 0:
        raise ValueError("example2 needs n, m, t >= 1 and t' >= 0")
    need = m + (1 if tp else 0)
    if len(quad) >= need and t % 2 == 0 and tp % 2 == 0:
        pool = [(q, 2) for q in quad]
    else:
        pool = [(q, 1) for q in rat]
    if len(pool) < need:
        raise ValueError("not enough places for %d disjoint supports" % need)
    U = [Divisor.of((pool[i][0], t // pool[i][1])) for i in range(m)]
    H = Divisor.of((pool[m][0], tp // pool[m][1])) if tp else Divisor()
    used = set().union(*(u.support() for u in U), H.support())
    free = [q for q in rat if q not in used]
    P = free[:n]
    if len(P) < n:
        # not enough rational places off the supports: keep the full set and
        # let validation report the overlap
        P = rat[:n]
    return Theorem1Params(X, X, P, P, U, U, H, name="example2(%d,%d,%d,%d)" % (n, m, t, tp))


def corollary2_g1() -> Theorem1Params:
    """m = g = 1 case: (28, 1) vectorial 2-resilient SAC(4)."""
    p = example2(7, 1, 2, 2)
    p.name = "corollary2-g1"
    return p


def ks_hamming():
    c = code_from_rows(HAMMING_7_4)
    return c, c


def ks_repetition():
    c = code_from_rows([[1, 1, 1]])
    return c, c


_FIXED = {
    "example1": example1,
    "example1-tiny": example1_tiny,
    "corollary2-g1": corollary2_g1,
    "ks-hamming": ks_hamming,
    "ks-repetition": ks_repetition,
}

PRESET_NAMES = sorted(_FIXED) + ["example2(n,m,t,t')"]


def presets(name: str):
    """Theorem1Params, or a (C1, C2) pair for the ks-* comparators."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    mt = re.fullmatch(r"example2\((\d+),(\d+),(\d+),(\d+)\)", name.replace(" ", ""))
    if mt:
        return example2(*(int(g) for g in mt.groups()))
    raise KeyError("unknown preset %r (known: %s)" % (name, ", ".join(PRESET_NAMES)))


def is_ks(obj) -> bool:
    return isinstance(obj, tuple) and len(obj) == 2 and not isinstance(obj, np.ndarray)


def params_from_json(data: dict):
    """Parameter file: ``{"preset": name}``, a theorem1 description (the
    layout written into certificates under "params"), or
    ``{"kind": "kurosawa-satoh", "C1": rows, "C2": rows}``."""
    from ..curve import divisor_from_json

    if "preset" in data:
        return presets(data["preset"])
    kind = data.get("kind", "theorem1")
    if kind == "kurosawa-satoh":
        return code_from_rows(data["C1"]), code_from_rows(data["C2"])
    if kind != "theorem1":
        raise ValueError("unknown parameter kind %r" % kind)
    X = make_curve(data["curve"])
    Xp = make_curve(data.get("curve_prime", data["curve"]))
    P = [X.parse_place(s) for s in data["P"]]
    Pp = [Xp.parse_place(s) for s in data["P_prime"]] if "P_prime" in data else list(P)
    U = [divisor_from_json(X, u) for u in data["U"]]
    Up = [divisor_from_json(Xp, u) for u in data["U_prime"]] if "U_prime" in data else list(U)
    H = divisor_from_json(Xp, data.get("H", []))
    basis = [X.field.from_hex(e) for e in data["basis"]] if "basis" in data else None
    basisp = [Xp.field.from_hex(e) for e in data["basis_prime"]] if "basis_prime" in data else None
    return Theorem1Params(X, Xp, P, Pp, U, Up, H, basis, basisp, name=data.get("name", "theorem1"))
