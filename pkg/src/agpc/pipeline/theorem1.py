"""The AG-code construction of vectorial t-resilient PC(l)-of-order-k functions.

Two curves X, X' carry evaluation sets P, P' and divisor families U_i, U'_i;
phi_i(y) = R_i^T Q_i y + v_i where Q_i, R_i generate the binary images of
C_L(P, U_i) and C_L(P', U'_i), and the v_i come from the image of C_L(P', H).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..agc import functional_code
from ..boolfn import AffineMap, VectorialFunction, mm_build
from ..codes import (DEFAULT_ENUM_BUDGET, BudgetExceeded, LinearCode, coset_min_weight,
                     expand_code, min_distance, rank)
from ..curve import CurveBackend, Divisor, divisor_max
from ..field import field_make, find_self_dual_basis


class ValidationError(ValueError):
    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.name for c in report.failures())
        super().__init__("hypotheses failed: %s" % failed)


class ConstructionError(ValueError):
    pass


@dataclass
class Theorem1Params:
    X: CurveBackend
    Xp: CurveBackend
    P: tuple
    Pp: tuple
    U: tuple
    Up: tuple
    H: Divisor
    basis: tuple | None = None
    basisp: tuple | None = None
    name: str = "theorem1"

    def __post_init__(self):
        self.P, self.Pp = tuple(self.P), tuple(self.Pp)
        self.U, self.Up = tuple(self.U), tuple(self.Up)
        if self.basis is None:
            self.basis = find_self_dual_basis(self.X.field)
        if self.basisp is None:
            self.basisp = find_self_dual_basis(self.Xp.field)

    @property
    def m(self) -> int:
        return len(self.U)

    @property
    def n(self) -> int:
        return len(self.P)

    @property
    def np_(self) -> int:
        return len(self.Pp)

    @property
    def w(self) -> int:
        return self.X.field.w

    @property
    def wp(self) -> int:
        return self.Xp.field.w

    @property
    def variables(self) -> int:
        return self.w * self.n + self.wp * self.np_

    def max_U(self) -> Divisor:
        return divisor_max(self.U)

    def max_Up(self) -> Divisor:
        return divisor_max(self.Up)

    def to_json(self):
        return {
            "name": self.name,
            "curve": self.X.name, "curve_prime": self.Xp.name,
            "P": [p.label for p in self.P], "P_prime": [p.label for p in self.Pp],
            "U": [u.to_json() for u in self.U], "U_prime": [u.to_json() for u in self.Up],
            "H": self.H.to_json(),
            "basis": [self.X.field.to_hex(e) for e in self.basis],
            "basis_prime": [self.Xp.field.to_hex(e) for e in self.basisp],
        }


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    informational: bool = False

    def to_json(self):
        out = {"name": self.name, "ok": self.ok, "detail": self.detail}
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail="", informational=False):
        self.checks.append(Check(name, bool(ok), detail, informational))

    def failures(self):
        return [c for c in self.checks if not c.ok and not c.informational]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def __getitem__(self, name) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self):
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _labels(places) -> str:
    return "[%s]" % ", ".join(sorted(p.label for p in places))


def validate_params(p: Theorem1Params) -> ValidationReport:
    rep = ValidationReport()
    X, Xp = p.X, p.Xp
    g, gp = X.genus, Xp.genus

    if not p.U or len(p.U) != len(p.Up):
        rep.add("family_sizes", False, "m = %d divisors U vs %d divisors U'" % (len(p.U), len(p.Up)))
        return rep
    rep.add("family_sizes", True, "m = %d" % p.m)

    bad = []
    for name, curve, pts in (("P", X, p.P), ("P'", Xp, p.Pp)):
        if any(q.curve != curve.name or q.degree != 1 for q in pts) or len(set(pts)) != len(pts):
            bad.append(name)
    rep.add("rational_points", not bad, "bad sets: %s" % bad if bad else "")

    divs = [("U%d" % (i + 1), X, u) for i, u in enumerate(p.U)]
    divs += [("U'%d" % (i + 1), Xp, u) for i, u in enumerate(p.Up)] + [("H", Xp, p.H)]
    bad = [nm for nm, c, d in divs if not d.is_effective() or any(q.curve != c.name for q in d)]
    rep.add("effective", not bad, "not effective or on the wrong curve: %s" % bad if bad else "")
    if bad:
        return rep

    mU, mUp = p.max_U(), p.max_Up()
    for tag, mx, pts in (("", mU, p.P), ("_prime", mUp, p.Pp)):
        hit = mx.support() & set(pts)
        rep.add("support_off_P" + tag, not hit,
                "supp(max U%s) meets P%s at %s" % ("'" if tag else "", "'" if tag else "", _labels(hit)) if hit else "")
    for tag, mx, gg, nn in (("", mU, g, p.n), ("_prime", mUp, gp, p.np_)):
        ok = 2 * gg - 2 < mx.deg() < nn
        rep.add("degree_window" + tag, ok,
                "need %d < deg max = %d < %d" % (2 * gg - 2, mx.deg(), nn))

    mism = []
    for i, (u, up) in enumerate(zip(p.U, p.Up)):
        a, b = p.w * (u.deg() - g + 1), p.wp * (up.deg() - gp + 1)
        if a != b:
            mism.append("i=%d: %d != %d" % (i + 1, a, b))
    rep.add("dimension_match", not mism, "; ".join(mism))

    low = [nm for nm, c, d in divs[:-1] if d.deg() < 2 * c.genus - 1]
    rep.add("riemann_roch_range", not low,
            "deg < 2g-1 (dimension formula not guaranteed): %s" % low if low else "")

    rep.add("H_degree", p.H.deg() + mUp.deg() < p.np_,
            "deg H + deg max U' = %d + %d, need < %d" % (p.H.deg(), mUp.deg(), p.np_))
    rep.add("H_dimension", p.wp * (p.H.deg() - gp + 1) >= p.m,
            "w'(deg H - g' + 1) = %d, need >= %d" % (p.wp * (p.H.deg() - gp + 1), p.m))

    family = [("U'%d" % (i + 1), u) for i, u in enumerate(p.Up)] + [("H", p.H)]
    clash = []
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not family[i][1].disjoint(family[j][1]):
                clash.append("%s/%s" % (family[i][0], family[j][0]))
    rep.add("pairwise_disjoint", not clash, "overlapping supports: %s" % clash if clash else "")

    hit = p.H.support() & set(p.Pp)
    rep.add("H_support_off_P_prime", not hit, _labels(hit) if hit else "")
    rep.add("H_window_informational", 2 * gp - 2 < p.H.deg(),
            "2g'-2 < deg H: %d < %d" % (2 * gp - 2, p.H.deg()), informational=True)
    return rep


@dataclass(frozen=True)
class Claim:
    l: int
    k: int
    t: int

    def notes(self):
        out = []
        if self.l <= 0:
            out.append("no PC claim (l <= 0)")
        if self.k < 0:
            out.append("no order claim (k < 0, read as k = 0)")
        if self.t < 0:
            out.append("no resiliency claim (t < 0)")
        return out

    @property
    def order(self) -> int:
        return max(self.k, 0)

    def to_json(self):
        return {"l": self.l, "k": self.k, "t": self.t, "notes": self.notes()}


def claimed_parameters(p: Theorem1Params, check: bool = True) -> Claim:
    if check:
        rep = validate_params(p)
        if not rep.ok:
            raise ValidationError(rep)
    g, gp = p.X.genus, p.Xp.genus
    dU, dUp = p.max_U().deg(), p.max_Up().deg()
    l = min(dU - 2 * g + 1, dUp - 2 * gp + 1)
    k = min(p.n - dU - 1, p.np_ - dUp - 1)
    t = p.np_ - divisor_max(list(p.Up) + [p.H]).deg() - 1
    return Claim(l, k, t)


def binary_image(curve, P, G, basis) -> LinearCode:
    spec = functional_code(curve, P, G, strict=False)
    c = expand_code(spec.code, basis)
    c.d_bound = max(len(P) - G.deg(), 0)
    return c


def _code_entry(name: str, c: LinearCode, budget: int) -> dict:
    d = None
    if c.k == 0 or 2 ** c.k <= budget:
        d = min_distance(c, budget)
        d = None if d == float("inf") else int(d)
    return {"name": name, "n": c.n, "k": c.k, "d_bound": c.d_bound, "d_exact": d}


def select_v(Hcode: LinearCode, avoid: LinearCode, m: int):
    """m rows of the rref generator of ``Hcode``, skipping rows that fall in
    span(avoid + rows already kept).  Returns (rows, fell_back)."""
    kept = []
    base = [row for row in avoid.gen]
    F2 = field_make(1)
    cur = rank(np.array(base), F2) if base else 0
    for row in Hcode.gen:
        trial = base + kept + [row]
        r = rank(np.array(trial), F2)
        if r > cur:
            kept.append(row)
            cur = r
            if len(kept) == m:
                return np.array(kept, dtype=np.int64), False
    if Hcode.k < m:
        raise ConstructionError("image of C_L(P', H) has dimension %d < m = %d" % (Hcode.k, m))
    return Hcode.gen[:m].copy(), True


@dataclass
class Theorem1Build:
    params: Theorem1Params
    claim: Claim
    function: VectorialFunction
    Q: list
    R: list
    v: np.ndarray
    v_fallback: bool
    audit: dict
    codes: list
    validation: ValidationReport


def build_theorem1(p: Theorem1Params, budget: int = DEFAULT_ENUM_BUDGET) -> Theorem1Build:
    rep = validate_params(p)
    if not rep.ok:
        raise ValidationError(rep)
    claim = claimed_parameters(p, check=False)
    codes = []
    Qs, Rs = [], []
    for i, (u, up) in enumerate(zip(p.U, p.Up)):
        C1 = binary_image(p.X, p.P, u, p.basis)
        C2 = binary_image(p.Xp, p.Pp, up, p.basisp)
        want1 = p.w * (u.deg() - p.X.genus + 1)
        if C1.k != want1 or C2.k != C1.k:
            raise ConstructionError("rank defect at i=%d: dims %d, %d (expected %d)"
                                    % (i + 1, C1.k, C2.k, want1))
        Qs.append(C1.gen)
        Rs.append(C2.gen)
        codes.append(_code_entry("B(C_L(P,U%d))" % (i + 1), C1, budget))
        codes.append(_code_entry("B'(C_L(P',U'%d))" % (i + 1), C2, budget))

    Hc = binary_image(p.Xp, p.Pp, p.H, p.basisp)
    D = binary_image(p.Xp, p.Pp, p.max_Up(), p.basisp)
    codes.append(_code_entry("B'(C_L(P',H))", Hc, budget))
    codes.append(_code_entry("B'(C_L(P',max U'))", D, budget))
    v, fell_back = select_v(Hc, D, p.m)

    phis = []
    for Q, R, vi in zip(Qs, Rs, v):
        A = (R.T @ Q) & 1
        phis.append(AffineMap(A, vi))
    F = mm_build(phis)

    audit = coset_audit(D, v, claim.t, budget)
    audit["v_selection"] = "fallback_first_rows" if fell_back else "independent_of_max_U_prime"
    return Theorem1Build(p, claim, F, Qs, Rs, v, fell_back, audit, codes, rep)


def coset_audit(D: LinearCode, v: np.ndarray, t: int, budget: int) -> dict:
    """min weight of sum a_i v_i + B'(C_L(P', max U')) for every nonzero a."""
    m = len(v)
    rows = []
    ok = True
    for a in range(1, 1 << m):
        va = np.zeros(D.n, dtype=np.int64)
        for i in range(m):
            if (a >> i) & 1:
                va ^= v[i]
        try:
            wmin = coset_min_weight(D, va, budget)
        except BudgetExceeded:
            rows.append({"a": a, "min_weight": None})
            ok = None if ok else ok
            continue
        rows.append({"a": a, "min_weight": wmin})
        if wmin < t + 1 and ok is not False:
            ok = False
    return {"required_min_weight": t + 1, "passed": ok, "combinations": rows}
