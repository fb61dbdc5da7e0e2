"""Univariate polynomials over GF(2^w) as coefficient tuples, lowest degree
first, trailing zeros trimmed (the zero polynomial is ``()``)."""
from __future__ import annotations

from ..field import GF2m


def trim(p) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def deg(p) -> int:
    return len(p) - 1 if p else -1


def add(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) ^ (b[i] if i < len(b) else 0) for i in range(n))


def scale(f: GF2m, c: int, p):
    return trim(f.mul(c, x) for x in p)


def mul(f: GF2m, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= f.mul(x, y)
    return trim(out)


def power(f: GF2m, p, k: int):
    out = (1,)
    for _ in range(k):
        out = mul(f, out, p)
    return out


def divmod_(f: GF2m, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = deg(b)
    inv_lead = f.inv(b[-1])
    qt = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = f.mul(c, inv_lead)
            qt[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] ^= f.mul(c, y)
    return trim(qt), trim(a[:db] if db > 0 else [])


def evaluate(f: GF2m, p, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = f.mul(acc, x) ^ c
    return acc


def monic(f: GF2m, p):
    return scale(f, f.inv(p[-1]), p)


def roots(f: GF2m, p) -> list[int]:
    return [x for x in f.elements() if evaluate(f, p, x) == 0]


def multiplicity(f: GF2m, p, g) -> int:
    """Largest e with g^e | p (p nonzero)."""
    e = 0
    while True:
        qt, r = divmod_(f, p, g)
        if r:
            return e
        p, e = qt, e + 1


def is_irreducible_quadratic(f: GF2m, p) -> bool:
    return deg(p) == 2 and not roots(f, p)


def embed(table, p):
    return tuple(table[c] for c in p)


def to_text(f: GF2m, p, var: str = "x") -> str:
    """Human form such as ``x^2+x+2`` (coefficients in hex, 1 suppressed)."""
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        cs = f.to_hex(c).lstrip("0") or "0"
        if i == 0:
            terms.append(cs)
        else:
            mono = var if i == 1 else "%s^%d" % (var, i)
            terms.append(mono if c == 1 else "%s*%s" % (cs, mono))
    return "+".join(terms)


def from_text(f: GF2m, s: str, var: str = "x"):
    coeffs: dict[int, int] = {}
    for term in s.replace(" ", "").split("+"):
        if not term:
            raise ValueError("bad polynomial %r" % s)
        if "*" in term:
            cs, mono = term.split("*", 1)
            c = int(cs, 16)
        elif var in term:
            c, mono = 1, term
        else:
            c, mono = int(term, 16), ""
        if mono == "":
            e = 0
        elif mono == var:
            e = 1
        elif mono.startswith(var + "^"):
            e = int(mono[len(var) + 1:])
        else:
            raise ValueError("bad monomial %r in %r" % (mono, s))
        if c >= f.q:
            raise ValueError("coefficient %x outside %r" % (c, f))
        coeffs[e] = coeffs.get(e, 0) ^ c
    top = max(coeffs) if coeffs else -1
    return trim(coeffs.get(i, 0) for i in range(top + 1))
