"""Truncated Laurent series over a finite field of characteristic 2.

A series is ``(v, coeffs)`` meaning t^v * (c_0 + c_1 t + ...) known up to
``len(coeffs)`` terms.  Valuations are normalised so that c_0 != 0 unless the
series is zero to the known precision.
"""
from __future__ import annotations

from ..field import GF2m


def normalize(s):
    v, c = s
    i = 0
    while i < len(c) and c[i] == 0:
        i += 1
    return v + i, list(c[i:])


def const(a: int, prec: int):
    return 0, [a] + [0] * (prec - 1)


def add(f: GF2m, a, b):
    va, ca = a
    vb, cb = b
    v = min(va, vb)
    end = min(va + len(ca), vb + len(cb))
    out = [0] * max(end - v, 0)
    for i, x in enumerate(ca):
        if va + i < end:
            out[va + i - v] ^= x
    for i, x in enumerate(cb):
        if vb + i < end:
            out[vb + i - v] ^= x
    return normalize((v, out))


def mul(f: GF2m, a, b):
    va, ca = a
    vb, cb = b
    n = min(len(ca), len(cb))
    out = [0] * n
    for i in range(n):
        x = ca[i]
        if x:
            for j in range(n - i):
                if cb[j]:
                    out[i + j] ^= f.mul(x, cb[j])
    return va + vb, out


def inv(f: GF2m, a):
    a = normalize(a)
    v, c = a
    if not c or c[0] == 0:
        raise ZeroDivisionError("series not invertible at this precision")
    n = len(c)
    i0 = f.inv(c[0])
    out = [0] * n
    out[0] = i0
    for k in range(1, n):
        s = 0
        for j in range(1, k + 1):
            if c[j] and out[k - j]:
                s ^= f.mul(c[j], out[k - j])
        out[k] = f.mul(s, i0)
    return -v, out


def div(f: GF2m, a, b):
    return mul(f, a, inv(f, b))


def power(f: GF2m, a, k: int, prec: int):
    out = const(1, prec)
    for _ in range(k):
        out = mul(f, out, a)
    return out


def scale(f: GF2m, c: int, s):
    v, cs = s
    return normalize((v, [f.mul(c, x) for x in cs]))


def polynomial_in(f: GF2m, p, s, prec: int):
    """p(s) for a polynomial p (coefficient tuple) and a series s."""
    out = (0, [0] * prec)
    pw = const(1, prec)
    for i, c in enumerate(p):
        if i:
            pw = mul(f, pw, s)
        if c:
            out = add(f, out, scale(f, c, pw))
    return normalize(out)


def coefficient(s, e: int) -> int:
    v, c = s
    i = e - v
    if i < 0:
        return 0
    if i >= len(c):
        raise ValueError("coefficient t^%d beyond known precision" % e)
    return c[i]


def valuation(s) -> int:
    v, c = normalize(s)
    if not c:
        raise ValueError("series is zero to known precision")
    return v
