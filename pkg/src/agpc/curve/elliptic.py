"""The genus-1 curve y^2 + y = x^3 over GF(2^w).

Over GF(4) this is the maximal curve with 9 rational points (also the q = 2
Hermitian curve).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from ..codes import null_space, rank
from ..field import GF2m
from . import poly as pl
from . import series as ser
from .base import CurveBackend, UnsupportedPlace
from .divisor import Divisor, Place


@dataclass(frozen=True)
class CurveFunction:
    """(a(x) + b(x) y) / c(x), coefficients over the base field."""
    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        if not self.c:
            raise ZeroDivisionError("zero denominator")


ONE = CurveFunction((1,), (), (1,))


class EllipticCurve(CurveBackend):
    genus = 1

    def __init__(self, field: GF2m):
        super().__init__(field)
        self.name = "elliptic-gf%d" % field.q

    # points and places

    def _solve_y(self, K: GF2m, x: int) -> list[int]:
        rhs = K.mul(K.mul(x, x), x)
        return [y for y in K.elements() if K.mul(y, y) ^ y == rhs]

    @functools.cached_property
    def origin(self) -> Place:
        return Place(self.name, 1, ("O",), "O")

    def _place_of_point(self, x: int, y: int) -> Place:
        """Canonical place of a point with coordinates in GF(q^2)."""
        if self.in_base(x) and self.in_base(y):
            x, y = self.from_big(x), self.from_big(y)
            f = self.field
            return Place(self.name, 1, ("pt", x, y), "(%s,%s)" % (f.to_hex(x), f.to_hex(y)))
        K = self.big
        q = self.field.q
        conj = (K.pow(x, q), K.pow(y, q))
        x, y = min((x, y), conj)
        return Place(self.name, 2, ("orbit", x, y), "orbit(%s,%s)" % (K.to_hex(x), K.to_hex(y)))

    @functools.lru_cache(maxsize=None)
    def _big_points(self):
        K = self.big
        return [(x, y) for x in K.elements() for y in self._solve_y(K, x)]

    def count_points(self, extension: int = 1) -> int:
        """Number of points (including O) over GF(q^extension), extension in {1, 2}."""
        if extension == 1:
            return len(self.places_of_degree(1))
        if extension == 2:
            return len(self._big_points()) + 1
        raise UnsupportedPlace("extension degree %d" % extension)

    @functools.lru_cache(maxsize=None)
    def places_of_degree(self, d: int) -> list[Place]:
        if d == 1:
            f = self.field
            pts = [self._place_of_point(self.emb[x], self.emb[y])
                   for x in f.elements() for y in self._solve_y(f, x)]
            return [self.origin] + sorted(pts, key=lambda p: p.key[1:])
        if d == 2:
            seen = {}
            for x, y in self._big_points():
                if not (self.in_base(x) and self.in_base(y)):
                    p = self._place_of_point(x, y)
                    seen[p.key] = p
            return [seen[k] for k in sorted(seen)]
        raise UnsupportedPlace("places of degree %d are not supported" % d)

    def parse_place(self, label: str) -> Place:
        label = label.strip().replace(" ", "")
        if label == "O":
            return self.origin
        orbit = label.startswith("orbit(")
        body = label[len("orbit("):] if orbit else label[1:]
        if not body.endswith(")") or (not orbit and not label.startswith("(")):
            raise ValueError("bad place label %r" % label)
        hx, hy = body[:-1].split(",")
        K = self.big if orbit else self.field
        x, y = K.from_hex(hx), K.from_hex(hy)
        if K.mul(y, y) ^ y != K.mul(K.mul(x, x), x):
            raise ValueError("%r is not on the curve" % label)
        if not orbit:
            x, y = self.emb[x], self.emb[y]
        p = self._place_of_point(x, y)
        if p.label != label:
            raise ValueError("%r is not canonical (expected %s)" % (label, p.label))
        return p

    def point_of(self, p: Place):
        """A representative (x, y) in the residue field of an affine place."""
        if p.key[0] == "O":
            raise ValueError("O has no affine coordinates")
        return p.key[1], p.key[2]

    # Riemann-Roch

    def _x_minpoly(self, p: Place):
        x, _ = self.point_of(p)
        if p.degree == 1:
            return (x, 1)
        K, q = self.big, self.field.q
        if self.in_base(x):
            return (self.from_big(x), 1)
        xq = K.pow(x, q)
        return (self.from_big(K.mul(x, xq)), self.from_big(x ^ xq), 1)

    def _places_over(self, m) -> list[Place]:
        """Places whose x-coordinate is a root of the monic polynomial m."""
        K = self.big
        out = {}
        for r in pl.roots(K, pl.embed(self.emb, m)):
            for y in self._solve_y(K, r):
                p = self._place_of_point(r, y)
                out[p.key] = p
        return [out[k] for k in sorted(out, key=str)]

    def rr_space(self, G: Divisor) -> list[CurveFunction]:
        """Basis of L(G) for effective G supported on places of degree <= 2.

        f in L(G) is written f = F / Z with Z the product of the minimal
        polynomials of the x-coordinates of the affine support, raised to the
        multiplicities; F then has poles only at O and must vanish wherever
        Z vanishes beyond what G allows.
        """
        self.check_divisor(G)
        if not G.is_effective():
            raise ValueError("rr_space needs an effective divisor, got %r" % G)
        f = self.field
        n_o = G[self.origin]
        zexp: dict[tuple, int] = {}
        for p, c in G.items():
            if p == self.origin:
                continue
            if p.degree > 2:
                raise UnsupportedPlace(p.label)
            m = self._x_minpoly(p)
            zexp[m] = zexp.get(m, 0) + c
        Z = (1,)
        for m, e in zexp.items():
            Z = pl.mul(f, Z, pl.power(f, m, e))
        N = n_o + 2 * pl.deg(Z)
        monos = sorted(((i, j) for j in (0, 1) for i in range(N // 2 + 1) if 2 * i + 3 * j <= N),
                       key=lambda ij: 2 * ij[0] + 3 * ij[1])

        rows = []
        for m, e in zexp.items():
            for Q in self._places_over(m):
                excess = e - G[Q]
                if excess <= 0:
                    continue
                rows.extend(self._vanishing_rows(Q, monos, excess))
        if rows:
            sol = null_space(np.array(rows, dtype=np.int64), f, len(monos))
        else:
            sol = np.eye(len(monos), dtype=np.int64)

        zvec = np.zeros(len(monos), dtype=np.int64)
        for idx, (i, j) in enumerate(monos):
            if j == 0 and i < len(Z):
                zvec[idx] = Z[i]
        basis = [zvec]
        for v in sol:
            if rank(np.array(basis + [v]), f) > len(basis):
                basis.append(v)
        out = []
        for v in basis:
            a = [0] * (N // 2 + 1)
            b = [0] * (N // 2 + 1)
            for coef, (i, j) in zip(v, monos):
                (b if j else a)[i] = int(coef)
            out.append(CurveFunction(pl.trim(a), pl.trim(b), Z))
        return out

    def _vanishing_rows(self, Q: Place, monos, order: int):
        K, emb = self.residue_field(Q)
        xs, ys = self._coordinate_series(Q, order)
        cols = []
        for i, j in monos:
            s = ser.power(K, xs, i, order)
            if j:
                s = ser.mul(K, s, ys)
            cols.append([ser.coefficient(s, e) for e in range(order)])
        rows = []
        for e in range(order):
            vals = [c[e] for c in cols]
            if Q.degree == 1:
                rows.append(vals)
            else:
                parts = [self.split_big(z) for z in vals]
                rows.append([p[0] for p in parts])
                rows.append([p[1] for p in parts])
        return rows

    # series

    def _coordinate_series(self, p: Place, prec: int):
        """Series of x and y in the pinned local parameter at p.

        O: t = x/y; affine (a, b): t = x - a (the curve has d/dy = 1, so the
        tangent is never vertical).
        """
        K, _ = self.residue_field(p)
        n = prec + 8
        if p.key[0] == "O":
            # s = 1/y satisfies s = t^3 + s^2
            s = [0] * n
            for k in range(n):
                c = 1 if k == 3 else 0
                if k % 2 == 0 and k:
                    c ^= K.mul(s[k // 2], s[k // 2])
                s[k] = c
            ys = ser.inv(K, ser.normalize((0, s)))
            xs = ser.mul(K, (1, [1] + [0] * (n - 1)), ys)
            return xs, ys
        x0, y0 = self.point_of(p)
        # y = y0 + s with s^2 + s = x0^2 t + x0 t^2 + t^3
        r = [0, K.mul(x0, x0), x0, 1] + [0] * n
        s = [0] * n
        for k in range(1, n):
            c = r[k]
            if k % 2 == 0:
                c ^= K.mul(s[k // 2], s[k // 2])
            s[k] = c
        s[0] = y0
        xs = (0, [x0, 1] + [0] * (n - 2))
        return xs, (0, s)

    def _function_series(self, f: CurveFunction, p: Place, prec: int):
        K, emb = self.residue_field(p)
        xs, ys = self._coordinate_series(p, prec)
        a = ser.polynomial_in(K, pl.embed(emb, f.a), xs, prec)
        b = ser.polynomial_in(K, pl.embed(emb, f.b), xs, prec)
        num = ser.add(K, a, ser.mul(K, b, ys)) if b[1] else a
        den = ser.polynomial_in(K, pl.embed(emb, f.c), xs, prec)
        if not num[1]:
            return num
        return ser.div(K, num, den)

    def _precision_hint(self, f: CurveFunction) -> int:
        return max(2 * pl.deg(f.a), 2 * pl.deg(f.b) + 3, 2 * pl.deg(f.c), 0) + 4

    def _evaluate_direct(self, f: CurveFunction, p: Place):
        if p.key[0] == "O":
            return None
        x, y = self.point_of(p)
        F = self.field
        d = pl.evaluate(F, f.c, x)
        if d == 0:
            return None
        num = pl.evaluate(F, f.a, x) ^ F.mul(pl.evaluate(F, f.b, x), y)
        return F.div(num, d)

    def describe(self, f: CurveFunction) -> str:
        F = self.field
        num = pl.to_text(F, f.a)
        if f.b:
            num = "%s+(%s)*y" % (num, pl.to_text(F, f.b))
        return "(%s)/(%s)" % (num, pl.to_text(F, f.c))
