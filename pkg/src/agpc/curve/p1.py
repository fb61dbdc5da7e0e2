"""The projective line over GF(2^w)."""
from __future__ import annotations

import functools
from dataclasses import dataclass

from ..field import GF2m
from . import poly as pl
from . import series as ser
from .base import CurveBackend, UnsupportedPlace
from .divisor import Divisor, Place


@dataclass(frozen=True)
class RationalFunction:
    """num(x) / den(x) with coefficient tuples over the base field."""
    num: tuple
    den: tuple

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("zero denominator")


class ProjectiveLine(CurveBackend):
    genus = 0

    def __init__(self, field: GF2m):
        super().__init__(field)
        self.name = "p1-gf%d" % field.q

    # places

    def _affine_place(self, g) -> Place:
        g = tuple(g)
        return Place(self.name, pl.deg(g), ("poly", g), pl.to_text(self.field, g))

    @functools.cached_property
    def infinity(self) -> Place:
        return Place(self.name, 1, ("inf",), "inf")

    @staticmethod
    def _order_key(p: Place):
        if p.key[0] == "inf":
            return (1,)
        return (0, tuple(reversed(p.key[1])))

    def places_of_degree(self, d: int) -> list[Place]:
        q = self.field.q
        if d == 1:
            return [self._affine_place((a, 1)) for a in range(q)] + [self.infinity]
        if d == 2:
            out = []
            for b in range(q):
                for c in range(q):
                    g = (c, b, 1)
                    if pl.is_irreducible_quadratic(self.field, g):
                        out.append(self._affine_place(g))
            return sorted(out, key=self._order_key)
        raise UnsupportedPlace("places of degree %d are not supported" % d)

    def parse_place(self, label: str) -> Place:
        label = label.strip()
        if label == "inf":
            return self.infinity
        g = pl.from_text(self.field, label)
        if not g or g[-1] != 1 or pl.deg(g) not in (1, 2):
            raise ValueError("%r is not a monic polynomial of degree 1 or 2" % label)
        if pl.deg(g) == 2 and not pl.is_irreducible_quadratic(self.field, g):
            raise ValueError("%r is reducible" % label)
        return self._affine_place(g)

    def place_at(self, a: int) -> Place:
        return self._affine_place((a, 1))

    # Riemann-Roch: L(G) = { h / D : deg h <= deg D + n_inf }

    def rr_space(self, G: Divisor) -> list[RationalFunction]:
        self.check_divisor(G)
        if not G.is_effective():
            raise ValueError("rr_space needs an effective divisor, got %r" % G)
        den = (1,)
        n_inf = 0
        for p, c in G.items():
            if p.key[0] == "inf":
                n_inf = c
            else:
                if p.degree > 2:
                    raise UnsupportedPlace(p.label)
                den = pl.mul(self.field, den, pl.power(self.field, p.key[1], c))
        top = pl.deg(den) + n_inf
        return [RationalFunction(tuple([0] * j + [1]), den) for j in range(top + 1)]

    # series

    def _point(self, p: Place):
        """(K, emb, beta) with beta a root of the place polynomial in K."""
        K, emb = self.residue_field(p)
        g = pl.embed(emb, p.key[1])
        return K, emb, min(pl.roots(K, g))

    def _function_series(self, f: RationalFunction, p: Place, prec: int):
        if p.key[0] == "inf":
            K, emb = self.field, tuple(range(self.field.q))
            xs = (-1, [1] + [0] * (prec - 1))
        else:
            K, emb, beta = self._point(p)
            xs = (0, [beta, 1] + [0] * (prec - 2))
        num = ser.polynomial_in(K, pl.embed(emb, f.num), xs, prec)
        den = ser.polynomial_in(K, pl.embed(emb, f.den), xs, prec)
        if not num[1]:
            return num
        return ser.div(K, num, den)

    def _precision_hint(self, f: RationalFunction) -> int:
        return max(pl.deg(f.num), pl.deg(f.den), 0) + 1

    def _evaluate_direct(self, f: RationalFunction, p: Place):
        if p.key[0] == "inf":
            dn, dd = pl.deg(f.num), pl.deg(f.den)
            if dn < dd:
                return 0
            if dn == dd:
                return self.field.div(f.num[-1], f.den[-1])
            return None
        a = p.key[1][0]
        d = pl.evaluate(self.field, f.den, a)
        if d == 0:
            return None
        return self.field.div(pl.evaluate(self.field, f.num, a), d)

    def describe(self, f: RationalFunction) -> str:
        return "(%s)/(%s)" % (pl.to_text(self.field, f.num), pl.to_text(self.field, f.den))
