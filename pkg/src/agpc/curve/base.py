from __future__ import annotations

from ..field import GF2m, double_field, embedding
from . import series as ser
from .divisor import Divisor, Place


class UnsupportedPlace(ValueError):
    pass


class PoleError(ValueError):
    """A function was evaluated at one of its poles."""


class CurveBackend:
    """Common machinery: residue fields, series-based valuation and evaluation.

    Subclasses supply ``name``, ``genus``, place enumeration, ``rr_space`` and
    ``_coordinate_series`` / ``_function_series``.
    """

    name = "curve"
    genus = 0

    def __init__(self, field: GF2m):
        self.field = field
        self.big = double_field(field)
        self.emb = embedding(field, self.big)
        self._unemb = {v: k for k, v in enumerate(self.emb)}
        self._decomp = None

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self.field)

    def __eq__(self, other):
        return type(self) is type(other) and self.field == other.field

    def __hash__(self):
        return hash((type(self).__name__, self.field))

    # residue fields

    def residue_field(self, p: Place):
        """(K, embedding table GF(q) -> K) for a place of degree <= 2."""
        if p.degree == 1:
            return self.field, tuple(range(self.field.q))
        if p.degree == 2:
            return self.big, self.emb
        raise UnsupportedPlace("places of degree %d are not supported" % p.degree)

    def in_base(self, z: int) -> bool:
        return z in self._unemb

    def from_big(self, z: int) -> int:
        return self._unemb[z]

    def split_big(self, z: int) -> tuple[int, int]:
        """Coordinates (z0, z1) in GF(q) with z = emb(z0) + emb(z1) * theta."""
        if self._decomp is None:
            big = self.big
            theta = next(b for b in big.elements() if b not in self._unemb)
            self.theta = theta
            self._decomp = {}
            for z0 in self.field.elements():
                for z1 in self.field.elements():
                    self._decomp[self.emb[z0] ^ big.mul(self.emb[z1], theta)] = (z0, z1)
        return self._decomp[z]

    def check_place(self, p: Place):
        if p.curve != self.name:
            raise ValueError("place %s does not belong to %s" % (p.label, self.name))

    def check_divisor(self, G: Divisor):
        for p in G:
            self.check_place(p)

    # interface

    def rational_places(self) -> list[Place]:
        return self.places_of_degree(1)

    def places_of_degree(self, d: int) -> list[Place]:
        raise NotImplementedError

    def parse_place(self, label: str) -> Place:
        raise NotImplementedError

    def rr_space(self, G: Divisor) -> list:
        raise NotImplementedError

    def _function_series(self, f, p: Place, prec: int):
        raise NotImplementedError

    def _precision_hint(self, f) -> int:
        raise NotImplementedError

    def local_expansion(self, f, p: Place, order: int):
        """Laurent expansion ``(v, [c_0..c_{order-1}])``: f = t^v (c_0 + c_1 t + ...).

        Coefficients live in the residue field of ``p``.  The zero function
        expands to ``(0, [0]*order)``.
        """
        if order < 1:
            raise ValueError("order must be positive")
        self.check_place(p)
        prec = order + self._precision_hint(f) + 2
        v, c = ser.normalize(self._function_series(f, p, prec))
        if not c:
            return 0, [0] * order
        c = c[:order] + [0] * max(order - len(c), 0)
        return v, c

    def valuation(self, f, p: Place) -> int:
        self.check_place(p)
        prec = self._precision_hint(f) + 3
        s = ser.normalize(self._function_series(f, p, prec))
        if not s[1]:
            raise ValueError("valuation of the zero function")
        return s[0]

    def evaluate(self, f, p: Place) -> int:
        """Value at a degree-1 place; raises PoleError at a pole."""
        self.check_place(p)
        if p.degree != 1:
            raise UnsupportedPlace("evaluation needs a rational place, got %s" % p.label)
        direct = self._evaluate_direct(f, p)
        if direct is not None:
            return direct
        v, c = self.local_expansion(f, p, 1)
        if v < 0:
            raise PoleError("%r has a pole at %s" % (f, p.label))
        return c[0] if v == 0 else 0

    def _evaluate_direct(self, f, p: Place):
        return None

    def place_from_label(self, label: str) -> Place:
        return self.parse_place(label)
