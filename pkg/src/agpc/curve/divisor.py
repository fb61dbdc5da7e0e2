"""Places and divisors (finite integer-weighted sums of places)."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Place:
    """A closed point of a curve.

    ``curve`` names the backend the place belongs to; ``key`` is the canonical
    backend representation and ``label`` its canonical string form.
    """
    curve: str
    degree: int
    key: tuple
    label: str

    def __repr__(self):
        return "Place(%s)" % self.label

    def __str__(self):
        return self.label


class Divisor:
    __slots__ = ("_coeffs", "_curve")

    def __init__(self, coeffs=None, curve: str | None = None):
        items = {}
        for p, c in dict(coeffs or {}).items():
            if not isinstance(p, Place):
                raise TypeError("divisor keys must be places, got %r" % (p,))
            if curve is None:
                curve = p.curve
            elif p.curve != curve:
                raise ValueError("places from different curves: %s vs %s" % (curve, p.curve))
            if c:
                items[p] = int(c)
        self._coeffs = items
        self._curve = curve

    @classmethod
    def of(cls, *terms) -> Divisor:
        """``Divisor.of((P, 2), (Q, 1))``."""
        out: dict[Place, int] = {}
        for p, c in terms:
            out[p] = out.get(p, 0) + c
        return cls(out)

    @property
    def curve(self):
        return self._curve

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].label)

    def __getitem__(self, p: Place) -> int:
        return self._coeffs.get(p, 0)

    def __iter__(self):
        return iter(p for p, _ in self.items())

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "Divisor(0)"
        return "Divisor(%s)" % " + ".join("%d*%s" % (c, p.label) for p, c in self.items())

    def _same(self, other: Divisor):
        if self._curve and other._curve and self._curve != other._curve:
            raise ValueError("divisors on different curves: %s vs %s" % (self._curve, other._curve))
        return self._curve or other._curve

    def _combine(self, other: Divisor, op) -> Divisor:
        curve = self._same(other)
        keys = set(self._coeffs) | set(other._coeffs)
        return Divisor({p: op(self[p], other[p]) for p in keys}, curve)

    def __add__(self, other: Divisor) -> Divisor:
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: Divisor) -> Divisor:
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, k: int) -> Divisor:
        return Divisor({p: k * c for p, c in self._coeffs.items()}, self._curve)

    __rmul__ = __mul__

    def max(self, other: Divisor) -> Divisor:
        return self._combine(other, max)

    def min(self, other: Divisor) -> Divisor:
        return self._combine(other, min)

    def deg(self) -> int:
        return sum(c * p.degree for p, c in self._coeffs.items())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def disjoint(self, other: Divisor) -> bool:
        self._same(other)
        return not (self.support() & other.support())

    def to_json(self):
        return [{"place": p.label, "coeff": c} for p, c in self.items()]


def divisor_max(divisors) -> Divisor:
    """Smallest divisor dominating every input."""
    divisors = list(divisors)
    if not divisors:
        return Divisor()
    out = divisors[0]
    for d in divisors[1:]:
        out = out.max(d)
    return out


def divisor_min(divisors) -> Divisor:
    divisors = list(divisors)
    if not divisors:
        return Divisor()
    out = divisors[0]
    for d in divisors[1:]:
        out = out.min(d)
    return out


def divisor_ops(op: str, a: Divisor, b: Divisor | None = None):
    """Dispatch over add, max, min, deg, is_effective, disjoint."""
    if op == "add":
        return a + b
    if op == "max":
        return a.max(b)
    if op == "min":
        return a.min(b)
    if op == "deg":
        return a.deg()
    if op == "is_effective":
        return a.is_effective()
    if op == "disjoint":
        return a.disjoint(b)
    raise ValueError("unknown divisor operation %r" % op)
