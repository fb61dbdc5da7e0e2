"""Curve backends, places, divisors and Riemann-Roch spaces."""
from __future__ import annotations

import functools
import re

from ..field import field_make
from .base import CurveBackend, PoleError, UnsupportedPlace
from .divisor import Divisor, Place, divisor_max, divisor_min, divisor_ops
from .elliptic import CurveFunction, EllipticCurve
from .p1 import ProjectiveLine, RationalFunction

__all__ = [
    "CurveBackend", "CurveFunction", "Divisor", "EllipticCurve", "Place", "PoleError",
    "ProjectiveLine", "RationalFunction", "UnsupportedPlace", "divisor_from_json",
    "divisor_max", "divisor_min", "divisor_ops", "make_curve",
]


@functools.lru_cache(maxsize=None)
def make_curve(name: str) -> CurveBackend:
    """``p1-gf4``, ``elliptic-gf4`` and so on."""
    m = re.fullmatch(r"(p1|elliptic)-gf(\d+)", name.strip())
    if not m:
        raise ValueError("unknown curve %r (expected p1-gf<q> or elliptic-gf<q>)" % name)
    q = int(m.group(2))
    if q < 2 or q & (q - 1):
        raise ValueError("q must be a power of two, got %d" % q)
    field = field_make(q.bit_length() - 1)
    if m.group(1) == "p1":
        return ProjectiveLine(field)
    return EllipticCurve(field)


def divisor_from_json(curve: CurveBackend, data) -> Divisor:
    """Divisor from ``[{"place": label, "coeff": int}, ...]``."""
    terms = []
    for item in data or []:
        terms.append((curve.parse_place(item["place"]), int(item["coeff"])))
    return Divisor.of(*terms)
