"""Vectorial Boolean functions with propagation and resiliency guarantees built
from algebraic-geometry codes."""

__version__ = "0.1.0"
