"""Exceptional cycles and the basic invariants of a germ.

Everything is exact: coefficients are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graph import DualGraph
from .linalg import solve

__all__ = [
    "ConsistencyError",
    "Cycle",
    "InvariantSet",
    "intersect",
    "fundamental_cycle",
    "kx_dot",
    "kx_vector",
    "canonical_cycle",
    "arithmetic_genus",
    "kawachi_delta",
    "compute_invariants",
]


class ConsistencyError(RuntimeError):
    """An internal identity failed; this is a bug, not bad input."""


@dataclass(frozen=True)
class Cycle:
    """A rational combination ``sum c_j F_j`` of exceptional curves."""

    graph: DualGraph
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.graph.n:
            raise ValueError(f"cycle has {len(coeffs)} coefficients, graph has {self.graph.n} vertices")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, graph: DualGraph) -> "Cycle":
        return cls(graph, (0,) * graph.n)

    @classmethod
    def reduced(cls, graph: DualGraph) -> "Cycle":
        """The reduced cycle ``sum F_j``."""
        return cls(graph, (1,) * graph.n)

    @classmethod
    def basis(cls, graph: DualGraph, j: int) -> "Cycle":
        return cls(graph, tuple(int(i == j) for i in range(graph.n)))

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: "Cycle"):
        if not isinstance(other, Cycle):
            return NotImplemented
        if other.graph is not self.graph and other.graph != self.graph:
            raise ValueError("cycles live on different graphs")

    def __add__(self, other: "Cycle") -> "Cycle":
        self._check(other)
        return Cycle(self.graph, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cycle") -> "Cycle":
        self._check(other)
        return Cycle(self.graph, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cycle":
        return Cycle(self.graph, tuple(-a for a in self.coeffs))

    def __mul__(self, t) -> "Cycle":
        return Cycle(self.graph, tuple(t * a for a in self.coeffs))

    __rmul__ = __mul__

    def le(self, other: "Cycle") -> bool:
        """Coefficient-wise ``self <= other``."""
        self._check(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def dot_basis(self, j: int) -> Fraction:
        """``self . F_j``."""
        row = self.graph.matrix[j]
        return sum((c * row[i] for i, c in enumerate(self.coeffs) if c), Fraction(0))

    def as_dict(self) -> dict[str, str]:
        return {v.name: _fmt(c) for v, c in zip(self.graph.vertices, self.coeffs)}

    def __str__(self):
        terms = []
        for v, c in zip(self.graph.vertices, self.coeffs):
            if c:
                terms.append(v.name if c == 1 else f"{_fmt(c)}*{v.name}")
        return " + ".join(terms) if terms else "0"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def intersect(c1: Cycle, c2: Cycle) -> Fraction:
    """Intersection pairing of two exceptional cycles."""
    c1._check(c2)
    m = c1.graph.matrix
    total = Fraction(0)
    for i, a in enumerate(c1.coeffs):
        if not a:
            continue
        row = m[i]
        total += a * sum((row[j] * b for j, b in enumerate(c2.coeffs) if b), Fraction(0))
    return total


def kx_dot(g: DualGraph, j: int) -> int:
    """``K_X . F_j`` by adjunction on a smooth curve: ``w + 2g - 2``."""
    v = g.vertices[j]
    return v.w + 2 * v.g - 2


def kx_vector(g: DualGraph) -> tuple[int, ...]:
    return tuple(kx_dot(g, j) for j in range(g.n))


def fundamental_cycle(g: DualGraph, order: Optional[Sequence[int]] = None) -> Cycle:
    """Laufer's computation sequence.

    Start from the reduced cycle and keep adding ``F_j`` for the first vertex
    (in ``order``, default file order) with ``Z.F_j > 0``.
    """
    order = list(range(g.n)) if order is None else list(order)
    m = g.matrix
    z = [1] * g.n
    # v[j] = Z.F_j, updated incrementally
    v = [sum(m[j]) for j in range(g.n)]
    while True:
        for j in order:
            if v[j] > 0:
                break
        else:
            return Cycle(g, tuple(z))
        z[j] += 1
        row = m[j]
        for i in range(g.n):
            v[i] += row[i]


def canonical_cycle(g: DualGraph) -> Cycle:
    """The unique rational cycle with ``Delta.F_j = -K_X.F_j`` for every ``j``."""
    rhs = [-k for k in kx_vector(g)]
    return Cycle(g, tuple(solve(g.matrix, rhs)))


def arithmetic_genus(g: DualGraph, Z: Cycle, Delta: Cycle) -> int:
    pa = Fraction(intersect(Z, Z - Delta), 2) + 1
    if pa.denominator != 1:
        raise ConsistencyError(f"p_a(Z) = {pa} is not an integer")
    if pa < 0:
        raise ConsistencyError(f"p_a(Z) = {pa} is negative")
    return int(pa)


def kawachi_delta(Z: Cycle, Delta: Cycle) -> Fraction:
    """Kawachi's invariant ``-(Z - Delta)^2``."""
    d = Z - Delta
    return -intersect(d, d)


@dataclass(frozen=True)
class InvariantSet:
    Z: Cycle
    Delta: Cycle
    pa_Z: int
    delta_y: Fraction
    Z2: int
    Delta2: Fraction
    KxFj: tuple[int, ...]

    @property
    def graph(self) -> DualGraph:
        return self.Z.graph


def compute_invariants(g: DualGraph) -> InvariantSet:
    Z = fundamental_cycle(g)
    Delta = canonical_cycle(g)
    pa = arithmetic_genus(g, Z, Delta)
    delta = kawachi_delta(Z, Delta)
    if delta < 0:
        raise ConsistencyError(f"negative Kawachi invariant {delta}")
    z2 = intersect(Z, Z)
    return InvariantSet(
        Z=Z,
        Delta=Delta,
        pa_Z=pa,
        delta_y=delta,
        Z2=int(z2),
        Delta2=intersect(Delta, Delta),
        KxFj=kx_vector(g),
    )
