"""Boundary divisors through the singular point: pullback, triple type and mu."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .cycles import Cycle, InvariantSet
from .graph import CurveLine, DualGraph
from .linalg import solve

__all__ = [
    "BoundaryError",
    "MuUndefinedError",
    "BoundaryCurve",
    "BoundarySpec",
    "TripleReport",
    "exceptional_part",
    "triple_classify",
    "mu",
]


class BoundaryError(ValueError):
    pass


class MuUndefinedError(ValueError):
    """mu only makes sense on a log-terminal germ."""


@dataclass(frozen=True)
class BoundaryCurve:
    name: str
    b: Fraction
    incidence: tuple[tuple[int, int], ...]  # (vertex index, D_i.F_j)

    def passes_through(self) -> bool:
        return any(k > 0 for _, k in self.incidence)


@dataclass(frozen=True)
class BoundarySpec:
    curves: tuple[BoundaryCurve, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        for c in self.curves:
            b = Fraction(c.b)
            if not 0 <= b <= 1:
                raise BoundaryError(f"curve {c.name!r}: coefficient {b} outside [0, 1]")
            if any(k < 0 for _, k in c.incidence):
                raise BoundaryError(f"curve {c.name!r}: negative incidence")
            if b > 0 and not c.passes_through():
                raise BoundaryError(f"curve {c.name!r} has b > 0 but does not pass through y")

    @classmethod
    def from_lines(cls, lines: Iterable[CurveLine]) -> "BoundarySpec":
        return cls(tuple(BoundaryCurve(c.name, c.b, c.meets) for c in lines))

    def to_lines(self) -> tuple[CurveLine, ...]:
        return tuple(CurveLine(c.name, Fraction(c.b), tuple(c.incidence)) for c in self.curves)

    def scaled(self, t) -> "BoundarySpec":
        return BoundarySpec(
            tuple(BoundaryCurve(c.name, Fraction(c.b) * t, c.incidence) for c in self.curves)
        )

    def check_adjoint(self) -> None:
        """Coefficients of a round-up boundary ``ceil(M) - M`` are strictly below 1."""
        for c in self.curves:
            if c.b >= 1:
                raise BoundaryError(f"curve {c.name!r}: b = {c.b} but the adjoint boundary needs b < 1")

    def mult_y(self) -> Fraction:
        """``sum b_i (D_i.F_1)``; on the blow-up of a smooth point this is ``mult_y B``."""
        return sum((Fraction(c.b) * k for c in self.curves for _, k in c.incidence), Fraction(0))


def exceptional_part(g: DualGraph, spec: BoundarySpec) -> Cycle:
    """Exceptional coefficients ``b'`` of ``f^*B``, killed against every ``F_j``."""
    rhs = [Fraction(0)] * g.n
    for c in spec.curves:
        if c.b and not c.passes_through():
            raise BoundaryError(f"curve {c.name!r} does not pass through y")
        for j, k in c.incidence:
            if not 0 <= j < g.n:
                raise BoundaryError(f"curve {c.name!r} meets unknown vertex index {j}")
            rhs[j] -= Fraction(c.b) * k
    bp = Cycle(g, tuple(solve(g.matrix, rhs)))
    if any(x < 0 for x in bp):
        raise BoundaryError("negative exceptional coefficient for an effective boundary")
    return bp


@dataclass(frozen=True)
class TripleReport:
    b_prime: Cycle
    is_lt_triple: bool
    is_lc_triple: bool
    mu: Optional[Fraction]


def mu(g: DualGraph, inv: InvariantSet, b_prime: Cycle) -> Fraction:
    """``min_j b'_j / (z_j - a_j)``; requires a log-terminal germ."""
    a, z = inv.Delta.coeffs, inv.Z.coeffs
    if not all(x < 1 for x in a):
        raise MuUndefinedError("mu is undefined: the germ is not log-terminal")
    return min(b_prime[j] / (z[j] - a[j]) for j in range(g.n))


def triple_classify(g: DualGraph, inv: InvariantSet, spec: BoundarySpec) -> TripleReport:
    bp = exceptional_part(g, spec)
    total = [a + b for a, b in zip(inv.Delta.coeffs, bp.coeffs)]
    germ_lt = all(x < 1 for x in inv.Delta.coeffs)
    return TripleReport(
        b_prime=bp,
        is_lt_triple=all(x < 1 for x in total),
        is_lc_triple=all(x <= 1 for x in total),
        mu=mu(g, inv, bp) if germ_lt else None,
    )
