"""Which freeness criteria for ``|K_Y + ceil(M)|`` at ``y`` have their hypotheses met.

The global divisor ``M`` enters only through ``M^2`` and the minimum of
``M.C`` over curves through ``y``. A verdict never claims more than the
corresponding theorem does; the open-problem bound is flagged conjectural.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .boundary import BoundarySpec, TripleReport
from .classify import SingularityReport

__all__ = [
    "OutOfScopeError",
    "ReiderQuery",
    "ReiderVerdict",
    "SmoothPointCriterion",
    "reider_check",
    "smooth_point_criterion",
]


class OutOfScopeError(ValueError):
    pass


@dataclass(frozen=True)
class ReiderQuery:
    m2: Fraction
    mc_min: Fraction
    mc_all_nonneg: bool = True
    mc_strict_positive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "m2", Fraction(self.m2))
        object.__setattr__(self, "mc_min", Fraction(self.mc_min))
        if self.m2 <= 0:
            raise ValueError("M^2 must be positive for a big divisor")
        if self.mc_all_nonneg and self.mc_min < 0:
            raise ValueError("M is nef, so min M.C cannot be negative")
        if self.mc_strict_positive and self.mc_min <= 0:
            raise ValueError("--mc-positive claimed but min M.C <= 0")


@dataclass(frozen=True)
class Theorem5:
    applies: bool


@dataclass(frozen=True)
class Theorem6:
    hypotheses_met: bool
    margin_m2: Optional[Fraction]
    margin_mc: Optional[Fraction]


@dataclass(frozen=True)
class Theorem7:
    applicable_shape: bool
    hypotheses_met: bool


@dataclass(frozen=True)
class Threshold:
    threshold: Fraction
    met: bool
    status: str


@dataclass(frozen=True)
class ReiderVerdict:
    theorem5: Theorem5
    theorem6: Theorem6
    theorem7: Theorem7
    refined_an: Optional[Threshold]
    open_problem: Threshold
    mu: Optional[Fraction]
    delta_y: Fraction


def reider_check(report: SingularityReport, triple: TripleReport, q: ReiderQuery) -> ReiderVerdict:
    if report.is_smooth:
        raise OutOfScopeError(
            "out of scope of Theorems 6-7: y is smooth (use smooth_point_criterion)"
        )
    delta = report.delta_y
    mu = triple.mu
    lt = triple.is_lt_triple

    t5 = Theorem5(applies=not lt)

    if mu is not None:
        s = 1 - mu
        m2_margin = q.m2 - s * s * delta
        mc_margin = q.mc_min - s
        m2_ok = m2_margin > 0
        t6 = Theorem6(lt and m2_ok and mc_margin >= 0, m2_margin, mc_margin)
    else:
        m2_ok = False
        t6 = Theorem6(False, None, None)

    shape = report.shape
    de_shape = shape.kind in ("D", "E") and report.is_log_terminal
    t7 = Theorem7(
        applicable_shape=de_shape,
        hypotheses_met=de_shape and lt and m2_ok and (shape.kind == "E" or q.mc_strict_positive),
    )

    refined = None
    if shape.kind == "A" and mu is not None:
        a = min(report.chain_end_coefficients)
        thr = (1 - mu) * (1 - a)
        refined = Threshold(thr, lt and m2_ok and q.mc_min >= thr, "theorem")

    # the conjectured criterion uses delta = delta_y on log-terminal germs, 0 otherwise
    if report.is_log_terminal and mu is not None:
        s = 1 - mu
        op_delta = delta
    else:
        s = Fraction(1)
        op_delta = Fraction(0)
    op_thr = s * op_delta / 2
    open_problem = Threshold(
        op_thr, q.m2 > s * s * op_delta and q.mc_min >= op_thr, "conjectural"
    )

    return ReiderVerdict(t5, t6, t7, refined, open_problem, mu, delta)


@dataclass(frozen=True)
class SmoothPointCriterion:
    """Ein-Lazarsfeld thresholds at a smooth point, with ``mu = mult_y B``."""

    mult_b: Fraction
    m2_threshold: Fraction
    mc_threshold: Fraction
    met: bool
    note: str


def smooth_point_criterion(spec: BoundarySpec, q: ReiderQuery) -> SmoothPointCriterion:
    m = spec.mult_y()
    s = 2 - m
    return SmoothPointCriterion(
        mult_b=m,
        m2_threshold=s * s,
        mc_threshold=s,
        met=q.m2 > s * s and q.mc_min >= s,
        note=(
            "informational: smooth points use M^2 > (2 - mu)^2, M.C >= 2 - mu with "
            "mu = mult_y B; this differs from the boundary mu = mult_y(B)/2 on the blow-up"
        ),
    )
