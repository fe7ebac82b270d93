"""Classification of a germ from its invariants, plus A/D/E shape typing."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cycles import ConsistencyError, InvariantSet, compute_invariants
from .graph import DualGraph

__all__ = ["Shape", "SingularityReport", "graph_shape", "classify", "analyze"]


@dataclass(frozen=True)
class Shape:
    """``kind`` is one of ``"A"``, ``"D"``, ``"E"``, ``"Other"``."""

    kind: str
    n: Optional[int] = None

    def __str__(self):
        return self.kind if self.n is None else f"{self.kind}{self.n}"

    @property
    def is_ade(self) -> bool:
        return self.kind in ("A", "D", "E")


OTHER = Shape("Other")


def _arms(g: DualGraph, center: int) -> list[list[int]]:
    """The chains hanging off ``center``, each listed from the center outwards."""
    arms = []
    for start in g.neighbors(center):
        arm = [start]
        prev, cur = center, start
        while True:
            nxt = [v for v in g.neighbors(cur) if v != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    return arms


def graph_shape(g: DualGraph) -> Shape:
    """Combinatorial A/D/E type of the dual graph; weights are ignored.

    Requires a tree of rational curves with simple edges, otherwise ``Other``.
    A path is always ``A(n)``; ``D(n)`` needs a trivalent vertex with two
    pendant legs of length one.
    """
    if g.smooth_point_mode or any(g.genera) or not g.is_tree():
        return OTHER
    degrees = [g.degree(i) for i in range(g.n)]
    if max(degrees, default=0) <= 2:
        return Shape("A", g.n)
    branch = [i for i, d in enumerate(degrees) if d >= 3]
    if len(branch) != 1 or degrees[branch[0]] != 3:
        return OTHER
    lengths = sorted(len(a) for a in _arms(g, branch[0]))
    if lengths[0] == lengths[1] == 1:
        return Shape("D", g.n)
    if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
        return Shape("E", g.n)
    return OTHER


@dataclass(frozen=True)
class SingularityReport:
    invariants: InvariantSet
    is_smooth: bool
    is_rational: bool
    is_rdp: bool
    is_elliptic_gorenstein: bool
    is_log_terminal: bool
    is_log_canonical: bool
    is_canonical: bool
    multiplicity: Optional[int]
    minus_delta2: Fraction
    shape: Shape
    truly_lc_type: Optional[str]
    # auxiliary weight data used by the boundary lemmas
    chain_end_coefficients: Optional[tuple[Fraction, Fraction]] = None
    fork_legs_minus2: Optional[bool] = None

    @property
    def graph(self) -> DualGraph:
        return self.invariants.graph

    @property
    def delta_y(self) -> Fraction:
        return self.invariants.delta_y


def _chain_ends(g: DualGraph) -> tuple[int, int]:
    if g.n == 1:
        return 0, 0
    ends = [i for i in range(g.n) if g.degree(i) == 1]
    return ends[0], ends[1]


def _truly_lc_type(g: DualGraph, inv: InvariantSet) -> Optional[str]:
    if inv.Z == inv.Delta:
        return "Type1"
    degrees = [g.degree(i) for i in range(g.n)]
    branch = [i for i, d in enumerate(degrees) if d >= 3]
    if len(branch) == 1 and inv.Delta[branch[0]] == 1:
        if degrees[branch[0]] == 3:
            return "Type2"
        if degrees[branch[0]] == 4:
            return "Type3"
    if len(branch) == 2 and all(degrees[b] == 3 for b in branch):
        return "Type3"
    return None


def classify(g: DualGraph, inv: InvariantSet) -> SingularityReport:
    Z, Delta = inv.Z, inv.Delta
    a = Delta.coeffs
    smooth = g.smooth_point_mode
    rational = inv.pa_Z == 0
    rdp = not smooth and Delta.is_zero()
    eg = Z == Delta
    lt = all(x < 1 for x in a)
    lc = all(x <= 1 for x in a)
    minus_delta2 = -inv.Delta2
    shape = graph_shape(g)

    chain_ends = None
    if shape.kind == "A":
        i, j = _chain_ends(g)
        chain_ends = (a[i], a[j])
    fork = None
    if shape.kind == "D":
        center = next(i for i in range(g.n) if g.degree(i) == 3)
        pendants = [arm[0] for arm in _arms(g, center) if len(arm) == 1]
        fork = all(g.vertices[p].w == 2 for p in pendants)

    report = SingularityReport(
        invariants=inv,
        is_smooth=smooth,
        is_rational=rational,
        is_rdp=rdp,
        is_elliptic_gorenstein=eg,
        is_log_terminal=lt,
        is_log_canonical=lc,
        is_canonical=rdp,
        multiplicity=-inv.Z2 if rational else None,
        minus_delta2=minus_delta2,
        shape=shape,
        truly_lc_type=_truly_lc_type(g, inv) if lc and not lt else None,
        chain_end_coefficients=chain_ends,
        fork_legs_minus2=fork,
    )
    _self_check(report)
    return report


def _self_check(r: SingularityReport) -> None:
    inv = r.invariants
    d = inv.delta_y
    problems = []
    if r.is_log_terminal and not r.is_rational:
        problems.append("log-terminal but not rational")
    if r.is_log_canonical and not (r.is_rational or r.is_elliptic_gorenstein):
        problems.append("log-canonical but neither rational nor elliptic Gorenstein")
    if not r.is_smooth:
        if r.is_log_terminal and not r.is_rdp and not 0 < d < 2:
            problems.append(f"log-terminal non-RDP with delta_y = {d}")
        if r.is_log_canonical and not 0 <= d <= 2:
            problems.append(f"log-canonical with delta_y = {d}")
    if r.is_rdp and d != 2:
        problems.append(f"RDP with delta_y = {d}")
    if r.is_smooth and d != 4:
        problems.append(f"smooth point with delta_y = {d}")
    if r.is_rational and r.minus_delta2 != r.multiplicity - (4 - d):
        problems.append("-Delta^2 != mult - (4 - delta_y)")
    if (d == 0) != r.is_elliptic_gorenstein:
        problems.append("delta_y = 0 does not match Z = Delta")
    if problems:
        raise ConsistencyError("; ".join(problems))


def analyze(g: DualGraph) -> SingularityReport:
    return classify(g, compute_invariants(g))
