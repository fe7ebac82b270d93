"""Bounded brute-force checks of finitely verifiable claims about a germ.

Every result carries the search box it covered; nothing is truncated
silently. The two exhaustive scans run in :mod:`singan.kernels`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import kernels
from .cycles import Cycle, InvariantSet, compute_invariants, fundamental_cycle, intersect
from .graph import DualGraph
from .random_graphs import default_seed

__all__ = [
    "NotLogTerminalError",
    "VerificationResult",
    "verify_fundamental_minimality",
    "verify_prop_2_10",
    "verify_tech_lemma",
    "verify_laufer_order_independence",
    "converse_failures",
    "delta_prime",
    "decomposition_terms",
]


class NotLogTerminalError(ValueError):
    pass


@dataclass
class VerificationResult:
    claim: str
    search_space: str
    holds: bool
    asserted: bool = True
    witness: Optional[Cycle] = None
    extremal_value: Optional[Fraction] = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.asserted and not self.holds


def delta_prime(Zp: Cycle, Delta: Cycle) -> Fraction:
    """``-(Z' - Delta)^2`` for an arbitrary cycle ``Z'``."""
    d = Zp - Delta
    return -intersect(d, d)


def _z_ints(inv: InvariantSet) -> list[int]:
    return [int(x) for x in inv.Z]


def verify_fundamental_minimality(g: DualGraph, cap: Optional[int] = None) -> VerificationResult:
    """Every nonzero integral ``Z'`` in ``[0, cap]^n`` with ``Z'.F_j <= 0`` dominates ``Z``."""
    inv = compute_invariants(g)
    z = _z_ints(inv)
    if cap is None:
        cap = max(z) + 3
    if cap < max(z):
        raise ValueError(f"cap {cap} is below the largest fundamental-cycle coefficient {max(z)}")
    visited, n_sol, meet, first_bad, contains_z = kernels.scan_antinef(g.matrix, z, cap)
    holds = contains_z and first_bad is None and meet is not None and list(meet) == z
    return VerificationResult(
        claim="fundamental-cycle-minimality",
        search_space=f"integral Z' with 0 <= z'_j <= {cap} (box of {(cap + 1) ** g.n} cycles, "
        f"{visited} search nodes after exact pruning)",
        holds=holds,
        witness=None if holds else Cycle(g, first_bad or meet or z),
        details={
            "Z": inv.Z,
            "cap": cap,
            "solutions": n_sol,
            "meet": Cycle(g, meet) if meet else None,
            "backend": kernels.BACKEND,
        },
    )


def verify_prop_2_10(
    g: DualGraph, headroom: int = 2, exercise_lc: bool = False, limit: int = 64
) -> VerificationResult:
    """Among integral ``Z' >= sum F_j`` near ``Z``, ``delta' >= delta_y`` with equality only below ``Z``.

    Asserting on log-terminal germs; on other germs (or with
    ``exercise_lc``) the scan only reports what it found.
    """
    inv = compute_invariants(g)
    z = _z_ints(inv)
    lt = all(a < 1 for a in inv.Delta)
    lc = all(a <= 1 for a in inv.Delta)
    if exercise_lc:
        mode = "exercise-lc"
    else:
        mode = "assert" if lt else "explore"
    hi = [x + headroom for x in z]
    (explored, qz, qmin, n_min, mins, n_below, first_below, n_tie, first_tie,
     id_fail) = kernels.scan_box(g.matrix, inv.KxFj, z, [1] * g.n, hi, limit)
    shift = -inv.Delta2
    if Fraction(qz) + shift != inv.delta_y:
        raise AssertionError("scan normalisation disagrees with delta_y")
    min_delta = qmin + shift
    minimizers = [Cycle(g, m) for m in mins]
    reduced = Cycle.reduced(g)
    holds = n_below == 0 and n_tie == 0 and id_fail == 0

    if mode == "assert":
        witness = None if holds else Cycle(g, first_below or first_tie or z)
    else:
        witness = minimizers[0] if min_delta < inv.delta_y else None

    return VerificationResult(
        claim="prop-2.10" if mode != "exercise-lc" else "prop-2.10-exercise-lc",
        search_space=f"integral Z' with 1 <= z'_j <= z_j + {headroom} ({explored} cycles)",
        holds=holds,
        asserted=mode == "assert",
        witness=witness,
        extremal_value=min_delta,
        details={
            "mode": mode,
            "log_terminal": lt,
            "log_canonical": lc,
            "Z": inv.Z,
            "delta_y": inv.delta_y,
            "headroom": headroom,
            "explored": explored,
            "min_delta_prime": min_delta,
            "minimizers": minimizers,
            "minimizers_total": n_min,
            "below_delta_y": n_below,
            "first_below": Cycle(g, first_below) if first_below else None,
            "ties_not_below_Z": n_tie,
            "first_tie_not_below_Z": Cycle(g, first_tie) if first_tie else None,
            "decomposition_identity_failures": id_fail,
            "reduced_cycle_delta_prime": delta_prime(reduced, inv.Delta),
            "backend": kernels.BACKEND,
        },
    )


def decomposition_terms(Z: Cycle, Delta: Cycle, Zp: Cycle) -> Fraction:
    """``delta_y`` plus the correction terms for ``Z' = Z + P - N``."""
    g = Z.graph
    P = Cycle(g, tuple(max(b - a, 0) for a, b in zip(Z, Zp)))
    N = Cycle(g, tuple(max(a - b, 0) for a, b in zip(Z, Zp)))
    W = Z - Delta
    return (
        -intersect(W, W)
        - intersect(P, P)
        - 2 * intersect(W, P)
        - intersect(N, N)
        + 2 * intersect(W, N)
        + 2 * intersect(P, N)
    )


def converse_failures(g: DualGraph) -> list[tuple[int, Fraction]]:
    """Vertices with ``z_j = 2`` and ``(Z - Delta).F_j = 0`` and the value ``delta'`` of ``Z - F_j``."""
    inv = compute_invariants(g)
    W = inv.Z - inv.Delta
    out = []
    for j in range(g.n):
        if inv.Z[j] == 2 and W.dot_basis(j) == 0:
            out.append((j, delta_prime(inv.Z - Cycle.basis(g, j), inv.Delta)))
    return out


def verify_tech_lemma(g: DualGraph) -> VerificationResult:
    inv = compute_invariants(g)
    if not all(a < 1 for a in inv.Delta):
        raise NotLogTerminalError("the germ is not log-terminal")
    W = inv.Z - inv.Delta
    u = [W.dot_basis(j) for j in range(g.n)]
    problems = []
    pos = [j for j in range(g.n) if u[j] > 0]
    if len(pos) > 1:
        problems.append(f"{len(pos)} vertices with (Z-Delta).F_j > 0")
    for j in pos:
        if u[j] != 1 or g.vertices[j].w < 3:
            problems.append(f"vertex {g.vertices[j].name}: (Z-Delta).F = {u[j]}, w = {g.vertices[j].w}")
    neg = [j for j in range(g.n) if inv.Z[j] >= 2 and u[j] < 0]
    if len(neg) > 1:
        problems.append(f"{len(neg)} vertices with z_j >= 2 and (Z-Delta).F_j < 0")
    for j in neg:
        if inv.Z[j] != 2 or u[j] != -1:
            problems.append(f"vertex {g.vertices[j].name}: z = {inv.Z[j]}, (Z-Delta).F = {u[j]}")
    holds = not problems
    return VerificationResult(
        claim="tech-lemma",
        search_space=f"all {g.n} vertices",
        holds=holds,
        witness=None if holds else W,
        details={"Z_minus_Delta_dot_F": u, "problems": problems},
    )


def verify_laufer_order_independence(
    g: DualGraph, trials: int = 50, seed: Optional[int] = None
) -> VerificationResult:
    seed = default_seed() if seed is None else seed
    rng = random.Random(seed)
    reference = fundamental_cycle(g)
    order = list(range(g.n))
    bad = None
    for _ in range(trials):
        rng.shuffle(order)
        z = fundamental_cycle(g, order)
        if z != reference:
            bad = z
            break
    return VerificationResult(
        claim="laufer-order-independence",
        search_space=f"{trials} random tie-break orders, seed {seed}",
        holds=bad is None,
        witness=bad,
        details={"Z": reference, "seed": seed, "trials": trials},
    )
