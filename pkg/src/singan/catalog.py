"""Named fixture graphs with their published (or derived) invariants."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Any, Callable

from .graph import DualGraph

__all__ = ["CatalogEntry", "UnknownEntryError", "builtin", "list_names", "entries"]


class UnknownEntryError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: DualGraph
    expected: dict[str, Any] = field(default_factory=dict)
    provenance: str = ""
    derived: bool = False
    # printed values that exact recomputation contradicts
    misprint: str = ""


def _star(center_w, legs, center_g=0):
    weights = [center_w] + list(legs)
    genera = [center_g] + [0] * len(legs)
    return DualGraph.build(weights, [(0, i + 1) for i in range(len(legs))], genera)


def _chain(weights):
    return DualGraph.build(weights, [(i, i + 1) for i in range(len(weights) - 1)])


def _ones(n):
    return (Q(1),) * n


def _smooth():
    g = DualGraph.build([1], smooth_point_mode=True)
    return CatalogEntry(
        "smooth", g,
        {"Z": (Q(1),), "Delta": (Q(-1),), "delta_y": Q(4), "pa_Z": 0, "multiplicity": 1},
        "blow-up of a smooth point; delta_y = 4",
    )


def _a1():
    return CatalogEntry(
        "A1", _chain([2]),
        {"Z": (Q(1),), "Delta": (Q(0),), "delta_y": Q(2), "multiplicity": 2,
         "is_rdp": True, "is_log_terminal": True},
        "ordinary double point; delta_y = 2 for a rational double point",
    )


def _an(n):
    return CatalogEntry(
        f"A{n}", _chain([2] * n),
        {"Z": _ones(n), "Delta": (Q(0),) * n, "delta_y": Q(2), "is_rdp": True},
        "du Val A_n chain",
    )


def _dn(n):
    # chain F1 - ... - F_{n-2}, fork F_{n-1}, F_n at F_{n-2}
    edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    g = DualGraph.build([2] * n, edges)
    return CatalogEntry(f"D{n}", g, {"Delta": (Q(0),) * n, "delta_y": Q(2), "is_rdp": True},
                        "du Val D_n graph")


_E_ARMS = {6: (1, 2, 2), 7: (1, 2, 3), 8: (1, 2, 4)}


def _en(n):
    arms = _E_ARMS[n]
    edges, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    g = DualGraph.build([2] * n, edges)
    return CatalogEntry(f"E{n}", g, {"Delta": (Q(0),) * n, "delta_y": Q(2), "is_rdp": True},
                        "du Val E_n graph")


def _d4_w3():
    # log-terminal, non-canonical germ of D_4 shape with the forced (-2)-fork
    return CatalogEntry(
        "D4_w3", _star(3, [2, 2, 2]),
        {"is_log_terminal": True, "is_rdp": False},
        "D_4-shaped log-terminal germ (central -3 curve)",
    )


def _type1_elliptic(w=1):
    name = "type1_elliptic" if w == 1 else f"type1_elliptic_w{w}"
    g = DualGraph.build([w], genera=[1])
    return CatalogEntry(
        name, g,
        {"Z": (Q(1),), "Delta": (Q(1),), "delta_y": Q(0), "pa_Z": 1,
         "is_elliptic_gorenstein": True, "is_log_canonical": True, "is_log_terminal": False,
         "truly_lc_type": "Type1"},
        "elliptic Gorenstein, single elliptic curve: Z = Delta = F1, delta_y = 0",
    )


def _type1_cycle(n):
    if n < 2:
        raise UnknownEntryError(f"type1_cycle_{n}: a cycle needs at least two curves")
    if n == 2:
        edges = [(0, 1, 2)]
    else:
        edges = [(i, (i + 1) % n) for i in range(n)]
    # one (-3)-curve keeps the form negative definite; all -2 would be the affine A diagram
    g = DualGraph.build([3] + [2] * (n - 1), edges)
    return CatalogEntry(
        f"type1_cycle_{n}", g,
        {"Z": _ones(n), "Delta": _ones(n), "delta_y": Q(0), "pa_Z": 1,
         "is_elliptic_gorenstein": True, "truly_lc_type": "Type1"},
        "elliptic Gorenstein, cycle of rational curves: Z = Delta = F1 + ... + Fn, delta_y = 0",
    )


_TYPE2_LEGS = {"333": (3, 3, 3), "224": (2, 2, 4), "244": (2, 4, 4), "236": (2, 3, 6)}


def _type2(abc, w):
    legs = _TYPE2_LEGS[abc]
    if w < 2:
        raise UnknownEntryError("type 2 needs w >= 2")
    z = (Q(2 if w == 2 else 1),) + _ones(3)
    delta = (Q(1),) + tuple(1 - Q(1, a) for a in legs)
    return CatalogEntry(
        f"type2_{abc}_w{w}", _star(w, legs),
        {"Z": z, "Delta": delta, "delta_y": Q(1), "is_log_canonical": True,
         "is_log_terminal": False, "truly_lc_type": "Type2"},
        "truly log-canonical Type 2 star, legs (-a, -b, -c); delta_y = 1",
        misprint=(
            "legs (2, 2, 4) have 1/2 + 1/2 + 1/4 != 1, so the germ is log-terminal; "
            "the printed values hold for (2, 4, 4)"
        ) if abc == "224" else "",
    )


def _type3(w):
    if w < 3:
        raise UnknownEntryError("type 3 needs w >= 3")
    z = (Q(2 if w == 3 else 1),) + _ones(4)
    delta = (Q(1),) + (Q(1, 2),) * 4
    return CatalogEntry(
        f"type3_w{w}", _star(w, [2, 2, 2, 2]),
        {"Z": z, "Delta": delta, "delta_y": Q(1 if w == 3 else 2), "is_log_canonical": True,
         "is_log_terminal": False, "truly_lc_type": "Type3"},
        "truly log-canonical Type 3 star, four (-2)-legs; delta_y = 2, except 1 when w = 3",
    )


def _exercise():
    g = DualGraph.build(
        [4, 3, 3, 3, 2, 2, 2, 2, 2, 2],
        [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
    )
    # computed by this package and cross-checked by the brute-force oracles
    return CatalogEntry(
        "exercise_1_10", g,
        {"Z": _ones(10),
         "Delta": (Q(7, 5), Q(6, 5), Q(6, 5), Q(6, 5)) + (Q(3, 5),) * 6,
         "delta_y": Q(17, 5), "pa_Z": 0, "is_log_canonical": False},
        "ten-curve tree with weights 4, 3, 3, 3, 2, ... (exercise graph)",
        derived=True,
    )


def _cone(genus, w):
    if genus == 0 and w == 1:
        g = DualGraph.build([1], smooth_point_mode=True)
    else:
        g = DualGraph.build([w], genera=[genus])
    return CatalogEntry(
        f"cone_g{genus}_w{w}", g,
        {"Z": (Q(1),), "Delta": (Q(2 * (genus - 1), w) + 1,),
         "delta_y": Q(4 * (genus - 1) ** 2, w)},
        "cone over a smooth curve of genus g embedded with degree w",
    )


def _remark210():
    return CatalogEntry(
        "remark210", _star(5, [2] * 5),
        {"Z": _ones(6), "Delta": (Q(6, 5),) + (Q(3, 5),) * 5, "delta_y": Q(13, 5),
         "is_rational": True, "is_log_canonical": False},
        "rational, not log-canonical: central -5 curve with five (-2)-legs",
    )


_FIXED: dict[str, Callable[[], CatalogEntry]] = {
    "smooth": _smooth,
    "A1": _a1,
    "type1_elliptic": _type1_elliptic,
    "exercise_1_10": _exercise,
    "remark210": _remark210,
    "D4_w3": _d4_w3,
}

_PATTERNS: list[tuple[re.Pattern, Callable[..., CatalogEntry]]] = [
    (re.compile(r"A([1-9]\d*)"), lambda n: _an(int(n)) if n != "1" else _a1()),
    (re.compile(r"D([4-9]|[1-9]\d+)"), lambda n: _dn(int(n))),
    (re.compile(r"E([678])"), lambda n: _en(int(n))),
    (re.compile(r"type1_elliptic_w([1-9]\d*)"), lambda w: _type1_elliptic(int(w))),
    (re.compile(r"type1_cycle_(\d+)"), lambda n: _type1_cycle(int(n))),
    (re.compile(r"type2_(333|224|244|236)_w(\d+)"), lambda abc, w: _type2(abc, int(w))),
    (re.compile(r"type3_w(\d+)"), lambda w: _type3(int(w))),
    (re.compile(r"cone_g(\d+)_w([1-9]\d*)"), lambda g, w: _cone(int(g), int(w))),
]

_LISTING = (
    ["smooth", "A1", "A2", "A3", "A4", "D4", "D5", "D6", "E6", "E7", "E8", "D4_w3",
     "type1_elliptic", "type1_elliptic_w2", "type1_cycle_2", "type1_cycle_3", "type1_cycle_4"]
    + [f"type2_{abc}_w{w}" for abc in ("333", "224", "244", "236") for w in (2, 3)]
    + ["type3_w3", "type3_w4", "exercise_1_10", "remark210"]
    + [f"cone_g{g}_w{w}" for g in (0, 1, 2) for w in (1, 2, 3)]
)


def builtin(name: str) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, make in _PATTERNS:
        m = pattern.fullmatch(name)
        if m:
            entry = make(*m.groups())
            if entry.name != name:
                # e.g. "type1_elliptic_w1" resolves to "type1_elliptic"
                entry = CatalogEntry(
                    name, entry.graph, entry.expected, entry.provenance, entry.derived, entry.misprint
                )
            return entry
    raise UnknownEntryError(f"unknown catalog entry {name!r}")


def list_names() -> list[str]:
    return list(_LISTING)


def entries() -> list[CatalogEntry]:
    return [builtin(n) for n in _LISTING]
