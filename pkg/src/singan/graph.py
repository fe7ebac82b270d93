"""Resolution dual graphs: parsing, validation and the intersection matrix.

A graph file is line oriented; ``#`` starts a comment::

    smoothpoint                       # optional, blow-up of a smooth point
    vertex <name> w=<int> g=<int>     # F_j with F_j^2 = -w, genus g
    edge <name1> <name2> [m=<int>]    # F_i.F_j = m (default 1)
    curve <cname> b=<p/q> meets <v>[*<int>] ...

Vertex order is file order; every downstream tie-break uses it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .linalg import leading_minors

__all__ = [
    "GraphError",
    "GraphSyntaxError",
    "GraphValidationError",
    "Vertex",
    "CurveLine",
    "DualGraph",
    "GraphFile",
    "parse_graph",
    "parse_graph_file",
    "serialize_graph",
    "intersection_matrix",
    "check_negative_definite",
    "parse_rational",
]


class GraphError(ValueError):
    """Base class for bad graph input."""


class GraphSyntaxError(GraphError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GraphValidationError(GraphError):
    """The file parsed but does not describe a minimal resolution graph."""

    def __init__(self, message: str, kind: str, vertex: Optional[str] = None):
        super().__init__(message)
        self.kind = kind
        self.vertex = vertex


@dataclass(frozen=True)
class Vertex:
    name: str
    w: int
    g: int = 0


@dataclass(frozen=True)
class CurveLine:
    """A ``curve`` record: a boundary curve germ and how it meets the vertices."""

    name: str
    b: Fraction
    meets: tuple[tuple[int, int], ...]  # (vertex index, D.F_j)


@dataclass(frozen=True)
class DualGraph:
    """Weighted dual graph of the exceptional set of one germ.

    ``edges`` holds ``(i, j, m)`` with ``i < j`` and ``F_i.F_j = m``, sorted.
    Instances are validated on construction and never mutated.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int, int], ...] = ()
    smooth_point_mode: bool = False
    _matrix: tuple[tuple[int, ...], ...] = field(
        default=(), init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(sorted(_normalize_edges(self.edges, len(self.vertices))))
        )
        _validate(self)
        object.__setattr__(self, "_matrix", _build_matrix(self))

    @classmethod
    def build(cls, weights, edges=(), genera=None, names=None, smooth_point_mode=False):
        """Convenience constructor from plain lists."""
        n = len(weights)
        genera = list(genera) if genera is not None else [0] * n
        names = list(names) if names is not None else [f"F{i + 1}" for i in range(n)]
        vertices = tuple(Vertex(names[i], int(weights[i]), int(genera[i])) for i in range(n))
        norm = []
        for e in edges:
            i, j = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            norm.append((i, j, m))
        return cls(vertices, tuple(norm), smooth_point_mode)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.w for v in self.vertices)

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(v.g for v in self.vertices)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self._matrix

    def index(self, name: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.name == name:
                return i
        raise KeyError(name)

    def neighbors(self, i: int) -> list[int]:
        row = self._matrix[i]
        return [j for j in range(self.n) if j != i and row[j]]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1 and all(m == 1 for _, _, m in self.edges)


def _normalize_edges(edges, n):
    seen = set()
    for e in edges:
        i, j, m = e
        if i == j:
            raise GraphValidationError(f"self-loop on vertex index {i}", "self_loop")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphValidationError(f"edge ({i}, {j}) refers to unknown vertex", "unknown_vertex")
        if m < 1:
            raise GraphValidationError(f"edge multiplicity must be >= 1, got {m}", "multiplicity")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphValidationError(f"duplicate edge {key}", "duplicate_edge")
        seen.add(key)
        yield (key[0], key[1], int(m))


def _build_matrix(g: DualGraph):
    n = len(g.vertices)
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        rows[i][i] = -v.w
    for i, j, m in g.edges:
        rows[i][j] = rows[j][i] = m
    return tuple(tuple(r) for r in rows)


def _connected(n, edges) -> bool:
    adj = [[] for _ in range(n)]
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def _validate(g: DualGraph) -> None:
    if not g.vertices:
        raise GraphValidationError("graph has no vertices", "empty")
    names = set()
    for v in g.vertices:
        if v.name in names:
            raise GraphValidationError(f"duplicate vertex name {v.name!r}", "duplicate_vertex", v.name)
        names.add(v.name)
        if v.g < 0:
            raise GraphValidationError(f"vertex {v.name!r} has negative genus", "genus", v.name)
        if v.w < 1:
            raise GraphValidationError(
                f"vertex {v.name!r}: self-intersection -{v.w} is not negative",
                "definiteness",
                v.name,
            )
    if g.smooth_point_mode:
        if len(g.vertices) != 1 or g.vertices[0].w != 1 or g.vertices[0].g != 0:
            raise GraphValidationError(
                "smoothpoint requires exactly one vertex with w=1 g=0", "smoothpoint"
            )
    else:
        for v in g.vertices:
            if v.w + 2 * v.g - 2 < 0:
                raise GraphValidationError(
                    f"vertex {v.name!r} is a (-1)-curve of genus 0; resolution not minimal "
                    "(use 'smoothpoint' for the blow-up of a smooth point)",
                    "minimality",
                    v.name,
                )
    if not _connected(len(g.vertices), g.edges):
        raise GraphValidationError("dual graph is not connected", "connectedness")
    if not check_negative_definite(_build_matrix(g)):
        raise GraphValidationError("intersection matrix is not negative definite", "definiteness")


def intersection_matrix(g: DualGraph) -> tuple[tuple[int, ...], ...]:
    """Integer matrix with ``-w_j`` on the diagonal and ``F_i.F_j`` off it."""
    return g.matrix


def check_negative_definite(m) -> bool:
    """Sylvester's criterion with exact integer leading minors.

    The ``k``-th leading minor must have sign ``(-1)**k``.
    """
    for k, d in enumerate(leading_minors(m), start=1):
        if d == 0 or (d > 0) != (k % 2 == 0):
            return False
    return True


# --------------------------------------------------------------------------- parsing

_NAME = r"[A-Za-z_][A-Za-z0-9_.\-']*"
_NAME_RE = re.compile(rf"^{_NAME}$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def parse_rational(s: str) -> Fraction:
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational: {s!r}")
    value = Fraction(s)
    return value


@dataclass(frozen=True)
class GraphFile:
    graph: DualGraph
    curves: tuple[CurveLine, ...] = ()


def _tokens(line: str):
    """Yield (token, 1-based column) pairs."""
    for m in re.finditer(r"\S+", line):
        yield m.group(0), m.start() + 1


def _keyed(tok, col, key, lineno, pattern=_INT_RE):
    if not tok.startswith(key + "="):
        raise GraphSyntaxError(f"expected '{key}=...', got {tok!r}", lineno, col)
    val = tok[len(key) + 1:]
    if not pattern.match(val):
        raise GraphSyntaxError(f"bad value for {key}: {val!r}", lineno, col + len(key) + 1)
    return val


def parse_graph_file(text: str) -> GraphFile:
    """Parse a graph file including its ``curve`` lines."""
    vertices: list[Vertex] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int, int]] = []
    edge_keys: set = set()
    raw_curves = []
    smooth = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        head, hcol = toks[0]
        args = toks[1:]
        if head == "smoothpoint":
            if args:
                raise GraphSyntaxError("'smoothpoint' takes no arguments", lineno, args[0][1])
            smooth = True
        elif head == "vertex":
            if len(args) not in (2, 3):
                raise GraphSyntaxError("expected 'vertex <name> w=<int> g=<int>'", lineno, hcol)
            name, ncol = args[0]
            if not _NAME_RE.match(name):
                raise GraphSyntaxError(f"bad vertex name {name!r}", lineno, ncol)
            if name in index:
                raise GraphValidationError(
                    f"line {lineno}: duplicate vertex name {name!r}", "duplicate_vertex", name
                )
            w = int(_keyed(*args[1], "w", lineno))
            g = int(_keyed(*args[2], "g", lineno)) if len(args) == 3 else 0
            index[name] = len(vertices)
            vertices.append(Vertex(name, w, g))
        elif head == "edge":
            if len(args) not in (2, 3):
                raise GraphSyntaxError("expected 'edge <name1> <name2> [m=<int>]'", lineno, hcol)
            ends = []
            for name, col in args[:2]:
                if name not in index:
                    raise GraphSyntaxError(f"edge to unknown vertex {name!r}", lineno, col)
                ends.append(index[name])
            m = int(_keyed(*args[2], "m", lineno)) if len(args) == 3 else 1
            i, j = ends
            if i == j:
                raise GraphSyntaxError(f"self-loop on {args[0][0]!r}", lineno, args[1][1])
            if m < 1:
                raise GraphSyntaxError("edge multiplicity must be >= 1", lineno, args[2][1])
            key = (min(i, j), max(i, j))
            if key in edge_keys:
                raise GraphSyntaxError("duplicate edge", lineno, hcol)
            edge_keys.add(key)
            edges.append((i, j, m))
        elif head == "curve":
            if len(args) < 3:
                raise GraphSyntaxError(
                    "expected 'curve <name> b=<rational> meets <vertex>[*<int>] ...'", lineno, hcol
                )
            cname, ccol = args[0]
            if not _NAME_RE.match(cname):
                raise GraphSyntaxError(f"bad curve name {cname!r}", lineno, ccol)
            b = Fraction(_keyed(*args[1], "b", lineno, _RATIONAL_RE))
            if not 0 <= b <= 1:
                raise GraphSyntaxError(f"boundary coefficient {b} outside [0, 1]", lineno, args[1][1])
            if args[2][0] != "meets":
                raise GraphSyntaxError("expected 'meets'", lineno, args[2][1])
            meets = []
            for tok, col in args[3:]:
                name, _, mult = tok.partition("*")
                if mult and not _INT_RE.match(mult):
                    raise GraphSyntaxError(f"bad incidence {tok!r}", lineno, col)
                k = int(mult) if mult else 1
                if k < 1:
                    raise GraphSyntaxError("incidence must be >= 1", lineno, col)
                meets.append((name, k, col))
            raw_curves.append((lineno, cname, b, meets))
        else:
            raise GraphSyntaxError(f"unknown directive {head!r}", lineno, hcol)

    graph = DualGraph(tuple(vertices), tuple(edges), smooth)

    curves = []
    cnames = set()
    for lineno, cname, b, meets in raw_curves:
        if cname in cnames:
            raise GraphValidationError(f"line {lineno}: duplicate curve name {cname!r}", "duplicate_curve")
        cnames.add(cname)
        incidence: dict[int, int] = {}
        for name, k, col in meets:
            if name not in index:
                raise GraphSyntaxError(f"curve meets unknown vertex {name!r}", lineno, col)
            j = index[name]
            incidence[j] = incidence.get(j, 0) + k
        curves.append(CurveLine(cname, b, tuple(sorted(incidence.items()))))
    return GraphFile(graph, tuple(curves))


def parse_graph(text: str) -> DualGraph:
    """Parse and validate a graph file; ``curve`` lines are checked but dropped."""
    return parse_graph_file(text).graph


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_graph(g: DualGraph, curves: Iterable[CurveLine] = ()) -> str:
    lines = []
    if g.smooth_point_mode:
        lines.append("smoothpoint")
    for v in g.vertices:
        lines.append(f"vertex {v.name} w={v.w} g={v.g}")
    for i, j, m in g.edges:
        suffix = f" m={m}" if m != 1 else ""
        lines.append(f"edge {g.vertices[i].name} {g.vertices[j].name}{suffix}")
    for c in curves:
        parts = [f"curve {c.name} b={_fmt_rational(c.b)} meets"]
        for j, k in c.meets:
            name = g.vertices[j].name
            parts.append(name if k == 1 else f"{name}*{k}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
