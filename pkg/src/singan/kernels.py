"""Backend selection for the enumeration kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels``. Setting ``SINGAN_PURE_PYTHON=1`` forces the
fallback.
"""
from __future__ import annotations

import os
from array import array
from collections import deque
from types import ModuleType

from . import _pykernels

__all__ = ["BACKEND", "backend", "get_backend", "scan_box", "scan_antinef"]


def _load() -> ModuleType:
    if os.environ.get("SINGAN_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels
    return _ckernels


backend = _load()
BACKEND: str = backend.BACKEND


def get_backend(name: str | None = None) -> ModuleType:
    """``"python"``, ``"cython"`` or ``None`` for the active backend."""
    if name is None:
        return backend
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def _i64(values) -> array:
    return array("q", [int(x) for x in values])


def scan_box(matrix, k, z, lo, hi, limit=64, impl=None):
    n = len(matrix)
    flat = [x for row in matrix for x in row]
    return get_backend(impl).scan_box(
        n, _i64(flat), _i64(k), _i64(z), _i64(lo), _i64(hi), limit
    )


def _bfs_order(matrix) -> list[int]:
    n = len(matrix)
    order, seen = [], {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in range(n):
            if v != u and matrix[u][v] and v not in seen:
                seen.add(v)
                queue.append(v)
    # disconnected input never reaches here, but keep the order total
    order.extend(v for v in range(n) if v not in seen)
    return order


def scan_antinef(matrix, z, cap, impl=None):
    n = len(matrix)
    order = _bfs_order(matrix)
    pos = {v: d for d, v in enumerate(order)}
    by_depth: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        closed = [u] + [v for v in range(n) if v != u and matrix[u][v]]
        by_depth[max(pos[v] for v in closed)].append(u)
    checks, ptr = [], [0]
    for d in range(n):
        checks.extend(by_depth[d])
        ptr.append(len(checks))
    flat = [x for row in matrix for x in row]
    return get_backend(impl).scan_antinef(
        n, _i64(flat), _i64(z), int(cap), _i64(order), _i64(checks), _i64(ptr)
    )
