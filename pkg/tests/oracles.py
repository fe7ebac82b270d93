"""Independent reference computations used by the tests.

Nothing here calls into the package's linear algebra or cycle code; the
matrix is rebuilt from vertices and edges and solved with sympy.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy


def raw_matrix(g):
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for j, v in enumerate(g.vertices):
        m[j][j] = -v.w
    for i, j, mult in g.edges:
        m[i][j] += mult
        m[j][i] += mult
    return m


def pair(m, x, y):
    n = len(m)
    return sum(Fraction(x[i]) * m[i][j] * Fraction(y[j]) for i in range(n) for j in range(n))


def kx(g):
    return [v.w + 2 * v.g - 2 for v in g.vertices]


def canonical(g):
    m = sympy.Matrix(raw_matrix(g))
    sol = m.LUsolve(sympy.Matrix([-k for k in kx(g)]))
    return [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]


def minors_sympy(m):
    mat = sympy.Matrix(m)
    return [int(mat[:k, :k].det()) for k in range(1, len(m) + 1)]


def neg_def_sympy(m):
    return all((d < 0) if k % 2 else (d > 0) for k, d in enumerate(minors_sympy(m), start=1))


def antinef_box(m, lo, cap):
    """All integral ``x`` with ``lo <= x_j <= cap``, ``x != 0`` and ``x.F_j <= 0``."""
    n = len(m)
    out = []
    for x in itertools.product(range(lo, cap + 1), repeat=n):
        if not any(x):
            continue
        if all(sum(m[j][i] * x[i] for i in range(n)) <= 0 for j in range(n)):
            out.append(x)
    return out


def fundamental_bruteforce(g, cap):
    sols = antinef_box(raw_matrix(g), 1, cap)
    return tuple(min(s[j] for s in sols) for j in range(len(g.vertices)))


def delta_prime(m, zp, a):
    d = [Fraction(x) - y for x, y in zip(zp, a)]
    return -pair(m, d, d)


def quadratic_form_counterexample(m, bound=3):
    """A nonzero integer ``x`` with ``|x_j| <= bound`` and ``x M x >= 0``, or None."""
    import numpy as np

    n = len(m)
    mm = np.array(m, dtype=np.int64)
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    # stream over the first coordinate to keep memory flat
    rest = np.array(list(itertools.product(vals, repeat=n - 1)), dtype=np.int64)
    rest = rest.reshape(len(vals) ** (n - 1), n - 1)
    for first in vals:
        x = np.hstack([np.full((len(rest), 1), first, dtype=np.int64), rest])
        q = np.einsum("ij,jk,ik->i", x, mm, x)
        nz = np.any(x != 0, axis=1)
        bad = np.nonzero((q >= 0) & nz)[0]
        if len(bad):
            return tuple(int(v) for v in x[bad[0]])
    return None
