"""Seeded random dual graphs for property suites.

Trees on at most nine vertices, weights in [2, 6], genus 0 except for an
occasional single vertex of genus 1 or 2; rejection-sampled to negative
definiteness. The default seed can be overridden with ``SINGAN_SEED``.
"""
from __future__ import annotations

import os
import random
from fractions import Fraction

from .boundary import BoundaryCurve, BoundarySpec, triple_classify
from .cycles import compute_invariants
from .graph import DualGraph, GraphValidationError

DEFAULT_SEED = 19970521


def default_seed() -> int:
    env = os.environ.get("SINGAN_SEED")
    return int(env) if env else DEFAULT_SEED


def _random_tree_edges(rng: random.Random, n: int):
    return [(rng.randrange(i), i) for i in range(1, n)]


def _star_edges(arms):
    edges, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges, nxt


def random_graph(rng: random.Random, max_vertices: int = 9, genus_prob: float = 0.15) -> DualGraph:
    while True:
        n = rng.randint(1, max_vertices)
        weights = [rng.randint(2, 6) for _ in range(n)]
        genera = [0] * n
        if rng.random() < genus_prob:
            genera[rng.randrange(n)] = rng.randint(1, 2)
        try:
            return DualGraph.build(weights, _random_tree_edges(rng, n), genera)
        except GraphValidationError:
            continue


def _lt_candidate(rng: random.Random, max_vertices: int) -> DualGraph:
    kind = rng.random()
    if kind < 0.35:
        n = rng.randint(1, max_vertices)
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind < 0.85:
        # star with three arms; short arms keep the platonic condition likely
        while True:
            arms = [rng.randint(1, 3) for _ in range(3)]
            if rng.random() < 0.5:
                arms[0] = arms[1] = 1
            if 1 + sum(arms) <= max_vertices:
                break
        edges, n = _star_edges(arms)
    else:
        n = rng.randint(1, max_vertices)
        edges = _random_tree_edges(rng, n)
    # bias towards (-2)-curves so D/E and RDP-like germs show up
    weights = [2 if rng.random() < 0.45 else rng.randint(3, 6) for _ in range(n)]
    # random relabelling so vertex order carries no structure
    perm = list(range(n))
    rng.shuffle(perm)
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    weights = [weights[perm[i]] for i in range(n)]
    edges = [(inv[i], inv[j]) for i, j in edges]
    return DualGraph.build(weights, edges)


def random_lt_graph(rng: random.Random, max_vertices: int = 9) -> DualGraph:
    """A random log-terminal germ (rejection sampling)."""
    while True:
        try:
            g = _lt_candidate(rng, max_vertices)
        except GraphValidationError:
            continue
        if all(a < 1 for a in compute_invariants(g).Delta):
            return g


def random_lt_triple(rng: random.Random, max_vertices: int = 9):
    """A log-terminal germ with a random boundary making the triple log-terminal."""
    while True:
        g = random_lt_graph(rng, max_vertices)
        inv = compute_invariants(g)
        curves = []
        for c in range(rng.randint(0, 3)):
            b = Fraction(rng.randint(0, 9), rng.randint(10, 30))
            hits = rng.sample(range(g.n), rng.randint(1, min(2, g.n)))
            incidence = tuple(sorted((j, rng.randint(1, 2)) for j in hits))
            curves.append(BoundaryCurve(f"C{c + 1}", b, incidence))
        spec = BoundarySpec(tuple(curves))
        if triple_classify(g, inv, spec).is_lt_triple:
            return g, spec


def sample(factory, count: int, seed: int | None = None, **kwargs):
    rng = random.Random(default_seed() if seed is None else seed)
    return [factory(rng, **kwargs) for _ in range(count)]
