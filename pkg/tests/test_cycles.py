from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singan import catalog
from singan.cycles import (
    ConsistencyError,
    Cycle,
    arithmetic_genus,
    canonical_cycle,
    compute_invariants,
    fundamental_cycle,
    intersect,
    kawachi_delta,
    kx_dot,
)
from singan.graph import DualGraph

from oracles import canonical, fundamental_bruteforce, kx, pair, raw_matrix
from strategies import graphs, trees


def inv_of(name):
    return compute_invariants(catalog.builtin(name).graph)


def test_intersect_examples():
    a1 = catalog.builtin("A1").graph
    z = fundamental_cycle(a1)
    assert intersect(z, z) == -2
    assert intersect(z, Cycle.zero(a1)) == 0
    inv = inv_of("type2_333_w3")
    w = inv.Z - inv.Delta
    assert intersect(w, w) == -1


def test_intersect_rejects_foreign_graph():
    with pytest.raises(ValueError):
        intersect(Cycle.reduced(DualGraph.build([2])), Cycle.reduced(DualGraph.build([3])))


def test_fundamental_cycle_examples():
    assert tuple(inv_of("A1").Z) == (1,)
    assert tuple(inv_of("type3_w3").Z) == (2, 1, 1, 1, 1)
    assert tuple(inv_of("type2_333_w2").Z) == (2, 1, 1, 1)
    # E8: the highest root
    assert sorted(inv_of("E8").Z) == [2, 2, 3, 3, 4, 4, 5, 6]


def test_kx_examples():
    assert kx_dot(DualGraph.build([2]), 0) == 0
    assert kx_dot(DualGraph.build([1], smooth_point_mode=True), 0) == -1
    assert kx_dot(DualGraph.build([1], genera=[1]), 0) == 1


def test_canonical_examples():
    assert tuple(inv_of("A1").Delta) == (0,)
    assert tuple(inv_of("smooth").Delta) == (-1,)
    assert tuple(inv_of("remark210").Delta) == (Q(6, 5),) + (Q(3, 5),) * 5


@pytest.mark.parametrize("g_, w", [(g_, w) for g_ in range(4) for w in range(1, 5)])
def test_cone_formulas(g_, w):
    g = DualGraph.build([w], genera=[g_], smooth_point_mode=(g_, w) == (0, 1))
    inv = compute_invariants(g)
    assert inv.Delta[0] == Q(2 * (g_ - 1), w) + 1
    assert inv.delta_y == Q(4 * (g_ - 1) ** 2, w)


def test_arithmetic_genus_examples():
    assert inv_of("A1").pa_Z == 0
    assert inv_of("type1_elliptic").pa_Z == 1
    assert inv_of("cone_g2_w1").pa_Z == 2


def test_arithmetic_genus_rejects_inconsistent_input():
    g = DualGraph.build([2])
    with pytest.raises(ConsistencyError):
        arithmetic_genus(g, Cycle(g, (Q(1),)), Cycle(g, (Q(1, 2),)))


def test_delta_examples():
    assert inv_of("smooth").delta_y == 4
    assert inv_of("A1").delta_y == 2


@given(graphs())
def test_invariants_against_oracles(g):
    inv = compute_invariants(g)
    m = raw_matrix(g)
    assert list(inv.Delta) == canonical(g)
    assert list(inv.KxFj) == kx(g)
    assert inv.Z2 == pair(m, inv.Z, inv.Z)
    assert inv.Delta2 == pair(m, inv.Delta, inv.Delta)
    w = [z - a for z, a in zip(inv.Z, inv.Delta)]
    assert inv.delta_y == -pair(m, w, w)
    assert Q(pair(m, inv.Z, w), 2) + 1 == inv.pa_Z >= 0


@given(graphs(max_vertices=5))
def test_fundamental_cycle_is_least_antinef(g):
    z = tuple(int(x) for x in fundamental_cycle(g))
    if max(z) <= 5:
        assert z == fundamental_bruteforce(g, 5)


@given(graphs())
def test_genus_and_self_intersection_identities(g):
    inv = compute_invariants(g)
    z, a, k = inv.Z, inv.Delta, inv.KxFj
    w = z - a
    assert inv.delta_y == 2 - 2 * inv.pa_Z - sum((z[j] - a[j]) * k[j] for j in range(g.n))
    assert inv.delta_y == 2 - 2 * inv.pa_Z + sum(a[j] * w.dot_basis(j) for j in range(g.n))
    assert -inv.Delta2 == -inv.Z2 + inv.delta_y + 4 * (inv.pa_Z - 1)


@given(graphs(), st.data())
def test_canonical_cycle_is_unique(g, data):
    delta = canonical_cycle(g)
    pert = [Q(data.draw(st.integers(-4, 4)), data.draw(st.integers(1, 5))) for _ in range(g.n)]
    p = Cycle(g, tuple(pert))
    if p.is_zero():
        return
    other = delta + p
    assert any(other.dot_basis(j) != -kx_dot(g, j) for j in range(g.n))


@given(graphs())
def test_delta_zero_iff_elliptic_gorenstein(g):
    inv = compute_invariants(g)
    assert (inv.delta_y == 0) == (inv.Z == inv.Delta)
    assert kawachi_delta(inv.Z, inv.Delta) == inv.delta_y


@given(trees())
def test_canonical_coefficients_nonnegative_and_all_or_nothing(g):
    a = list(canonical_cycle(g))
    assert all(x >= 0 for x in a)
    if any(x > 0 for x in a):
        assert all(x > 0 for x in a)


def test_cycle_arithmetic():
    g = catalog.builtin("A3").graph
    r = Cycle.reduced(g)
    assert r + r == r * 2
    assert (r - r).is_zero()
    assert (-r).le(Cycle.zero(g)) and Cycle.zero(g).le(r)
    assert Cycle.basis(g, 1).dot_basis(1) == -2
    assert str(r * Q(1, 2)) == "1/2*F1 + 1/2*F2 + 1/2*F3"
    assert r.as_dict() == {"F1": "1", "F2": "1", "F3": "1"}
