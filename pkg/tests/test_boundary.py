from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singan import catalog
from singan.boundary import (
    BoundaryCurve,
    BoundaryError,
    BoundarySpec,
    MuUndefinedError,
    exceptional_part,
    mu,
    triple_classify,
)
from singan.classify import analyze
from singan.cycles import compute_invariants
from singan.graph import DualGraph

from oracles import raw_matrix
from strategies import boundaries, trees


def spec(*curves):
    return BoundarySpec(tuple(BoundaryCurve(f"C{i}", Q(b), inc) for i, (b, inc) in enumerate(curves)))


A1 = DualGraph.build([2])
SMOOTH = DualGraph.build([1], smooth_point_mode=True)


def test_zero_boundary():
    g = catalog.builtin("D5").graph
    t = triple_classify(g, compute_invariants(g), BoundarySpec())
    assert t.b_prime.is_zero() and t.mu == 0 and t.is_lt_triple


def test_a1_half_transversal():
    t = triple_classify(A1, compute_invariants(A1), spec(("1/2", ((0, 1),))))
    assert t.b_prime[0] == Q(1, 4) and t.is_lt_triple and t.mu == Q(1, 4)


def test_a1_reduced_tangent_curve_is_lc_not_lt():
    t = triple_classify(A1, compute_invariants(A1), spec((1, ((0, 2),))))
    assert t.b_prime[0] == 1 and t.is_lc_triple and not t.is_lt_triple


@pytest.mark.parametrize("m", [1, 2, 3])
def test_smooth_point_mu_is_half_multiplicity(m):
    s = spec((1, ((0, m),)))
    t = triple_classify(SMOOTH, compute_invariants(SMOOTH), s)
    assert t.b_prime[0] == m
    assert t.mu == Q(m, 2) == s.mult_y() / 2


def test_curve_must_pass_through_point():
    with pytest.raises(BoundaryError):
        spec(("1/2", ()))
    with pytest.raises(BoundaryError):
        spec(("3/2", ((0, 1),)))
    spec((0, ()))


def test_adjoint_check():
    spec(("1/2", ((0, 1),))).check_adjoint()
    with pytest.raises(BoundaryError):
        spec((1, ((0, 1),))).check_adjoint()


def test_mu_undefined_off_log_terminal():
    g = catalog.builtin("remark210").graph
    inv = compute_invariants(g)
    s = spec(("1/3", ((0, 1),)))
    assert triple_classify(g, inv, s).mu is None
    with pytest.raises(MuUndefinedError):
        mu(g, inv, exceptional_part(g, s))


lt_trees = trees(genus=False).filter(lambda g: analyze(g).is_log_terminal)


@given(lt_trees.flatmap(lambda g: st.tuples(st.just(g), boundaries(g))))
def test_pullback_kills_exceptional_curves(args):
    g, s = args
    bp = exceptional_part(g, s)
    m = raw_matrix(g)
    for j in range(g.n):
        strict = sum(Q(c.b) * k for c in s.curves for i, k in c.incidence if i == j)
        assert sum(bp[i] * m[i][j] for i in range(g.n)) + strict == 0
    assert all(x >= 0 for x in bp)


@given(lt_trees.flatmap(lambda g: st.tuples(st.just(g), boundaries(g))))
def test_mu_is_largest_multiple(args):
    g, s = args
    inv = compute_invariants(g)
    t = triple_classify(g, inv, s)
    w = inv.Z - inv.Delta
    assert all(t.b_prime[j] >= t.mu * w[j] for j in range(g.n))
    assert any(t.b_prime[j] == t.mu * w[j] for j in range(g.n))


@given(
    lt_trees.flatmap(lambda g: st.tuples(st.just(g), boundaries(g))),
    st.fractions(0, 1, max_denominator=12),
)
def test_scaling(args, t):
    g, s = args
    inv = compute_invariants(g)
    base = triple_classify(g, inv, s)
    scaled = triple_classify(g, inv, s.scaled(t))
    assert scaled.b_prime == base.b_prime * t
    assert scaled.mu == base.mu * t


@given(trees().flatmap(lambda g: st.tuples(st.just(g), boundaries(g))))
def test_triple_flags(args):
    g, s = args
    inv = compute_invariants(g)
    t = triple_classify(g, inv, s)
    tot = [a + b for a, b in zip(inv.Delta, t.b_prime)]
    assert t.is_lt_triple == all(x < 1 for x in tot)
    assert t.is_lc_triple == all(x <= 1 for x in tot)
    lt = all(a < 1 for a in inv.Delta)
    assert (t.mu is not None) == lt
    if t.is_lt_triple:
        assert lt
    if any(c.b > 0 for c in s.curves):
        assert all(x > 0 for x in t.b_prime)
        if t.is_lc_triple:
            assert lt
    if t.is_lt_triple:
        assert 0 <= t.mu < 1
