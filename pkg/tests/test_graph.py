import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singan import catalog
from singan.graph import (
    DualGraph,
    GraphSyntaxError,
    GraphValidationError,
    check_negative_definite,
    intersection_matrix,
    parse_graph,
    parse_graph_file,
    serialize_graph,
)
from singan.linalg import determinant, leading_minors, solve

from oracles import minors_sympy, neg_def_sympy, quadratic_form_counterexample, raw_matrix
from strategies import graphs


def test_single_vertex():
    g = parse_graph("vertex a w=2 g=0\n")
    assert g.n == 1 and intersection_matrix(g) == ((-2,),)


def test_genus_defaults_to_zero_and_comments():
    g = parse_graph("# A2\nvertex a w=2   # first\nvertex b w=2\nedge a b\n")
    assert g.matrix == ((-2, 1), (1, -2))


def test_type2_star_file():
    text = "vertex c w=3 g=0\nvertex x w=3 g=0\nvertex y w=3 g=0\nvertex z w=3 g=0\n"
    text += "edge c x\nedge c y\nedge c z\n"
    g = parse_graph(text)
    assert g.n == 4 and g.degree(0) == 3


def test_matrix_examples():
    assert DualGraph.build([5]).matrix == ((-5,),)
    # two (-2)-curves meeting twice is semidefinite, so build the raw matrix
    assert not check_negative_definite([[-2, 2], [2, -2]])
    assert check_negative_definite([[-2]])
    g = DualGraph.build([3, 2], [(0, 1, 2)])
    assert g.matrix == ((-3, 2), (2, -2))


@pytest.mark.parametrize(
    "text, kind",
    [
        ("vertex a w=0 g=0\n", "definiteness"),
        ("vertex a w=1 g=0\n", "minimality"),
        ("vertex a w=2\nvertex a w=3\n", "duplicate_vertex"),
        ("vertex a w=2\nvertex b w=2\n", "connectedness"),
        ("vertex a w=2\nvertex b w=2\nedge a b m=2\n", "definiteness"),
        ("smoothpoint\nvertex a w=2\n", "smoothpoint"),
        ("smoothpoint\nvertex a w=1\nvertex b w=2\nedge a b\n", "smoothpoint"),
        ("", "empty"),
    ],
)
def test_validation_errors(text, kind):
    with pytest.raises(GraphValidationError) as exc:
        parse_graph(text)
    assert exc.value.kind == kind


def test_minimality_names_vertex():
    with pytest.raises(GraphValidationError) as exc:
        parse_graph("vertex a w=2\nvertex bad w=1\nedge a bad\n")
    assert exc.value.vertex == "bad"


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("vertex a w=2\nedge a zz\n", 2, 8),
        ("vertex a w=x\n", 1, 12),
        ("vertex a w=2\nbogus\n", 2, 1),
        ("vertex a w=2\nvertex b w=2\nedge a b\nedge b a\n", 4, 1),
        ("vertex a w=2\nedge a a\n", 2, 8),
        ("vertex a w=2\ncurve C b=3/2 meets a\n", 2, 9),
        ("vertex a w=2\ncurve C b=1/2 meets q\n", 2, 21),
    ],
)
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(GraphSyntaxError) as exc:
        parse_graph_file(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_curve_lines():
    gf = parse_graph_file("vertex a w=2\nvertex b w=2\nedge a b\ncurve C b=1/2 meets a*2 b\n")
    (c,) = gf.curves
    assert c.b == 0.5 and c.meets == ((0, 2), (1, 1))


def test_smoothpoint():
    g = parse_graph("smoothpoint\nvertex E w=1 g=0\n")
    assert g.smooth_point_mode and g.matrix == ((-1,),)


@given(graphs())
def test_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


def test_round_trip_catalog_with_curves():
    text = serialize_graph(catalog.builtin("A3").graph) + "curve C b=2/7 meets F1*2 F3\n"
    gf = parse_graph_file(text)
    assert parse_graph_file(serialize_graph(gf.graph, gf.curves)) == gf


def _chain(n):
    return [(i, i + 1) for i in range(n - 1)]


def _star(arms):
    edges, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return nxt, edges


def _raw(n, edges):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -2
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    return m


ADE = [(n, _chain(n)) for n in range(1, 9)]
ADE += [(n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]) for n in range(4, 9)]
ADE += [_star(a) for a in ((1, 2, 2), (1, 2, 3), (1, 2, 4))]

AFFINE = [_star(a) for a in ((1, 1, 1, 1), (2, 2, 2), (1, 3, 3), (1, 2, 5))]
# extended D_n: a chain with forks at both ends
AFFINE += [
    (n + 1, [(i, i + 1) for i in range(n - 2)] + [(1, n - 1), (n - 3, n)])
    for n in range(5, 9)
]
AFFINE += [(n, [(i, (i + 1) % n) for i in range(n)]) for n in range(3, 7)]


@pytest.mark.parametrize("n, edges", ADE)
def test_dynkin_negative_definite(n, edges):
    assert check_negative_definite(_raw(n, edges))
    DualGraph.build([2] * n, edges)


@pytest.mark.parametrize("n, edges", AFFINE)
def test_affine_dynkin_semidefinite(n, edges):
    m = _raw(n, edges)
    assert not check_negative_definite(m)
    assert determinant(m) == 0
    with pytest.raises(GraphValidationError):
        DualGraph.build([2] * n, edges)


@pytest.mark.parametrize("name", catalog.list_names())
def test_catalog_matrices_against_quadratic_form(name):
    m = raw_matrix(catalog.builtin(name).graph)
    assert check_negative_definite(m)
    if len(m) <= 8:
        assert quadratic_form_counterexample(m, 3) is None
    else:
        assert quadratic_form_counterexample(m, 1) is None


def test_quadratic_form_oracle_catches_semidefinite():
    assert quadratic_form_counterexample(_raw(*_star((1, 1, 1, 1))), 3) is not None


def _random_matrix(rng):
    n = rng.randint(1, 9)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -rng.randint(1, 4)
    for i in range(1, n):
        p = rng.randrange(i)
        m[i][p] = m[p][i] = rng.randint(1, 2)
    return m


def test_sylvester_matches_sympy_on_random_trees():
    rng = random.Random(7)
    seen = set()
    for _ in range(300):
        m = _random_matrix(rng)
        ours = check_negative_definite(m)
        seen.add(ours)
        assert ours == neg_def_sympy(m)
    assert seen == {True, False}


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_leading_minors_match_sympy(m):
    ours = leading_minors(m)
    ref = minors_sympy(m)
    assert ours == ref[: len(ours)]
    if len(ours) < len(ref):
        assert ours[-1] == 0
    assert determinant(m) == ref[-1]


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.integers(-5, 5), min_size=n, max_size=n),
    )
))
def test_solve_residual(args):
    m, rhs = args
    if minors_sympy(m)[-1] == 0:
        with pytest.raises(ZeroDivisionError):
            solve(m, rhs)
        return
    x = solve(m, rhs)
    for row, b in zip(m, rhs):
        assert sum(a * xi for a, xi in zip(row, x)) == b
