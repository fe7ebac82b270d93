from fractions import Fraction as Q

import pytest

from singan import catalog
from singan.classify import analyze
from singan.graph import parse_graph, serialize_graph


def _actual(r, key):
    inv = r.invariants
    table = {
        "Z": tuple(inv.Z), "Delta": tuple(inv.Delta), "delta_y": inv.delta_y, "pa_Z": inv.pa_Z,
    }
    return table[key] if key in table else getattr(r, key)


CLEAN = [n for n in catalog.list_names() if not catalog.builtin(n).misprint]
MISPRINTED = [n for n in catalog.list_names() if catalog.builtin(n).misprint]


@pytest.mark.parametrize("name", CLEAN)
def test_expected_values_match(name):
    e = catalog.builtin(name)
    r = analyze(e.graph)
    for key, val in e.expected.items():
        assert _actual(r, key) == val, key


@pytest.mark.parametrize("name", MISPRINTED)
def test_misprinted_values_disagree(name):
    e = catalog.builtin(name)
    r = analyze(e.graph)
    assert any(_actual(r, k) != v for k, v in e.expected.items())
    assert r.is_log_terminal


@pytest.mark.parametrize("name", catalog.list_names())
def test_graph_round_trips(name):
    g = catalog.builtin(name).graph
    assert parse_graph(serialize_graph(g)) == g


def test_examples():
    assert catalog.builtin("type2_333_w3").expected["delta_y"] == 1
    e = catalog.builtin("type3_w4").expected
    assert e["Z"] == (1,) * 5 and e["delta_y"] == 2
    assert catalog.builtin("remark210").expected["delta_y"] == Q(13, 5)


def test_parametrized_names():
    assert catalog.builtin("A7").graph.n == 7
    assert catalog.builtin("type1_cycle_5").graph.n == 5
    assert catalog.builtin("cone_g4_w6").expected["delta_y"] == 6
    assert catalog.builtin("type1_elliptic_w1").name == "type1_elliptic_w1"
    assert catalog.builtin("exercise_1_10").derived


@pytest.mark.parametrize("bad", ["nope", "D3", "type1_cycle_1", "type2_333_w1", "type3_w2", "E9"])
def test_unknown(bad):
    with pytest.raises(catalog.UnknownEntryError):
        catalog.builtin(bad)


def test_listing_has_required_entries():
    names = set(catalog.list_names())
    need = {"smooth", "A1", "type1_elliptic", "type3_w3", "type3_w4", "exercise_1_10", "remark210"}
    need |= {f"type2_{abc}_w{w}" for abc in ("333", "224", "236") for w in (2, 3)}
    assert need <= names
