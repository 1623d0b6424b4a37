import json

import pytest
from hypothesis import given

from sepgraph.core import (
    InvalidGraph, InvalidPresentation, ParseError, Presentation, SeparatedGraph, alpha, beta,
    build_one_relator_graph, derive_quantities, format_element, normalize, one_vertex_graph,
    parse_element, parse_relation,
)
from strategies import presentations


def test_presentation_invariants():
    with pytest.raises(InvalidPresentation):
        Presentation((0, 0), (1, 1))
    with pytest.raises(InvalidPresentation):
        Presentation((1, 0), (1, 0))
    with pytest.raises(InvalidPresentation):
        Presentation((1,), (1, 2))
    with pytest.raises(InvalidPresentation):
        Presentation((-1, 2), (1, 1))


def test_single_generator_graph():
    g = build_one_relator_graph(Presentation((2,), (5,)))
    assert g.vertices == ("v", "w1")
    assert len(g.edges) == 7
    X, Y = g.partition["v"]
    assert len(X) == 5 and len(Y) == 2
    assert g.partition["w1"] == ()


def test_symmetric_two_generator_graph():
    g = build_one_relator_graph(Presentation((1, 1), (1, 1)))
    assert g.vertices == ("v", "w1", "w2")
    assert {e.label for e in g.edges} == {alpha(1, 1), alpha(2, 1), beta(1, 1), beta(2, 1)}
    assert g.edge(beta(2, 1)).range == "w2"


def test_three_generator_graph():
    g = build_one_relator_graph(Presentation((1, 1, 0), (1, 0, 1)))
    assert len(g.vertices) == 4
    ranges = sorted(e.range for e in g.edges)
    assert ranges == ["w1", "w1", "w2", "w3"]


@given(presentations())
def test_builder_invariants(p):
    g = build_one_relator_graph(p)
    g.validate()
    q = derive_quantities(p)
    X, Y = g.partition["v"]
    assert len(X) == q.N and len(Y) == q.M
    for i in range(1, p.n + 1):
        assert sum(1 for e in g.edges if e.range == f"w{i}") == p.r[i - 1] + p.s[i - 1]
    assert all(e.source == "v" for e in g.edges)


def test_derived_quantities():
    q = derive_quantities(Presentation((3, 2), (2, 4)))
    assert (q.M, q.N) == (5, 6) and q.I1 == {1, 2} and q.I2 == {1, 2}
    q = derive_quantities(Presentation((2, 0), (0, 3)))
    assert (q.M, q.N, q.I1, q.I2, q.n1, q.n2) == (2, 3, {2}, {1}, 1, 1)
    assert not q.I1 & q.I2
    q = derive_quantities(Presentation((1, 1), (1, 1)))
    assert q.M == q.N == 2


def test_normalize():
    p, sw = normalize(Presentation((2, 4), (3, 2)))
    assert sw and p.r == (3, 2) and p.s == (2, 4)
    p, sw = normalize(Presentation((3, 2), (2, 4)))
    assert not sw and p.r == (3, 2)
    p, sw = normalize(Presentation((1, 1), (1, 1)))
    assert not sw


@given(presentations())
def test_normalize_orders_sides(p):
    q, _ = normalize(p)
    d = derive_quantities(q)
    assert d.M <= d.N
    assert d.I1 | d.I2 == set(range(1, p.n + 1))


def test_parse_relation_grammar():
    p = parse_relation("3a+2b=2a+4b")
    assert (p.r, p.s) == ((3, 2), (2, 4))
    assert parse_relation("a+b=a+b").r == (1, 1)
    p = parse_relation("a = 2a")
    assert (p.r, p.s) == ((1,), (2,))
    p = parse_relation("a+b=a+c")
    assert (p.r, p.s) == ((1, 1, 0), (1, 0, 1))
    p = parse_relation('{"r": [2, 0], "s": [0, 3]}')
    assert (p.r, p.s) == ((2, 0), (0, 3))


@pytest.mark.parametrize("bad", ["3a+2b", "3a+=2b", "a=b=c", "2=a", "a+b=0a"])
def test_parse_errors_carry_position(bad):
    with pytest.raises((ParseError, InvalidPresentation)) as info:
        parse_relation(bad)
    if isinstance(info.value, ParseError):
        assert 0 <= info.value.position <= len(bad)


def test_presentation_json_roundtrip():
    p = parse_relation("3a+2b=2a+4b")
    assert Presentation.from_json(json.dumps(p.to_json())) == p
    assert parse_relation(p.relation_string()) == p


def test_elements():
    p = parse_relation("3a+2b=2a+4b")
    assert parse_element("2b", p) == (0, 2)
    assert parse_element("a+3b", p) == (1, 3)
    assert parse_element("0", p) == (0, 0)
    assert parse_element("[1,0]", p) == (1, 0)
    assert format_element((1, 3), p) == "a+3b"
    with pytest.raises(ValueError):
        parse_element("c", p)


def test_general_separated_graph_validation():
    g = one_vertex_graph(2, 3)
    assert len(g.partition[g.vertices[0]]) == 2
    with pytest.raises(InvalidGraph):
        SeparatedGraph(("v", "w"), (("e", "v", "w"),), {"w": [{"e"}]})
