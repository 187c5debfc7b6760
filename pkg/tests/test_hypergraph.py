import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbdgame.catalog import simple_hypergraphs
from mbdgame.hypergraph import (
    CapacityError,
    Hypergraph,
    canonicalize,
    components,
    delete,
    format_hypergraph,
    is_transversal,
    minimal_transversals,
    parse_hypergraph,
    shrink,
    simplify,
    transversal_number,
    vertex_set,
)
from oracles import brute_minimal_transversals


def H(*edges, universe=None):
    return Hypergraph.from_sets(edges, universe)


def sets(h):
    return [set(e) for e in h.edge_sets()]


# random hypergraphs on up to 6 vertices, possibly with the empty edge
edge_masks = st.lists(st.integers(min_value=0, max_value=63), max_size=7)
nonempty_masks = st.lists(st.integers(min_value=1, max_value=63), max_size=7)


def test_simplify_examples():
    assert sets(simplify(H({1, 2}, {1, 2, 3}, {2, 3}))) == [{1, 2}, {2, 3}]
    assert simplify(H(universe=3)).edges == ()
    assert sets(simplify(H(set(), {1}))) == [set()]


def test_delete_examples():
    h = H({1, 2}, {2, 3})
    d = delete(h, vertex_set([1]))
    assert d.vertices == (2, 3)
    assert sets(d) == [{2, 3}]
    assert delete(H({1, 2}), 0) == H({1, 2})
    assert delete(h, vertex_set([2])).edges == ()


def test_shrink_examples():
    assert sets(shrink(H({1, 2}, {2, 3}), vertex_set([2]))) == [{1}, {3}]
    s = shrink(H({1}), vertex_set([1]))
    assert sets(s) == [set()] and s.has_empty_edge
    assert shrink(H({1, 2}), 0) == H({1, 2})


def test_operators_reject_foreign_vertices():
    with pytest.raises(ValueError):
        delete(H({1, 2}), vertex_set([5]))
    with pytest.raises(ValueError):
        shrink(H({1, 2}), vertex_set([0]))


def test_minimal_transversal_examples():
    assert sets(minimal_transversals(H({1, 2}, {2, 3}))) == [{2}, {1, 3}]
    assert sets(minimal_transversals(H({1, 2}, {2, 3}, {1, 3}))) == [{1, 2}, {1, 3}, {2, 3}]
    assert sets(minimal_transversals(H(universe=4))) == [set()]


def test_minimal_transversals_reject_empty_edge():
    with pytest.raises(ValueError):
        minimal_transversals(H(set(), {1}))


def test_canonicalize_examples():
    assert sets(canonicalize(H({2, 3}, {1, 2}, {1, 2}))) == [{1, 2}, {2, 3}]
    assert canonicalize(H(universe=2)).edges == ()
    assert sets(canonicalize(H({3}, {1, 2}))) == [{3}, {1, 2}]


def test_empty_edge_flag():
    assert not H({1}).has_empty_edge
    assert H(set(), {1}).has_empty_edge


def test_universe_must_contain_edges():
    with pytest.raises(ValueError):
        Hypergraph(vertex_set([0, 1]), (vertex_set([2]),))


def test_capacity():
    Hypergraph.from_sets([[63]])
    with pytest.raises(CapacityError):
        Hypergraph.from_sets([[64]])


def test_transversal_number_and_is_transversal():
    h = H({0, 1}, {1, 2}, {3})
    assert transversal_number(h) == 2
    assert is_transversal(h.edges, vertex_set([1, 3]))
    assert not is_transversal(h.edges, vertex_set([0, 3]))


def test_components():
    parts = components(H({0, 1}, {1, 2}, {4}, {5, 6}))
    assert [sets(p) for p in parts] == [[{0, 1}, {1, 2}], [{4}], [{5, 6}]]


def test_text_format_round_trip():
    h = H({0, 1}, {2}, set(), universe=4)
    text = format_hypergraph(h)
    assert text.splitlines()[0] == "h 4 3"
    assert parse_hypergraph(text) == h


def test_parser_rejects_out_of_range_ids():
    with pytest.raises(ValueError):
        parse_hypergraph("h 3 1\n0 3\n")
    with pytest.raises(ValueError):
        parse_hypergraph("h 3 2\n0 1\n")


@pytest.mark.parametrize("n", range(1, 5))
def test_transversals_match_brute_force_exhaustively(n):
    for h in simple_hypergraphs(n):
        assert list(minimal_transversals(h).edges) == brute_minimal_transversals(h.universe, h.edges)


def test_berge_duality_exhaustive_up_to_five_vertices():
    for n in range(1, 6):
        for h in simple_hypergraphs(n):
            if h.edges:
                assert minimal_transversals(minimal_transversals(h)) == simplify(h)


@given(nonempty_masks)
@settings(max_examples=200)
def test_transversals_ignore_simplification(masks):
    h = Hypergraph(63, tuple(masks))
    assert minimal_transversals(h) == minimal_transversals(simplify(h))


@given(nonempty_masks)
@settings(max_examples=200)
def test_berge_duality_random(masks):
    h = Hypergraph(63, tuple(masks))
    if h.edges:
        assert minimal_transversals(minimal_transversals(h)) == simplify(h)


@given(edge_masks)
def test_simplify_properties(masks):
    h = Hypergraph(63, tuple(masks))
    s = simplify(h)
    assert simplify(s) == s
    assert canonicalize(canonicalize(h)) == canonicalize(h)
    assert set(s.edges) <= set(h.edges)
    for a in s.edges:
        assert not any(b != a and b & a == b for b in s.edges)
    for e in h.edges:
        assert any(m & e == m for m in s.edges)


@given(edge_masks, st.integers(0, 63), st.integers(0, 63))
def test_delete_shrink_compose(masks, x, y):
    y &= ~x
    h = Hypergraph(63, tuple(masks))
    assert delete(delete(h, x), y) == delete(h, x | y)
    assert shrink(shrink(h, x), y) == shrink(h, x | y)


@given(edge_masks, st.integers(0, 63))
def test_delete_and_shrink_definitions(masks, x):
    h = Hypergraph(63, tuple(masks))
    d, s = delete(h, x), shrink(h, x)
    assert d.universe == s.universe == 63 & ~x
    assert set(d.edges) == {e for e in h.edges if not e & x}
    assert set(s.edges) == {e & ~x for e in h.edges}
