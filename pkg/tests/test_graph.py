import pytest

from mbdgame import families as fam
from mbdgame.catalog import all_graphs
from mbdgame.graph import (
    Graph,
    MalformedCertificate,
    PairingCertificate,
    closed_neighborhood_hypergraph,
    domination_number,
    find_pairing_certificate,
    format_edge_list,
    has_perfect_matching,
    minimal_dominating_sets,
    parse_edge_list,
    verify_pairing_certificate,
)
from mbdgame.hypergraph import minimal_transversals, simplify, vertex_set
from oracles import brute_matchings


def labelled_sets(f, h):
    return [{f.labels[v] for v in e} for e in h.edge_sets()]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # not symmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop


def test_neighbourhoods_and_support_classes():
    # a support with two leaves (strong) and one with a single leaf (weak)
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    assert g.closed(0) == vertex_set([0, 1, 2, 3])
    assert g.leaves() == [1, 2, 5]
    assert g.strong_support_vertices() == [0]
    assert g.weak_support_vertices() == [4]
    assert g.min_degree == 1
    assert g.cut_vertices() == [0, 3, 4]


def test_induced_subgraph_relabels():
    g = fam.path(5).graph
    sub, old = g.induced(vertex_set([1, 2, 4]))
    assert old == [1, 2, 4]
    assert sub.edges() == [(0, 1)]


def test_closed_neighborhood_hypergraph_examples():
    p3 = fam.path(3)
    assert labelled_sets(p3, closed_neighborhood_hypergraph(p3.graph)) == [
        {"v1", "v2"},
        {"v2", "v3"},
        {"v1", "v2", "v3"},
    ]
    assert closed_neighborhood_hypergraph(fam.path(2).graph).edge_sets() == [{0, 1}]
    assert closed_neighborhood_hypergraph(fam.path(1).graph).edge_sets() == [{0}]


def test_minimal_dominating_set_examples():
    p3 = fam.path(3)
    assert labelled_sets(p3, minimal_dominating_sets(p3.graph)) == [{"v2"}, {"v1", "v3"}]
    assert minimal_dominating_sets(fam.complete(3).graph).edge_sets() == [{0}, {1}, {2}]
    p5 = fam.path(5)
    assert {p5.vertex("v2"), p5.vertex("v4")} in minimal_dominating_sets(p5.graph).edge_sets()
    assert domination_number(p5.graph) == 2


def test_minimal_dominating_sets_size_bound():
    with pytest.raises(ValueError):
        minimal_dominating_sets(fam.path(21).graph)


def test_transversals_of_h_g_are_dominating_sets_exhaustive():
    for g in all_graphs(6):
        hg, dg = closed_neighborhood_hypergraph(g), minimal_dominating_sets(g)
        assert minimal_transversals(hg) == dg
        assert minimal_transversals(dg) == simplify(hg)


def test_pairing_certificate_examples():
    p4 = fam.path(4)
    cert = PairingCertificate(0, 0, ((0, 1), (2, 3)))
    assert verify_pairing_certificate(p4.graph, cert)
    assert not verify_pairing_certificate(fam.path(3).graph, PairingCertificate(0, 0, ((0, 1),)))
    t = fam.tadpole(4, 1)
    v0, v1, v2 = (t.vertex(x) for x in ("v0", "v1", "v2"))
    assert verify_pairing_certificate(t.graph, PairingCertificate(1 << v0, 0, ((v1, v2),)))


def test_malformed_certificates_are_distinct_errors():
    g = fam.path(4).graph
    with pytest.raises(MalformedCertificate):
        verify_pairing_certificate(g, PairingCertificate(0, 0, ((0, 2),)))
    with pytest.raises(MalformedCertificate):
        verify_pairing_certificate(g, PairingCertificate(0, 0, ((0, 1), (1, 2))))
    with pytest.raises(MalformedCertificate):
        verify_pairing_certificate(g, PairingCertificate(1, 0, ((0, 1),)))


def test_find_pairing_certificate_examples():
    c4 = fam.cycle(4).graph
    cert = find_pairing_certificate(c4)
    assert cert is not None and cert.matched == c4.full
    assert verify_pairing_certificate(c4, cert)
    assert find_pairing_certificate(fam.path(3).graph) is None
    centre = find_pairing_certificate(fam.path(3).graph, dominator=0b010)
    assert centre is not None and centre.matching == ()


def test_pairing_finder_is_complete_on_small_graphs():
    # a certificate exists iff some matching avoiding X∪Y covers V∖N[X]
    for g in all_graphs(6):
        for x in (0, 1):
            dominator = x if g.n > 0 else 0
            need = g.full & ~g.closed_of(dominator)
            exists = False
            for m in brute_matchings(g.n, [e for e in g.edges() if not (1 << e[0] | 1 << e[1]) & dominator]):
                covered = vertex_set(v for pair in m for v in pair)
                if need & ~covered == 0:
                    exists = True
                    break
            cert = find_pairing_certificate(g, dominator=dominator)
            assert (cert is not None) == exists
            if cert is not None:
                assert verify_pairing_certificate(g, cert)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 9) for k in range(1, 6)])
def test_tadpole_perfect_matching_parity(n, k):
    g = fam.tadpole(n, k).graph
    assert has_perfect_matching(g) == ((n - k) % 2 == 0)
    assert (find_pairing_certificate(g) is not None) == ((n - k) % 2 == 0)


def test_edge_list_round_trip():
    g = fam.parse_family("tadpole:3:1").graph
    text = format_edge_list(g)
    assert text == "p 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\n"
    assert parse_edge_list("c comment\n" + text) == g


# -- families -------------------------------------------------------------------


def test_f1_is_p3():
    f1 = fam.F(1)
    assert f1.graph.n == 3
    z = f1.landmark("z")
    assert f1.graph.degree(z) == 2
    assert set(f1.landmarks["X"]) == set(f1.graph.leaves())


@pytest.mark.parametrize("k", range(1, 6))
def test_f_structure(k):
    f = fam.F(k)
    g = f.graph
    assert g.n == 2 ** (k + 1) - 1
    xs, ys = f.landmarks["X"], f.landmarks["Y"]
    assert len(xs) == 2**k and all(g.degree(x) == k for x in xs)
    assert len(ys) == 2**k - 2
    for i in range(1, k):
        assert sum(1 for y in ys if g.degree(y) == 2**i) == 2 ** (k - i)


@pytest.mark.parametrize("k", range(1, 5))
def test_f_prime_structure(k):
    f = fam.F_prime(k)
    g = f.graph
    extra = k - 1 if k >= 3 else 0
    assert g.n == 2 ** (k + 1) - 1 + extra
    assert g.min_degree == k
    if k >= 3:
        for v in f.landmarks["Y"] + f.landmarks["Y+"]:
            assert g.degree(v) > k
    assert len(f.landmarks.get("Y+", ())) == extra


def test_f_prime_small_cases_equal_f():
    for k in (1, 2):
        assert fam.F_prime(k).graph == fam.F(k).graph
    assert fam.F_prime(3).graph.n == 17


def test_f_prime_two_has_seven_vertices():
    assert fam.F_prime(2).graph.n == 7


@pytest.mark.parametrize("r,s,t", [(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 4)])
def test_g_rst_structure(r, s, t):
    g = fam.G_rst(r, s, t).graph
    assert g.min_degree == r - 1
    assert len(g.components()) == 3
    gc = fam.G_rst_connected(r, s, t)
    assert gc.graph.is_connected
    assert gc.graph.min_degree == r - 1
    assert len(gc.graph.edges()) == len(g.edges()) + 2


def test_tadpole_layout():
    t = fam.tadpole(5, 3)
    g = t.graph
    assert g.n == 8 and len(g.edges()) == 8
    assert g.has_edge(t.vertex("v0"), t.vertex("u3"))
    assert g.leaves() == [t.vertex("u1")]
    assert t.landmark("uk") == t.vertex("u3")


def test_subdivided_stars():
    s1 = fam.subdivided_star_1(3)
    assert s1.graph.n == 7
    assert s1.graph.weak_support_vertices() == list(s1.landmarks["supports"])
    s2 = fam.subdivided_star_2(4)
    assert s2.graph.n == 10
    w = s2.landmark("w")
    assert s2.graph.adj[w] == vertex_set(s2.landmarks["supports"])


def test_parameter_bounds():
    for bad in ("cycle:2", "tadpole:2:1", "tadpole:3:0", "path:0", "complete:0", "grst:2:3:2"):
        with pytest.raises(ValueError):
            fam.parse_family(bad)


def test_parse_family_union():
    f = fam.parse_family("path:3+cycle:4")
    assert f.graph.n == 7
    assert len(f.graph.components()) == 2
    assert f.labels[0] == "a.v1" and f.labels[3] == "b.v0"


def test_with_isolated_vertex():
    f = fam.with_isolated_vertex(fam.subdivided_star_1(2))
    assert f.graph.n == 6
    assert f.graph.degree(f.vertex("iso")) == 0


TARGETS = ["path:1", "path:6", "cycle:5", "complete:4", "tadpole:4:3", "star1:3", "star2:2",
           "f:3", "fprime:3", "grst:2:2:3", "grstc:2:3:3", "path:3+cycle:4"]


@pytest.mark.parametrize("target", TARGETS)
def test_dot_round_trip(target):
    f = fam.parse_family(target)
    back = fam.parse_dot(fam.format_dot(f))
    assert back.graph == f.graph and back.labels == f.labels and back.name == f.name


@pytest.mark.parametrize("target", TARGETS)
def test_edge_list_round_trip_for_generators(target):
    g = fam.parse_family(target).graph
    assert parse_edge_list(format_edge_list(g)) == g
