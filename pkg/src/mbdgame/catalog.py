"""Small-graph catalogs, generated in-process, plus seeded random samples."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .graph import Graph
from .hypergraph import Hypergraph, iter_bits, minimal_masks

# number of graphs up to isomorphism on n vertices (OEIS A000088, A001349)
KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _invariant_classes(g: Graph) -> list[list[int]]:
    deg = [g.degree(v) for v in range(g.n)]
    inv = {v: (deg[v], tuple(sorted(deg[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)}
    keys = sorted(set(inv.values()))
    return [[v for v in range(g.n) if inv[v] == key] for key in keys]


def canonical_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(code, order): the largest adjacency code over invariant-respecting orders.

    ``order[i]`` is the old vertex placed at position ``i``.
    """
    best_code, best_order = -1, ()
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    for blocks in product(*(permutations(c) for c in _invariant_classes(g))):
        order = tuple(v for block in blocks for v in block)
        code = 0
        for i, j in pairs:
            code = code << 1 | (g.adj[order[i]] >> order[j] & 1)
        if code > best_code:
            best_code, best_order = code, order
    return best_code, best_order


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_code(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical labelling.

    Each graph on n-1 vertices is extended by a new vertex joined to every
    possible neighbour subset; duplicates are removed by canonical code.
    """
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, Graph] = {}
    for base in graphs_of_order(n - 1):
        for nbrs in range(1 << (n - 1)):
            edges = base.edges() + [(v, n - 1) for v in iter_bits(nbrs)]
            g = Graph.from_edges(n, edges)
            code, _ = canonical_code(g)
            if code not in seen:
                seen[code] = canonical_form(g)
    return tuple(seen[c] for c in sorted(seen))


def connected_graphs(max_order: int, min_order: int = 1) -> list[Graph]:
    return [g for n in range(min_order, max_order + 1) for g in graphs_of_order(n) if g.is_connected]


def all_graphs(max_order: int, min_order: int = 1) -> list[Graph]:
    return [g for n in range(min_order, max_order + 1) for g in graphs_of_order(n)]


def self_test(max_order: int = 6) -> None:
    for n in range(1, max_order + 1):
        total = len(graphs_of_order(n))
        conn = sum(1 for g in graphs_of_order(n) if g.is_connected)
        if total != KNOWN_GRAPH_COUNTS[n] or conn != KNOWN_CONNECTED_COUNTS[n]:
            raise AssertionError(
                f"catalog count mismatch at n={n}: {total}/{conn}, "
                f"expected {KNOWN_GRAPH_COUNTS[n]}/{KNOWN_CONNECTED_COUNTS[n]}"
            )


def simple_hypergraphs(n: int) -> list[Hypergraph]:
    """Every antichain of non-empty subsets of ``range(n)`` (labelled), including the empty family."""
    subsets = list(range(1, 1 << n))
    out = [Hypergraph((1 << n) - 1, ())]

    def extend(start: int, chosen: list[int]) -> None:
        for i in range(start, len(subsets)):
            s = subsets[i]
            if any(c & s == c or c & s == s for c in chosen):
                continue
            chosen.append(s)
            out.append(Hypergraph((1 << n) - 1, tuple(chosen)))
            extend(i + 1, chosen)
            chosen.pop()

    extend(0, [])
    return out


def random_simple_hypergraph(rng: random.Random, n: int, max_edges: int = 6) -> Hypergraph:
    """Random antichain: draw 1..max_edges non-empty subsets, keep the minimal ones."""
    m = rng.randint(1, max_edges)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(m)]
    return Hypergraph((1 << n) - 1, minimal_masks(masks))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """G(n, p) resampled until connected.  ``rng`` is a seeded ``random.Random``
    (Mersenne Twister), so samples reproduce across platforms."""
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.is_connected:
            return g
