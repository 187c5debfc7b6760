"""Simple undirected graphs and the hypergraphs a domination game lives on."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .hypergraph import MAX_VERTICES, Hypergraph, iter_bits, vertex_set


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n > MAX_VERTICES:
            raise ValueError(f"graph order {self.n} exceeds {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if nb >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def closed_of(self, s: int) -> int:
        """N[S] as a mask."""
        out = s
        for v in iter_bits(s):
            out |= self.adj[v]
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("minimum degree of the empty graph is undefined")
        return min(nb.bit_count() for nb in self.adj)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) == 1]

    def leaf_count(self, v: int) -> int:
        return sum(1 for u in iter_bits(self.adj[v]) if self.degree(u) == 1)

    def support_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.leaf_count(v) >= 1]

    def weak_support_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.leaf_count(v) == 1]

    def strong_support_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.leaf_count(v) >= 2]

    def components(self, within: int | None = None) -> list[int]:
        """Vertex masks of the connected components of the subgraph on ``within``."""
        left = self.full if within is None else within
        out = []
        while left:
            seed = left & -left
            comp, frontier = seed, seed
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & left & ~comp
                comp |= frontier
            out.append(comp)
            left &= ~comp
        return out

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def cut_vertices(self) -> list[int]:
        """Vertices whose removal increases the number of components."""
        base = len(self.components())
        return [
            v for v in range(self.n) if len(self.components(self.full & ~(1 << v))) > base
        ]

    def induced(self, keep: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep``, relabelled to ``0..k-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = list(iter_bits(keep))
        new_of = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(vertex_set(new_of[u] for u in iter_bits(self.adj[v] & keep)))
        return Graph(len(old), tuple(adj)), old

    def remove(self, drop: int) -> "Graph":
        return self.induced(self.full & ~drop)[0]


def closed_neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """H_G: one edge N[v] per vertex, duplicates merged."""
    return Hypergraph(g.full, tuple(g.closed(v) for v in range(g.n)))


BRUTE_FORCE_LIMIT = 20


def minimal_dominating_sets(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> Hypergraph:
    """D_G by checking every vertex subset."""
    if g.n > limit:
        raise ValueError(f"graph order {g.n} exceeds brute-force limit {limit}")
    full = g.full
    closed = [g.closed(v) for v in range(g.n)]

    def dominates(s: int) -> bool:
        cov = 0
        for v in iter_bits(s):
            cov |= closed[v]
        return cov == full

    found = []
    for s in range(1 << g.n):
        if dominates(s) and not any(dominates(s & ~(1 << v)) for v in iter_bits(s)):
            found.append(s)
    return Hypergraph(full, tuple(found))


def domination_number(g: Graph) -> int:
    return min(s.bit_count() for s in minimal_dominating_sets(g).edges)


# -- pairing certificates -------------------------------------------------------


class MalformedCertificate(ValueError):
    """Certificate pairs are not a matching of unplayed graph edges."""


@dataclass(frozen=True)
class PairingCertificate:
    """Dominator's claimed set, Staller's claimed set and a matching of pairs."""

    dominator: int
    staller: int
    matching: tuple[tuple[int, int], ...]

    @property
    def matched(self) -> int:
        return vertex_set(v for pair in self.matching for v in pair)


def verify_pairing_certificate(g: Graph, cert: PairingCertificate) -> bool:
    """Check a matching certificate for a Dominator win.

    Raises :class:`MalformedCertificate` when the pairs are not disjoint edges
    avoiding played vertices; returns ``False`` when the pairs are fine but
    some vertex outside the matching is not dominated by Dominator's set.
    """
    x, y = cert.dominator, cert.staller
    if x & y:
        raise ValueError("Dominator and Staller sets overlap")
    if (x | y) & ~g.full:
        raise ValueError("played vertices outside the graph")
    played = x | y
    seen = 0
    for u, v in cert.matching:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise MalformedCertificate(f"pair {u}-{v} is not an edge")
        pair = (1 << u) | (1 << v)
        if pair & seen:
            raise MalformedCertificate(f"pair {u}-{v} reuses a matched vertex")
        if pair & played:
            raise MalformedCertificate(f"pair {u}-{v} uses a played vertex")
        seen |= pair
    uncovered = g.full & ~seen
    return uncovered & ~g.closed_of(x) == 0


def find_pairing_certificate(
    g: Graph, dominator: int = 0, staller: int = 0, limit: int = 64
) -> PairingCertificate | None:
    """Search for a matching in G-(X∪Y) covering every vertex outside N[X].

    Exhaustive: the lowest uncovered required vertex is matched to each free
    neighbour in turn.  The first certificate found (lowest ids first) is
    returned.
    """
    if dominator & staller:
        raise ValueError("Dominator and Staller sets overlap")
    if g.n > limit:
        raise ValueError(f"graph order {g.n} exceeds search limit {limit}")
    required = g.full & ~g.closed_of(dominator)
    if required & staller:
        return None
    free = g.full & ~(dominator | staller)

    def search(need: int, avail: int) -> list[tuple[int, int]] | None:
        if not need:
            return []
        r = (need & -need).bit_length() - 1
        rbit = 1 << r
        for w in iter_bits(g.adj[r] & avail):
            pair = rbit | (1 << w)
            rest = search(need & ~pair, avail & ~pair)
            if rest is not None:
                return [(min(r, w), max(r, w))] + rest
        return None

    pairs = search(required, free)
    if pairs is None:
        return None
    return PairingCertificate(dominator, staller, tuple(sorted(pairs)))


def has_perfect_matching(g: Graph) -> bool:
    """Brute-force perfect matching test (used as an independent check)."""

    def search(left: int) -> bool:
        if not left:
            return True
        r = (left & -left).bit_length() - 1
        return any(
            search(left & ~((1 << r) | (1 << w))) for w in iter_bits(g.adj[r] & left)
        )

    return search(g.full)


# -- text formats ---------------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 2:
                raise ValueError(f"line {lineno}: bad problem line {raw!r}")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None or len(parts) != 3:
                raise ValueError(f"line {lineno}: bad edge line {raw!r}")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: unknown record {raw!r}")
    if n is None:
        raise ValueError("missing 'p <n>' line")
    return Graph.from_edges(n, edges)
