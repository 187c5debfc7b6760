"""Hypergraphs over small integer vertex ids, stored as bitmasks.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Edges of a
:class:`Hypergraph` are kept deduplicated and in canonical order (by size,
then by the sorted tuple of their vertices), so two hypergraphs describing the
same set system compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class CapacityError(ValueError):
    """A vertex id falls outside the supported bitmask width."""


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0 or v >= MAX_VERTICES:
            raise CapacityError(f"vertex id {v} outside 0..{MAX_VERTICES - 1}")
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def _edge_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), members(mask))


def canonical_edges(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=_edge_key))


@dataclass(frozen=True)
class Hypergraph:
    """A set system: ``universe`` is a vertex mask, ``edges`` a tuple of masks.

    Construction canonicalizes the edge list.  The empty edge (mask ``0``) is
    allowed; it shows up after shrinking away a whole edge.
    """

    universe: int
    edges: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.universe < 0 or self.universe >> MAX_VERTICES:
            raise CapacityError(f"universe exceeds {MAX_VERTICES} vertices")
        edges = canonical_edges(self.edges)
        for e in edges:
            if e & ~self.universe:
                raise ValueError(
                    f"edge {set(iter_bits(e))} not inside universe {set(iter_bits(self.universe))}"
                )
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_sets(
        cls, edges: Iterable[Iterable[int]], universe: Iterable[int] | int | None = None
    ) -> "Hypergraph":
        """Build from vertex collections.

        ``universe`` may be an iterable of ids, a vertex count ``n`` (meaning
        ``range(n)``), or ``None`` for the union of the edges.
        """
        masks = [vertex_set(e) for e in edges]
        if universe is None:
            umask = 0
            for m in masks:
                umask |= m
        elif isinstance(universe, int):
            umask = vertex_set(range(universe))
        else:
            umask = vertex_set(universe)
        return cls(umask, tuple(masks))

    @property
    def vertices(self) -> tuple[int, ...]:
        return members(self.universe)

    @property
    def has_empty_edge(self) -> bool:
        return 0 in self.edges

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(e)) for e in self.edges]

    def support(self) -> int:
        """Mask of vertices lying in at least one edge."""
        out = 0
        for e in self.edges:
            out |= e
        return out

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, members(e))) + "}" for e in self.edges)
        return f"Hypergraph(V={list(self.vertices)}, E=[{body}])"


def canonicalize(h: Hypergraph) -> Hypergraph:
    # construction already canonicalizes; rebuilding keeps the contract explicit
    return Hypergraph(h.universe, h.edges)


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family of masks, canonically ordered."""
    kept: list[int] = []
    for e in canonical_edges(masks):
        for f in kept:
            if f & e == f:
                break
        else:
            kept.append(e)
    return tuple(kept)


def simplify(h: Hypergraph) -> Hypergraph:
    """Drop every edge that contains another edge."""
    return Hypergraph(h.universe, minimal_masks(h.edges))


def _check_subset(h: Hypergraph, x: int) -> None:
    if x & ~h.universe:
        raise ValueError(f"vertices {set(iter_bits(x & ~h.universe))} not in the universe")


def delete(h: Hypergraph, x: int) -> Hypergraph:
    """Remove the vertices ``x`` together with every edge they meet."""
    _check_subset(h, x)
    return Hypergraph(h.universe & ~x, tuple(e for e in h.edges if not e & x))


def shrink(h: Hypergraph, x: int) -> Hypergraph:
    """Remove the vertices ``x`` from the universe and from every edge."""
    _check_subset(h, x)
    return Hypergraph(h.universe & ~x, tuple(e & ~x for e in h.edges))


def is_transversal(edges: Iterable[int], t: int) -> bool:
    return all(e & t for e in edges)


def minimal_transversals(h: Hypergraph) -> Hypergraph:
    """All inclusion-minimal transversals of ``h``, on the same universe.

    Branches on a smallest edge not yet met; inside that edge the i-th choice
    forbids the earlier vertices, so each candidate set is produced once.  A
    final minimality filter removes non-minimal candidates.
    """
    if h.has_empty_edge:
        raise ValueError("a hypergraph with an empty edge has no transversal")
    edges = minimal_masks(h.edges)
    found: list[int] = []

    def grow(chosen: int, forbidden: int) -> None:
        best = None
        for e in edges:
            if e & chosen:
                continue
            free = e & ~forbidden
            if not free:
                return
            if best is None or free.bit_count() < best.bit_count():
                best = free
        if best is None:
            found.append(chosen)
            return
        for v in iter_bits(best):
            bit = 1 << v
            grow(chosen | bit, forbidden)
            forbidden |= bit

    grow(0, 0)
    return Hypergraph(h.universe, minimal_masks(found))


def transversal_number(h: Hypergraph) -> int:
    return min(e.bit_count() for e in minimal_transversals(h).edges)


def components(h: Hypergraph) -> list[Hypergraph]:
    """Split the edges into classes connected through shared vertices.

    Each component's universe is the union of its edges; vertices in no edge
    are dropped.  An empty edge forms its own component.
    """
    groups: list[tuple[int, list[int]]] = []
    for e in h.edges:
        merged_mask, merged_edges = e, [e]
        rest = []
        for mask, es in groups:
            if mask & e:
                merged_mask |= mask
                merged_edges.extend(es)
            else:
                rest.append((mask, es))
        rest.append((merged_mask, merged_edges))
        groups = rest
    out = [Hypergraph(mask, tuple(es)) for mask, es in groups]
    out.sort(key=lambda c: (members(c.universe), c.edges))
    return out


def format_hypergraph(h: Hypergraph) -> str:
    """Text format: ``h <n_vertices> <n_edges>`` then one edge per line.

    ``n_vertices`` is one more than the largest universe id, so the universe
    read back is ``range(n_vertices)``.
    """
    n = h.universe.bit_length()
    lines = [f"h {n} {len(h.edges)}"]
    lines.extend(" ".join(map(str, members(e))) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    # one final newline terminates the last line; further blank lines are ∅ edges
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")
    while lines and lines[0].strip() == "":
        lines.pop(0)
    if not lines:
        raise ValueError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "h":
        raise ValueError(f"bad header line {lines[0]!r}; expected 'h <n_vertices> <n_edges>'")
    n, m = int(head[1]), int(head[2])
    if n < 0 or m < 0:
        raise ValueError("negative counts in header")
    body = lines[1:]
    if len(body) < m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    for extra in body[m:]:
        if extra.strip():
            raise ValueError(f"unexpected trailing content {extra!r}")
    edges = []
    for line in body[:m]:
        ids = [int(tok) for tok in line.split()]
        for v in ids:
            if v < 0 or v >= n:
                raise ValueError(f"vertex id {v} out of range for {n} vertices")
        edges.append(ids)
    return Hypergraph.from_sets(edges, universe=n)
