"""Labelled graph constructions: paths, cycles, tadpoles, subdivided stars,
the recursive F_k / F'_k graphs and the realization graphs built from them.

Every generator returns a :class:`LabeledFamily` whose ``labels`` give each
vertex a short display name (``v1``, ``u3``, ``z2`` ...) and whose
``landmarks`` name the vertex groups the construction talks about.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class LabeledFamily:
    name: str
    graph: Graph
    labels: tuple[str, ...]
    landmarks: dict[str, tuple[int, ...]] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate vertex labels in {self.name}")

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def landmark(self, name: str) -> int:
        """The single vertex of a one-vertex landmark."""
        (v,) = self.landmarks[name]
        return v


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> LabeledFamily:
    """P_n with vertices v1..vn (ids 0..n-1)."""
    _need(n >= 1, "path needs n >= 1")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    labels = tuple(f"v{i + 1}" for i in range(n))
    return LabeledFamily(f"path:{n}", g, labels, {"v": tuple(range(n)), "ends": (0, n - 1)})


def cycle(n: int) -> LabeledFamily:
    """C_n with vertices v0..v{n-1}."""
    _need(n >= 3, "cycle needs n >= 3")
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return LabeledFamily(f"cycle:{n}", g, tuple(f"v{i}" for i in range(n)), {"v": tuple(range(n))})


def complete(r: int) -> LabeledFamily:
    _need(r >= 1, "complete graph needs r >= 1")
    g = Graph.from_edges(r, [(i, j) for i in range(r) for j in range(i + 1, r)])
    return LabeledFamily(f"complete:{r}", g, tuple(f"k{i}" for i in range(r)), {"K": tuple(range(r))})


def tadpole(n: int, k: int) -> LabeledFamily:
    """T(n,k): cycle v0..v{n-1}, path u1..uk, and the edge v0-uk.

    Ids: cycle vertex v_i is ``i``; tail vertex u_j is ``n + j - 1``.
    """
    _need(n >= 3 and k >= 1, "tadpole needs n >= 3 and k >= 1")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + j, n + j + 1) for j in range(k - 1)]
    edges.append((0, n + k - 1))
    g = Graph.from_edges(n + k, edges)
    labels = tuple(f"v{i}" for i in range(n)) + tuple(f"u{j}" for j in range(1, k + 1))
    return LabeledFamily(
        f"tadpole:{n}:{k}",
        g,
        labels,
        {"cycle": tuple(range(n)), "tail": tuple(range(n, n + k)), "v0": (0,), "uk": (n + k - 1,)},
    )


def subdivided_star_1(k: int) -> LabeledFamily:
    """S_k^1: a star with k edges, each subdivided once (2k+1 vertices).

    Ids: centre 0, supports 1..k, leaf j attached to support j at id k+j.
    """
    _need(k >= 1, "subdivided star needs k >= 1")
    edges = [(0, j) for j in range(1, k + 1)] + [(j, k + j) for j in range(1, k + 1)]
    g = Graph.from_edges(2 * k + 1, edges)
    labels = ("c",) + tuple(f"s{j}" for j in range(1, k + 1)) + tuple(f"l{j}" for j in range(1, k + 1))
    return LabeledFamily(
        f"star1:{k}",
        g,
        labels,
        {"center": (0,), "supports": tuple(range(1, k + 1)), "leaves": tuple(range(k + 1, 2 * k + 1))},
    )


def subdivided_star_2(k: int) -> LabeledFamily:
    """S_k^2: S_k^1 plus one vertex ``w`` adjacent to every support vertex."""
    base = subdivided_star_1(k)
    w = 2 * k + 1
    g = Graph.from_edges(w + 1, base.graph.edges() + [(j, w) for j in range(1, k + 1)])
    return LabeledFamily(f"star2:{k}", g, base.labels + ("w",), {**base.landmarks, "w": (w,)})


def _f_edges(k: int, offset: int, counter: dict[int, int], centers: dict[int, list[int]],
             xs: list[int], labels: dict[int, str], edges: list[tuple[int, int]]) -> tuple[int, list[int]]:
    """Lay out F_k from id ``offset``: copy 1, copy 2, then z_k.

    Returns (next free id, X_k of this copy).
    """
    if k == 1:
        a, b, z = offset, offset + 1, offset + 2
        edges += [(a, z), (b, z)]
        for x in (a, b):
            labels[x] = f"x{len(xs)}"
            xs.append(x)
        level_x = [a, b]
        nxt = offset + 3
    else:
        nxt, x1 = _f_edges(k - 1, offset, counter, centers, xs, labels, edges)
        nxt, x2 = _f_edges(k - 1, nxt, counter, centers, xs, labels, edges)
        z = nxt
        level_x = x1 + x2
        edges += [(x, z) for x in level_x]
        nxt += 1
    counter[k] = counter.get(k, 0) + 1
    centers.setdefault(k, []).append(z)
    labels[z] = f"z{k}.{counter[k]}"
    return nxt, level_x


def _build_f(k: int, prime: bool) -> LabeledFamily:
    _need(k >= 1, "F_k needs k >= 1")
    centers: dict[int, list[int]] = {}
    xs: list[int] = []
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    n, top_x = _f_edges(k, 0, {}, centers, xs, labels, edges)
    z = centers[k][0]
    labels[z] = f"z{k}"
    ys = sorted(v for i in range(1, k) for v in centers[i])
    yplus: list[int] = []
    if prime and k >= 3:
        yplus = list(range(n, n + k - 1))
        for i, a in enumerate(yplus):
            labels[a] = f"y{i + 1}"
            edges += [(a, b) for b in yplus[i + 1:]]
            edges += [(a, y) for y in ys]
        n += k - 1
    g = Graph.from_edges(n, edges)
    landmarks = {"z": (z,), "X": tuple(sorted(top_x)), "Y": tuple(ys), "Y+": tuple(yplus)}
    for i, cs in centers.items():
        landmarks[f"z{i}"] = tuple(cs)
    name = f"fprime:{k}" if prime else f"f:{k}"
    return LabeledFamily(name, g, tuple(labels[v] for v in range(n)), landmarks)


def F(k: int) -> LabeledFamily:
    """F_k: two copies of F_{k-1} plus z_k joined to both copies' X sets."""
    return _build_f(k, prime=False)


def F_prime(k: int) -> LabeledFamily:
    """F'_k: F_k, plus (for k >= 3) a clique Y+ of order k-1 joined to Y_k."""
    return _build_f(k, prime=True)


def disjoint_union(*parts: LabeledFamily, prefixes: tuple[str, ...] | None = None) -> LabeledFamily:
    """Disjoint union; labels and landmarks get a per-part prefix ``a.``, ``b.`` ..."""
    if prefixes is None:
        prefixes = tuple(chr(ord("a") + i) for i in range(len(parts)))
    if len(prefixes) != len(parts):
        raise ValueError("one prefix per part")
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    landmarks: dict[str, tuple[int, ...]] = {}
    offset = 0
    for pre, part in zip(prefixes, parts):
        edges += [(u + offset, v + offset) for u, v in part.graph.edges()]
        labels += [f"{pre}.{lab}" for lab in part.labels]
        for key, vs in part.landmarks.items():
            landmarks[f"{pre}.{key}"] = tuple(v + offset for v in vs)
        landmarks[pre] = tuple(range(offset, offset + part.graph.n))
        offset += part.graph.n
    name = "+".join(p.name for p in parts)
    return LabeledFamily(name, Graph.from_edges(offset, edges), tuple(labels), landmarks)


def with_isolated_vertex(part: LabeledFamily) -> LabeledFamily:
    n = part.graph.n
    g = Graph.from_edges(n + 1, part.graph.edges())
    return LabeledFamily(part.name + "+iso", g, part.labels + ("iso",), {**part.landmarks, "iso": (n,)})


def _check_rst(r: int, s: int, t: int) -> None:
    _need(2 <= r <= s <= t, "need 2 <= r <= s <= t")


def G_rst(r: int, s: int, t: int) -> LabeledFamily:
    """K_r + F'_{s-1} + F'_{t-1} (disjoint union)."""
    _check_rst(r, s, t)
    u = disjoint_union(complete(r), F_prime(s - 1), F_prime(t - 1), prefixes=("K", "S", "T"))
    return LabeledFamily(f"grst:{r}:{s}:{t}", u.graph, u.labels, u.landmarks)


def G_rst_connected(r: int, s: int, t: int) -> LabeledFamily:
    """G_rst plus edges from one K_r vertex to the two F' centres."""
    base = G_rst(r, s, t)
    v = base.landmarks["K"][0]
    extra = [(v, base.landmark("S.z")), (v, base.landmark("T.z"))]
    g = Graph.from_edges(base.graph.n, base.graph.edges() + extra)
    return LabeledFamily(f"grstc:{r}:{s}:{t}", g, base.labels, base.landmarks)


_GENERATORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "tadpole": (tadpole, 2),
    "star1": (subdivided_star_1, 1),
    "star2": (subdivided_star_2, 1),
    "f": (F, 1),
    "fprime": (F_prime, 1),
    "grst": (G_rst, 3),
    "grstc": (G_rst_connected, 3),
}


def parse_family(spec: str) -> LabeledFamily:
    """Parse ``name:a[:b...]`` terms joined by ``+`` (e.g. ``path:3+cycle:4``)."""
    terms = [t.strip() for t in spec.split("+")]
    parts = []
    for term in terms:
        name, *args = term.split(":")
        if name not in _GENERATORS:
            raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(_GENERATORS))}")
        fn, arity = _GENERATORS[name]
        if len(args) != arity:
            raise ValueError(f"{name} takes {arity} parameter(s), got {len(args)}")
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise ValueError(f"non-integer parameter in {term!r}") from None
        parts.append(fn(*nums))
    if len(parts) == 1:
        return parts[0]
    return disjoint_union(*parts)


# -- DOT ------------------------------------------------------------------------

_DOT_NODE = re.compile(r'^(\d+)\s*\[label="([^"]*)"\];$')
_DOT_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+);$")


def format_dot(f: LabeledFamily) -> str:
    """Undirected DOT with numeric node ids and the display labels."""
    lines = [f'graph "{f.name}" {{']
    lines += [f'  {v} [label="{label}"];' for v, label in enumerate(f.labels)]
    lines += [f"  {u} -- {v};" for u, v in f.graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> LabeledFamily:
    """Read back the subset of DOT written by :func:`format_dot`."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = re.match(r'^graph\s+"([^"]*)"\s*\{$', lines[0]) if lines else None
    if head is None or lines[-1] != "}":
        raise ValueError("expected 'graph \"name\" { ... }'")
    labels: dict[int, str] = {}
    edges = []
    for line in lines[1:-1]:
        if m := _DOT_NODE.match(line):
            labels[int(m[1])] = m[2]
        elif m := _DOT_EDGE.match(line):
            edges.append((int(m[1]), int(m[2])))
        else:
            raise ValueError(f"unsupported DOT line {line!r}")
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise ValueError("node ids must be 0..n-1")
    g = Graph.from_edges(n, edges)
    return LabeledFamily(head[1], g, tuple(labels[v] for v in range(n)))
