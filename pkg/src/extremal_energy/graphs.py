"""Simple connected graphs, standard constructors and all-pairs distances.

Vertices are always labelled ``0..n-1``.  A :class:`Graph` is validated at
construction (simple, connected) and computes its distance matrix eagerly, so
every downstream routine can assume both.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "GraphError",
    "Graph",
    "DistanceMatrix",
    "vertex_set",
    "build_path",
    "build_cycle",
    "build_hypercube",
    "build_mobius_ladder",
    "build_petersen",
    "build_star",
    "cartesian_product",
    "from_edge_list",
    "all_pairs_distances",
    "distance_vector",
    "sphere",
    "is_distance_degree_regular",
    "is_regular_at_every_distance",
    "parse_edge_list",
    "format_edge_list",
]


class GraphError(ValueError):
    """Raised for malformed, non-simple or disconnected graph input."""


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]
    diameter: int

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


class Graph:
    """Immutable finite simple connected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "name", "_dm")

    def __init__(self, n: int, edges: Iterable[Iterable[int]], name: str | None = None):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        canon: set[tuple[int, int]] = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} does not have two endpoints")
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in canon:
                raise GraphError(f"duplicate edge {key}")
            canon.add(key)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "name", name)

        rows = tuple(tuple(_bfs(self.adjacency, u)) for u in range(n))
        if any(x < 0 for x in rows[0]):
            raise GraphError("graph is disconnected")
        diameter = max(max(r) for r in rows)
        object.__setattr__(self, "_dm", DistanceMatrix(n, rows, diameter))

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={len(self.edges)}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def distances(self) -> DistanceMatrix:
        return self._dm

    @property
    def diameter(self) -> int:
        return self._dm.diameter

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_labeled_cycle(self) -> bool:
        """True when this is ``C_n`` with edges ``{i, i+1 mod n}`` exactly."""
        n = self.n
        if n < 3:
            return False
        return self.edges == {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}


def vertex_set(vertices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Canonical sorted tuple of distinct vertices, range-checked when ``n`` is given."""
    out = tuple(sorted(set(int(v) for v in vertices)))
    if n is not None and out and (out[0] < 0 or out[-1] >= n):
        raise GraphError(f"vertex set {out} not contained in 0..{n - 1}")
    return out


# --- constructors -----------------------------------------------------------

def build_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"path:{n}")


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle:{n}")


def build_hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError("hypercube needs dimension >= 1")
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    return Graph(n, edges, name=f"hypercube:{d}")


def build_mobius_ladder(k: int) -> Graph:
    """Cycle on ``2k`` vertices plus the ``k`` antipodal chords ``{i, i+k}``."""
    if k < 3:
        raise GraphError("Mobius ladder needs k >= 3")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)]
    return Graph(n, edges, name=f"mobius:{k}")


def build_petersen() -> Graph:
    # outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes, name="petersen")


def build_star(n: int) -> Graph:
    """Star ``K_{1,n-1}`` on ``n`` vertices with centre 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)], name=f"star:{n}")


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product; pair ``(g, h)`` gets the flat label ``g*|H| + h``."""
    nh = H.n
    edges = []
    for g, (h1, h2) in product(range(G.n), H.edges):
        edges.append((g * nh + h1, g * nh + h2))
    for (g1, g2), h in product(G.edges, range(nh)):
        edges.append((g1 * nh + h, g2 * nh + h))
    name = f"product:{G.name},{H.name}" if G.name and H.name else None
    return Graph(G.n * nh, edges, name=name)


def from_edge_list(n: int, pairs: Iterable[Iterable[int]]) -> Graph:
    return Graph(n, pairs)


# --- distances --------------------------------------------------------------

def all_pairs_distances(G: Graph) -> DistanceMatrix:
    return G.distances


def distance_vector(G: Graph, u: int) -> tuple[int, ...]:
    if not 0 <= u < G.n:
        raise GraphError(f"vertex {u} out of range")
    row = G.distances.d[u]
    return tuple(sorted(row[v] for v in range(G.n) if v != u))


def sphere(G: Graph, u: int, i: int) -> tuple[int, ...]:
    if not 0 <= u < G.n:
        raise GraphError(f"vertex {u} out of range")
    if not 0 <= i <= G.diameter:
        raise GraphError(f"radius {i} outside 0..{G.diameter}")
    row = G.distances.d[u]
    return tuple(v for v in range(G.n) if row[v] == i)


def is_distance_degree_regular(G: Graph) -> bool:
    first = distance_vector(G, 0)
    return all(distance_vector(G, u) == first for u in range(1, G.n))


def is_regular_at_every_distance(G: Graph) -> bool:
    """Sphere-size formulation: ``|S(u, i)|`` independent of ``u`` for every radius."""
    for i in range(1, G.diameter + 1):
        sizes = {len(sphere(G, u, i)) for u in range(G.n)}
        if len(sizes) > 1:
            return False
    return True


# --- edge-list text format --------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; blank lines and ``#`` comments are skipped.

    Errors carry the 1-based line number of the offending line.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"line {lineno}: header must hold two integers") from None
    if n < 1 or m < 0:
        raise GraphError(f"line {lineno}: need n >= 1 and m >= 0")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"line {lineno}: header announces {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, tok in body:
        if len(tok) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise GraphError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: label outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"
