"""Graph kernels: BFS distances, regularity, reachability and vertex-disjoint paths."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

import numpy as np

from .om import FormatError

INF = np.inf


class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``."""

    __slots__ = ("vertex_count", "adj")

    def __init__(self, vertex_count: int, adj: Iterable[Iterable[int]]):
        self.vertex_count = vertex_count
        self.adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adj)
        if len(self.adj) != vertex_count:
            raise ValueError("adjacency list length differs from vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for w in nbrs:
                if v not in self.adj[w]:
                    raise ValueError(f"edge {v}-{w} stored in one direction only")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u].add(v)
            adj[v].add(u)
        return cls(vertex_count, adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices`` keeping the original vertex ids (others isolated)."""
        keep = set(vertices)
        return Graph(self.vertex_count,
                     [[w for w in nbrs if w in keep] if v in keep else []
                      for v, nbrs in enumerate(self.adj)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={self.edge_count})"

    def to_text(self) -> str:
        edges = self.edges()
        lines = ["graph v1", f"{self.vertex_count} {len(edges)}"]
        lines.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = [line for line in text.splitlines()]
        if not lines or lines[0] != "graph v1":
            raise FormatError("expected header 'graph v1'")
        header = _ints(lines, 1, 2)
        vertex_count, edge_count = header
        body = [line for line in lines[2:] if line]
        if len(body) != edge_count:
            raise FormatError(f"expected {edge_count} edge lines, found {len(body)}")
        edges = []
        for i in range(len(body)):
            u, v = _ints(lines, i + 2, 2)
            if not u < v < vertex_count:
                raise FormatError(f"bad edge {u} {v} on line {i + 3}")
            edges.append((u, v))
        if len(set(edges)) != len(edges):
            raise FormatError("duplicate edge")
        return cls.from_edges(vertex_count, edges)


def _ints(lines: list[str], index: int, count: int) -> list[int]:
    if len(lines) <= index:
        raise FormatError("file truncated")
    parts = lines[index].split(" ")
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise FormatError(f"malformed line {index + 1}: {lines[index]!r}")
    return [int(p) for p in parts]


class DirectedGraph:
    """Arcs stored as successor sets."""

    def __init__(self, vertex_count: int):
        self.vertex_count = vertex_count
        self.succ: list[set[int]] = [set() for _ in range(vertex_count)]

    def add_arc(self, u: int, v: int) -> None:
        self.succ[u].add(v)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.succ[u]

    def arcs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, vs in enumerate(self.succ) for v in vs)


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Unweighted distances from ``source``; unreachable vertices get ``inf``."""
    dist = np.full(g.vertex_count, INF)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def apsp(g: Graph) -> np.ndarray:
    """Dense all-pairs distance matrix, one BFS per source."""
    if g.vertex_count == 0:
        return np.zeros((0, 0))
    return np.vstack([bfs_distances(g, s) for s in range(g.vertex_count)])


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return bool(np.isfinite(bfs_distances(g, 0)).all())


def check_regular(g: Graph) -> Optional[int]:
    """Common degree of a regular graph, ``None`` otherwise."""
    degrees = {len(nbrs) for nbrs in g.adj}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def backward_reachable(d: DirectedGraph, target: int) -> set[int]:
    """Vertices having a directed path to ``target`` (``target`` included)."""
    pred: list[list[int]] = [[] for _ in range(d.vertex_count)]
    for u, vs in enumerate(d.succ):
        for v in vs:
            pred[v].append(u)
    seen = {target}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in pred[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def vertex_disjoint_path_count(g: Graph, s: int, t: int,
                               allowed: Optional[Iterable[int]] = None) -> int:
    """Maximum number of internally vertex-disjoint ``s``-``t`` paths.

    Unit-capacity max flow on the split graph: every vertex other than
    ``s`` and ``t`` becomes an arc ``in -> out`` of capacity one, every edge
    becomes two unit arcs.  If ``allowed`` is given the paths are confined to
    those vertices (``s`` and ``t`` must belong to it).
    """
    if s == t:
        raise ValueError("s and t must differ")
    keep = set(range(g.vertex_count)) if allowed is None else set(allowed)
    if s not in keep or t not in keep:
        raise ValueError("s and t must be allowed vertices")
    big = g.vertex_count + 1
    cap: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in keep:
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in g.adj[v]:
            if w in keep:
                arc(2 * v + 1, 2 * w, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
