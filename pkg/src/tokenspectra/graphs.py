"""Finite simple undirected graphs on vertices 0..n-1 and structural primitives.

Graphs are immutable after construction; every operation here is a pure
function, so values can be shared freely across threads.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import Graph6Error

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """A simple graph: vertex count plus a set of sorted vertex pairs.

    Disconnected graphs are representable on purpose (complements of
    connected graphs need not be connected); operations that require
    connectivity say so and check it.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) invalid for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   name: str | None = None) -> "Graph":
        """Build a graph, normalizing edge order and rejecting self-loops."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(normalized), name)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    @cached_property
    def laplacian(self) -> np.ndarray:
        return np.diag(np.asarray(self.degrees, dtype=float)) - self.adjacency

    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self.degrees)) == 1

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    @property
    def label(self) -> str:
        return self.name if self.name is not None else encode_graph6(self)

    def __repr__(self) -> str:  # keep reprs short; edge sets can be large
        tag = f" {self.name!r}" if self.name else ""
        return f"Graph(n={self.n}, m={self.num_edges}{tag})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path lengths; np.inf marks cross-component pairs."""

    matrix: np.ndarray
    diameter: int
    eccentricities: tuple[float, ...]

    def dist(self, u: int, v: int) -> float:
        return float(self.matrix[u, v])


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in order of least vertex."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def complement(g: Graph) -> Graph:
    """Edge {u,v} present in the output iff absent in g."""
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if not g.has_edge(u, v)]
    name = None if g.name is None else f"complement({g.name})"
    return Graph.from_edges(g.n, edges, name)


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on the kept vertices, relabeled 0.. preserving order."""
    removed = set(removed)
    for u in removed:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} out of range for n={g.n}")
    keep = [u for u in range(g.n) if u not in removed]
    relabel = {u: i for i, u in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges
             if u not in removed and v not in removed]
    return Graph.from_edges(len(keep), edges)


def _bfs_row(g: Graph, source: int) -> np.ndarray:
    row = np.full(g.n, np.inf)
    row[source] = 0.0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if row[w] == np.inf:
                row[w] = row[u] + 1.0
                queue.append(w)
    return row


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; diameter is the largest finite entry."""
    if g.n == 0:
        return DistanceMatrix(np.zeros((0, 0)), 0, ())
    mat = np.vstack([_bfs_row(g, u) for u in range(g.n)])
    finite = mat[np.isfinite(mat)]
    diameter = int(finite.max()) if finite.size else 0
    ecc = tuple(float(mat[u].max()) for u in range(g.n))
    return DistanceMatrix(mat, diameter, ecc)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def girth(g: Graph) -> float:
    """Length of a shortest cycle, np.inf for forests (BFS from each vertex)."""
    best = np.inf
    for source in range(g.n):
        dist = {source: 0}
        parent = {source: -1}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3.0
    return float(best)


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, cap: int) -> int:
    """Internally vertex-disjoint s-t paths via unit-capacity max-flow.

    Vertices other than s,t are split into in/out nodes of capacity one;
    augmentation stops early once `cap` paths are found.
    """
    residual: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add_arc(a: int, b: int, c: int) -> None:
        if (a, b) not in residual:
            residual[(a, b)] = 0
            residual[(b, a)] = residual.get((b, a), 0)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        residual[(a, b)] += c

    for v in range(g.n):
        if v not in (s, t):
            add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v, 1)
        add_arc(2 * v + 1, 2 * u, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent: dict[int, int | None] = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj.get(a, ()):
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]  # type: ignore[assignment]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; kappa(K_n) = n-1 by the singleton convention."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    if g.num_edges == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                best = min(best, _max_vertex_disjoint_paths(g, u, v, best))
                if best == 0:
                    return 0
    return best


# ---------------------------------------------------------------------------
# graph6 format (single-byte size field, n <= 62) and edge-list JSON


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; the optional '>>graph6<<' header is tolerated."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 string")
    codes = []
    for ch in line:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
        codes.append(val)
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte size fields (n > 62) are not supported")
    need = n * (n - 1) // 2
    expect = (need + 5) // 6
    if len(codes) - 1 != expect:
        raise Graph6Error(
            f"n={n} needs {expect} data characters, got {len(codes) - 1}")
    bits = []
    for val in codes[1:]:
        bits.extend((val >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[need:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Inverse of parse_graph6 (upper triangle read column by column)."""
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 writer limited to n <= {GRAPH6_MAX_N}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos:pos + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """One graph per non-empty line; a standalone header line is skipped."""
    graphs = []
    for line in lines:
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        graphs.append(parse_graph6(line))
    return graphs


def read_graph6_file(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as handle:
        return read_graph6_lines(handle)


def graph_from_json(data) -> Graph:
    """Edge-list JSON object: {"n": int, "edges": [[u, v], ...]}."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('edge-list JSON must be {"n": int, "edges": [[u,v],...]}')
    n = int(data["n"])
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    return Graph.from_edges(n, edges, data.get("name"))


def read_edge_json_file(path) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return graph_from_json(json.load(handle))
