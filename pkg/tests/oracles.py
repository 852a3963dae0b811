"""Brute-force oracles, kept independent of the library code paths they check."""

from itertools import combinations

from tokenspectra.graphs import Graph


def brute_token_edges(g: Graph, k: int) -> set[tuple[int, int]]:
    """All-pairs symmetric-difference token edges, on colex-ordered k-subsets."""
    subsets = list(combinations(range(g.n), k))
    # colex order: sort by reversed tuple
    ranked = sorted(subsets, key=lambda s: tuple(reversed(s)))
    rank = {s: i for i, s in enumerate(ranked)}
    edges = set()
    for a, b in combinations(subsets, 2):
        diff = set(a) ^ set(b)
        if len(diff) == 2:
            u, v = sorted(diff)
            if g.has_edge(u, v):
                i, j = rank[a], rank[b]
                edges.add((i, j) if i < j else (j, i))
    return edges


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects or leaves a singleton."""
    if g.n <= 1:
        return 0
    for size in range(g.n):
        for cut in combinations(range(g.n), size):
            left = [v for v in range(g.n) if v not in cut]
            if len(left) <= 1:
                return size
            if not _connected_on(g, left):
                return size
    return g.n - 1


def _connected_on(g: Graph, vertices: list[int]) -> bool:
    allowed = set(vertices)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(allowed)


def brute_closed_walks(g: Graph, start: int, length: int) -> int:
    """Count closed walks by explicit enumeration (small lengths only)."""
    def walks(u: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if u == start else 0
        return sum(walks(w, remaining - 1) for w in g.neighbors[u])
    return walks(start, length)


def brute_min_deleted_radii(g: Graph, k: int):
    """(max, min) of the spectral radius over all k-deletions, straight loop."""
    import numpy as np
    best_max, best_min = -np.inf, np.inf
    for cut in combinations(range(g.n), k):
        keep = [v for v in range(g.n) if v not in cut]
        sub = np.zeros((len(keep), len(keep)))
        pos = {v: i for i, v in enumerate(keep)}
        for u, v in g.edges:
            if u in pos and v in pos:
                sub[pos[u], pos[v]] = sub[pos[v], pos[u]] = 1.0
        rho = float(np.linalg.eigvalsh(sub).max()) if keep else 0.0
        best_max = max(best_max, rho)
        best_min = min(best_min, rho)
    return best_max, best_min
