"""Generators for the named graph families, with structural self-checks."""

from __future__ import annotations

import math
from itertools import combinations

from .graphs import Graph, girth, is_bipartite

SUBSET_GUARD = 20000

# LCF word for the Heawood graph: chords added around a 14-cycle.
_HEAWOOD_LCF = [5, -5] * 7


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P_{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C_{n}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), f"K_{n}")


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return Graph.from_edges(m + n, edges, f"K_{{{m},{n}}}")


def _k_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if math.comb(n, k) > SUBSET_GUARD:
        raise ValueError(f"C({n},{k}) exceeds the subset guard {SUBSET_GUARD}")
    return list(combinations(range(n), k))


def johnson_graph(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent when they share k-1 elements."""
    subsets = _k_subsets(n, k)
    edges = []
    for a, b in combinations(range(len(subsets)), 2):
        if len(set(subsets[a]) & set(subsets[b])) == k - 1:
            edges.append((a, b))
    return Graph.from_edges(len(subsets), edges, f"J({n},{k})")


def kneser_graph(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent when disjoint."""
    subsets = _k_subsets(n, k)
    edges = []
    for a, b in combinations(range(len(subsets)), 2):
        if not set(subsets[a]) & set(subsets[b]):
            edges.append((a, b))
    return Graph.from_edges(len(subsets), edges, f"Kneser({n},{k})")


def petersen_graph() -> Graph:
    g = kneser_graph(5, 2)
    return Graph(g.n, g.edges, "Petersen")


def heawood_graph() -> Graph:
    n = 14
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i, jump in enumerate(_HEAWOOD_LCF):
        edges.append(tuple(sorted((i, (i + jump) % n))))
    g = Graph.from_edges(n, edges, "Heawood")
    if not (g.degrees == (3,) * 14 and is_bipartite(g) and girth(g) == 6):
        raise AssertionError("Heawood construction failed its structural check")
    return g


def _check_srg(g: Graph, n: int, d: int, a: int, c: int) -> None:
    if g.n != n or set(g.degrees) != {d}:
        raise AssertionError(f"{g.name}: expected {d}-regular on {n} vertices")
    nbr = [set(ns) for ns in g.neighbors]
    for u in range(n):
        for v in range(u + 1, n):
            common = len(nbr[u] & nbr[v])
            want = a if g.has_edge(u, v) else c
            if common != want:
                raise AssertionError(
                    f"{g.name}: pair ({u},{v}) has {common} common neighbors, "
                    f"expected {want}")


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1)."""
    steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for x in range(4):
        for y in range(4):
            u = 4 * x + y
            for dx, dy in steps:
                v = 4 * ((x + dx) % 4) + (y + dy) % 4
                edges.add((u, v) if u < v else (v, u))
    g = Graph.from_edges(16, edges, "Shrikhande")
    _check_srg(g, 16, 6, 2, 2)
    return g


def rook_graph() -> Graph:
    """The 4x4 rook's graph: grid cells adjacent in the same row or column."""
    edges = []
    for r in range(4):
        for c in range(4):
            u = 4 * r + c
            for c2 in range(c + 1, 4):
                edges.append((u, 4 * r + c2))
            for r2 in range(r + 1, 4):
                edges.append((u, 4 * r2 + c))
    g = Graph.from_edges(16, edges, "Rook_4x4")
    _check_srg(g, 16, 6, 2, 2)
    return g


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "johnson": (johnson_graph, 2),
    "kneser": (kneser_graph, 2),
    "petersen": (petersen_graph, 0),
    "heawood": (heawood_graph, 0),
    "shrikhande": (shrikhande_graph, 0),
    "rook": (rook_graph, 0),
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def generate(family: str, *params: int) -> Graph:
    """Build a named family instance, validating the parameter count."""
    key = family.lower()
    if key not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(family_names())}")
    builder, arity = _FAMILIES[key]
    if len(params) != arity:
        raise ValueError(f"family {key!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
