"""Exhaustive small-graph corpora: one representative per isomorphism class.

Graphs are enumerated by vertex augmentation with canonical-form
deduplication. The canonical form of a graph is the lexicographically
smallest sequence of adjacency column codes over all vertex orderings,
found by branch-and-bound. Class counts are cross-checked in tests against
the published values (4, 11, 34, 156, 1044 graphs on 3..7 vertices).
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graphs import Graph, connected_components, read_graph6_lines

# graphs / connected graphs on n vertices, up to isomorphism
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

_CORPUS_RESOURCE = "connected_le7.g6"


def _canonical_codes(n: int, nbr_masks: list[int]) -> tuple[int, ...]:
    """Minimum tuple of per-position adjacency codes over all orderings.

    Position j's code packs its adjacencies to positions 0..j-1; the tuple
    comparison therefore equals comparing the concatenated upper-triangle
    bit string, and branches that already exceed the best prefix are cut.
    """
    best: list[tuple[int, ...] | None] = [None]

    def extend(placed: list[int], used: int, codes: tuple[int, ...]) -> None:
        j = len(placed)
        if j == n:
            if best[0] is None or codes < best[0]:
                best[0] = codes
            return
        for v in range(n):
            if used >> v & 1:
                continue
            code = 0
            mask = nbr_masks[v]
            for idx, p in enumerate(placed):
                if mask >> p & 1:
                    code |= 1 << idx
            cand = codes + (code,)
            if best[0] is not None and cand > best[0][: j + 1]:
                continue
            extend(placed + [v], used | 1 << v, cand)

    extend([], 0, ())
    assert best[0] is not None
    return best[0]


def _codes_to_edges(codes: tuple[int, ...]) -> list[tuple[int, int]]:
    edges = []
    for j, code in enumerate(codes):
        for i in range(j):
            if code >> i & 1:
                edges.append((i, j))
    return edges


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, in canonical-code order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (Graph.from_edges(0, []),)
    seen: set[tuple[int, ...]] = set()
    for g in all_graphs(n - 1):
        masks = [0] * n
        for u, v in g.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        new = n - 1
        for attach in range(1 << new):
            trial = list(masks)
            trial[new] = attach
            for u in range(new):
                if attach >> u & 1:
                    trial[u] |= 1 << new
            seen.add(_canonical_codes(n, trial))
    return tuple(Graph.from_edges(n, _codes_to_edges(codes))
                 for codes in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n)
                 if n >= 1 and len(connected_components(g)) == 1)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate of a graph (n <= 16 or so)."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return _canonical_codes(g.n, masks)


def load_connected_corpus() -> list[Graph]:
    """The shipped exhaustive corpus: all connected graphs on 1..7 vertices."""
    text = resources.files(__package__).joinpath("data", _CORPUS_RESOURCE).read_text()
    return read_graph6_lines(text.splitlines())
