"""Token graphs, the (k,h)-binomial matrix, and the intertwining identities.

The k-token graph of G has one vertex per k-subset of V(G); two subsets are
adjacent when their symmetric difference is an edge of G (one token slides
along an edge, the others stay put).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .errors import GuardExceededError, NumericHealthError
from .graphs import Graph

TOKEN_GRAPH_GUARD = 20000
COMMUTE_TOL = 1e-9
RECONSTRUCT_TOL = 1e-7
LIFT_TOL = 1e-7


@dataclass(frozen=True)
class SubsetIndexer:
    """Colexicographic rank/unrank between k-subsets of 0..n-1 and 0..C(n,k)-1."""

    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    def __len__(self) -> int:
        return math.comb(self.n, self.k)

    def rank(self, subset: Sequence[int]) -> int:
        elems = sorted(subset)
        if len(elems) != self.k or len(set(elems)) != self.k:
            raise ValueError(f"expected a {self.k}-subset, got {subset!r}")
        if elems and not 0 <= elems[0] <= elems[-1] < self.n:
            raise ValueError(f"subset {subset!r} out of range for n={self.n}")
        return sum(math.comb(c, j + 1) for j, c in enumerate(elems))

    def unrank(self, r: int) -> tuple[int, ...]:
        if not 0 <= r < len(self):
            raise ValueError(f"rank {r} out of range")
        out = [0] * self.k
        for j in range(self.k, 0, -1):
            c = j - 1
            while math.comb(c + 1, j) <= r:
                c += 1
            out[j - 1] = c
            r -= math.comb(c, j)
        return tuple(out)

    def subsets(self) -> Iterator[tuple[int, ...]]:
        for r in range(len(self)):
            yield self.unrank(r)


@dataclass(frozen=True)
class TokenGraph:
    """F_k(base): a graph on C(n,k) vertices labeled by k-subsets of V(base)."""

    base: Graph
    k: int
    graph: Graph
    labels: SubsetIndexer

    def label_of(self, vertex: int) -> tuple[int, ...]:
        return self.labels.unrank(vertex)


def token_graph(g: Graph, k: int) -> TokenGraph:
    """Construct F_k(g) by sliding one token along each edge of g.

    Edges are enumerated as (edge {a,b} of g) x ((k-1)-subset of V minus
    {a,b}), which hits every token edge exactly once and avoids the
    all-pairs blowup.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"need 0 <= k <= n, got k={k} for n={g.n}")
    order = math.comb(g.n, k)
    if order > TOKEN_GRAPH_GUARD:
        raise GuardExceededError(
            f"F_{k} of a {g.n}-vertex graph has C({g.n},{k}) = {order} vertices, "
            f"beyond the guard of {TOKEN_GRAPH_GUARD}")
    indexer = SubsetIndexer(g.n, k)
    edges = []
    if 1 <= k <= g.n - 1:
        others = list(range(g.n))
        for a, b in g.sorted_edges:
            rest = [v for v in others if v not in (a, b)]
            for still in combinations(rest, k - 1):
                left = indexer.rank(still + (a,))
                right = indexer.rank(still + (b,))
                edges.append((left, right) if left < right else (right, left))
    name = f"F_{k}({g.label})"
    return TokenGraph(g, k, Graph.from_edges(order, edges, name), indexer)


@dataclass(frozen=True)
class BinomialMatrix:
    """0/1 inclusion matrix between k-subsets (rows) and h-subsets (columns)."""

    matrix: np.ndarray
    rows: SubsetIndexer
    cols: SubsetIndexer


def binomial_matrix(n: int, k: int, h: int) -> BinomialMatrix:
    if not 0 <= h <= k <= n:
        raise ValueError(f"need 0 <= h <= k <= n, got n={n}, k={k}, h={h}")
    rows = SubsetIndexer(n, k)
    cols = SubsetIndexer(n, h)
    if len(rows) > TOKEN_GRAPH_GUARD or len(cols) > TOKEN_GRAPH_GUARD:
        raise GuardExceededError("binomial matrix beyond the desk-scale guard")
    mat = np.zeros((len(rows), len(cols)))
    for r in range(len(rows)):
        subset = rows.unrank(r)
        for sub in combinations(subset, h):
            mat[r, cols.rank(sub)] = 1.0
    return BinomialMatrix(mat, rows, cols)


@dataclass(frozen=True)
class CommutationReport:
    """Deviations of the token-Laplacian intertwining identities."""

    h: int
    k: int
    max_commutator: float
    max_reconstruction: float


def verify_commutation(g: Graph, h: int, k: int) -> CommutationReport:
    """Check L_k S_b = S_b L_h and L_h = (S_b^T S_b)^-1 S_b^T L_k S_b."""
    if not 1 <= h <= k <= g.n:
        raise ValueError(f"need 1 <= h <= k <= n, got h={h}, k={k}")
    sb = binomial_matrix(g.n, k, h).matrix
    lap_k = token_graph(g, k).graph.laplacian
    lap_h = token_graph(g, h).graph.laplacian
    commutator = lap_k @ sb - sb @ lap_h
    max_comm = float(np.abs(commutator).max())
    if max_comm > COMMUTE_TOL:
        worst = np.unravel_index(np.abs(commutator).argmax(), commutator.shape)
        raise NumericHealthError(
            f"L_k S_b != S_b L_h on {g.label}: entry {worst} deviates by {max_comm:.3e}")
    gram = sb.T @ sb
    recon = np.linalg.solve(gram, sb.T @ lap_k @ sb)
    deviation = np.abs(recon - lap_h)
    max_recon = float(deviation.max())
    if max_recon > RECONSTRUCT_TOL:
        worst = np.unravel_index(deviation.argmax(), deviation.shape)
        raise NumericHealthError(
            f"pseudo-inverse reconstruction of L_h failed on {g.label}: "
            f"entry {worst} deviates by {max_recon:.3e}")
    return CommutationReport(h, k, max_comm, max_recon)


def _as_matrix(s) -> np.ndarray:
    return s.matrix if isinstance(s, BinomialMatrix) else np.asarray(s, dtype=float)


def lift_vector(s, v: np.ndarray, operator: np.ndarray | None = None,
                eigenvalue: float | None = None, tol: float = LIFT_TOL) -> np.ndarray:
    """S v; optionally assert the lift is an eigenvector of the big operator."""
    mat = _as_matrix(s)
    v = np.asarray(v, dtype=float)
    if v.shape != (mat.shape[1],):
        raise ValueError(f"vector of length {v.shape} does not match {mat.shape} columns")
    lifted = mat @ v
    norm = float(np.linalg.norm(lifted))
    if norm <= 1e-12:
        raise ValueError("lifted vector is numerically zero")
    if operator is not None:
        if eigenvalue is None:
            raise ValueError("eigenvalue required alongside operator")
        scale = max(1.0, float(np.abs(operator).sum(axis=1).max()))
        residual = float(np.linalg.norm(operator @ lifted - eigenvalue * lifted))
        if residual > tol * scale * norm:
            raise NumericHealthError(
                f"lifted vector is not an eigenvector: residual {residual:.3e}")
    return lifted


def project_vector(s, w: np.ndarray, operator: np.ndarray | None = None,
                   eigenvalue: float | None = None, tol: float = LIFT_TOL) -> np.ndarray:
    """S^T w; optionally assert the projection is an eigenvector downstairs."""
    mat = _as_matrix(s)
    w = np.asarray(w, dtype=float)
    if w.shape != (mat.shape[0],):
        raise ValueError(f"vector of length {w.shape} does not match {mat.shape} rows")
    projected = mat.T @ w
    norm = float(np.linalg.norm(projected))
    if norm <= 1e-12:
        raise ValueError("projection is numerically zero")
    if operator is not None:
        if eigenvalue is None:
            raise ValueError("eigenvalue required alongside operator")
        scale = max(1.0, float(np.abs(operator).sum(axis=1).max()))
        residual = float(np.linalg.norm(operator @ projected - eigenvalue * projected))
        if residual > tol * scale * norm:
            raise NumericHealthError(
                f"projected vector is not an eigenvector: residual {residual:.3e}")
    return projected
