"""Dense symmetric eigendecomposition and tolerance-aware spectrum multisets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import ContainmentError, NumericHealthError
from .graphs import Graph, connected_components

REL_TOL = 1e-7
RESIDUAL_TOL = 1e-9
GAP_CLUSTER_REL = 1e-6

Kind = Literal["adjacency", "laplacian"]


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray
    residual_bound: float


def sym_eigen(m: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a real symmetric matrix, invariants verified.

    The residual ||M v - lambda v|| and the orthonormality defect are both
    checked against 1e-9 * max(1, ||M||_inf); failures raise rather than
    returning silently degraded output.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    norm = float(np.abs(m).sum(axis=1).max()) if m.size else 0.0
    sym_defect = float(np.abs(m - m.T).max()) if m.size else 0.0
    if sym_defect > 1e-12 * max(1.0, norm):
        raise ValueError(f"matrix is not symmetric (defect {sym_defect:.3e})")
    try:
        values, vectors = np.linalg.eigh((m + m.T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NumericHealthError(
            f"eigensolver failed to converge on a {m.shape[0]}x{m.shape[0]} "
            f"matrix within the LAPACK iteration cap: {exc}") from exc
    bound = RESIDUAL_TOL * max(1.0, norm)
    if m.size:
        residual = float(np.abs(m @ vectors - vectors * values).max())
        ortho = float(np.abs(vectors.T @ vectors - np.eye(m.shape[0])).max())
        if residual > bound or ortho > RESIDUAL_TOL:
            raise NumericHealthError(
                f"eigendecomposition out of tolerance: residual {residual:.3e}, "
                f"orthonormality defect {ortho:.3e}, bound {bound:.3e}")
    else:
        residual = 0.0
    return EigenDecomposition(values, vectors, residual)


def default_tol(values: Sequence[float]) -> float:
    biggest = max((abs(v) for v in values), default=0.0)
    return REL_TOL * max(1.0, biggest)


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalue multiset with a pairing tolerance."""

    values: tuple[float, ...]
    tol: float
    kind: Kind

    @classmethod
    def of(cls, values: Sequence[float], kind: Kind,
           tol: float | None = None) -> "Spectrum":
        vals = tuple(sorted(float(v) for v in values))
        return cls(vals, default_tol(vals) if tol is None else float(tol), kind)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def min(self) -> float:
        return self.values[0]

    @property
    def max(self) -> float:
        return self.values[-1]

    def distinct(self, gap: float | None = None) -> list[tuple[float, int]]:
        """(value, multiplicity) pairs derived by gap clustering, ascending."""
        if not self.values:
            return []
        if gap is None:
            gap = GAP_CLUSTER_REL * max(1.0, abs(self.values[0]), abs(self.values[-1]))
        groups: list[list[float]] = [[self.values[0]]]
        for v in self.values[1:]:
            if v - groups[-1][-1] <= gap:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(float(np.mean(grp)), len(grp)) for grp in groups]


def spectrum(g: Graph, kind: Kind, tol: float | None = None) -> Spectrum:
    """Eigenvalues of the adjacency or Laplacian matrix of g."""
    if kind == "adjacency":
        values = sym_eigen(g.adjacency).values
    elif kind == "laplacian":
        values = sym_eigen(g.laplacian).values
    else:
        raise ValueError(f"kind must be 'adjacency' or 'laplacian', got {kind!r}")
    return Spectrum.of(values, kind, tol)


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue (Perron root)."""
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    return spectrum(g, "adjacency").max


def laplacian_spectral_radius(g: Graph) -> float:
    if g.n == 0:
        raise ValueError("Laplacian spectral radius of the empty graph is undefined")
    return spectrum(g, "laplacian").max


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; positive iff g is connected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs n >= 2")
    return spectrum(g, "laplacian").values[1]


def zero_multiplicity_matches_components(g: Graph, tol: float | None = None) -> bool:
    spec = spectrum(g, "laplacian", tol)
    near_zero = sum(1 for v in spec.values if abs(v) <= spec.tol)
    return near_zero == len(connected_components(g))


@dataclass(frozen=True)
class MatchResult:
    """Outcome of matching a smaller multiset into a bigger one."""

    contained: bool
    pairs: tuple[tuple[float, float], ...]
    witness: float | None
    witness_gap: float

    def __bool__(self) -> bool:
        return self.contained


def _greedy_match(big: Sequence[float], small: Sequence[float],
                  tol: float) -> MatchResult:
    used = [False] * len(big)
    pairs: list[tuple[float, float]] = []
    start = 0
    for s in small:
        while start < len(big) and (used[start] or big[start] < s - tol):
            start += 1
        best = -1
        best_gap = np.inf
        i = start
        while i < len(big) and big[i] <= s + tol:
            if not used[i] and abs(big[i] - s) < best_gap:
                best, best_gap = i, abs(big[i] - s)
            i += 1
        if best < 0:
            gap = min((abs(b - s) for b, u in zip(big, used) if not u),
                      default=np.inf)
            return MatchResult(False, tuple(pairs), s, float(gap))
        used[best] = True
        pairs.append((s, big[best]))
    return MatchResult(True, tuple(pairs), None, 0.0)


def multiset_contains(big: Spectrum, small: Spectrum) -> MatchResult:
    """Greedy sorted-order pairing of small's values into big, within big.tol."""
    if big.kind != small.kind:
        raise ValueError(f"kind mismatch: {big.kind} vs {small.kind}")
    return _greedy_match(big.values, small.values, big.tol)


def multiset_difference(big: Spectrum, small: Spectrum) -> Spectrum:
    """big with one matched copy of each value of small removed."""
    match = multiset_contains(big, small)
    if not match:
        raise ContainmentError(
            f"containment failed: value {match.witness!r} has no partner "
            f"within tol {big.tol:.3e} (nearest unmatched gap {match.witness_gap:.3e})",
            witness=float(match.witness),  # type: ignore[arg-type]
            gap=match.witness_gap)
    taken = list(big.values)
    for _, b in match.pairs:
        # b is literally an element of big.values, so removal by value is exact
        taken.remove(b)
    return Spectrum(tuple(taken), big.tol, big.kind)
