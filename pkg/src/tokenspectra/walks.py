"""Local spectra, closed-walk counting, and walk-regularity classification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericHealthError
from .graphs import Graph, delete_vertices
from .spectra import (GAP_CLUSTER_REL, REL_TOL, Spectrum, spectrum, sym_eigen)

LOCAL_WEIGHT_CUTOFF = 1e-9


def cluster_indices(values: np.ndarray, scale: float) -> list[list[int]]:
    """Group ascending eigenvalue indices whose consecutive gaps are tiny."""
    gap = GAP_CLUSTER_REL * max(1.0, scale)
    groups: list[list[int]] = []
    for i, v in enumerate(values):
        if groups and v - values[groups[-1][-1]] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def spectral_projectors(g: Graph) -> list[tuple[float, np.ndarray]]:
    """(theta_i, E_i) per distinct adjacency eigenvalue, ascending in theta."""
    dec = sym_eigen(g.adjacency)
    scale = float(np.abs(g.adjacency).sum(axis=1).max()) if g.n else 0.0
    out = []
    for idx in cluster_indices(dec.values, scale):
        cols = dec.vectors[:, idx]
        out.append((float(np.mean(dec.values[idx])), cols @ cols.T))
    return out


@dataclass(frozen=True)
class LocalSpectrum:
    """Eigenvalues seen from one vertex, with their local multiplicities."""

    vertex: int
    pairs: tuple[tuple[float, float], ...]  # (eigenvalue, weight), descending

    @property
    def mesh(self) -> tuple[float, ...]:
        return tuple(value for value, _ in self.pairs)

    @property
    def mesh_size(self) -> int:
        """d_u: one less than the number of locally visible eigenvalues."""
        return len(self.pairs) - 1


def local_spectra(g: Graph) -> list[LocalSpectrum]:
    """Local spectrum of every vertex from a single eigendecomposition."""
    if not g.is_connected():
        raise ValueError("local spectra are defined here for connected graphs")
    projectors = spectral_projectors(g)
    weights = np.column_stack([np.diag(e) for _, e in projectors])
    totals = weights.sum(axis=1)
    if np.abs(totals - 1.0).max() > 1e-8:
        raise NumericHealthError("local multiplicities at some vertex do not sum to 1")
    rho_weights = weights[:, -1]  # largest eigenvalue is the last cluster
    if rho_weights.min() <= 0:
        raise NumericHealthError("Perron weight vanished on a connected graph")
    out = []
    for u in range(g.n):
        pairs = [(theta, float(weights[u, i]))
                 for i, (theta, _) in enumerate(projectors)
                 if weights[u, i] > LOCAL_WEIGHT_CUTOFF]
        pairs.sort(key=lambda p: -p[0])
        out.append(LocalSpectrum(u, tuple(pairs)))
    return out


def local_spectrum(g: Graph, u: int) -> LocalSpectrum:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    return local_spectra(g)[u]


def closed_walk_count(g: Graph, u: int, length: int) -> float:
    """Closed walks of the given length at u via the local spectral expansion."""
    if length < 0:
        raise ValueError("walk length must be non-negative")
    local = local_spectrum(g, u)
    return float(sum(w * theta ** length for theta, w in local.pairs))


def closed_walk_count_exact(g: Graph, u: int, length: int) -> int:
    """(u,u) entry of the length-th adjacency power, in exact integers."""
    if length < 0:
        raise ValueError("walk length must be non-negative")
    vec = [0] * g.n
    vec[u] = 1
    for _ in range(length):
        vec = [sum(vec[w] for w in g.neighbors[v]) for v in range(g.n)]
    return vec[u]


def power_radius_estimate(g: Graph, u: int, length_max: int) -> list[tuple[int, float]]:
    """(length, count**(1/length)) for even lengths; approaches the spectral radius.

    Even lengths realize the lim sup of the root of the closed-walk counts
    (odd counts vanish on bipartite graphs). Counts are exact integers, so
    arbitrarily long walks do not overflow.
    """
    if not g.is_connected():
        raise ValueError("power radius estimate needs a connected graph")
    if length_max < 4:
        raise ValueError("length_max must be at least 4")
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    out = []
    vec = [0] * g.n
    vec[u] = 1
    for step in range(1, length_max + 1):
        vec = [sum(vec[w] for w in g.neighbors[v]) for v in range(g.n)]
        if step % 2 == 0 and vec[u] > 0:
            out.append((step, float(vec[u]) ** (1.0 / step)))
    return out


@dataclass(frozen=True)
class WalkRegularity:
    """The three equivalent regularity flags, computed independently."""

    walk_regular: bool
    spectrally_regular: bool
    vertex_deleted_cospectral: bool


def _diag_walks_constant(g: Graph) -> bool:
    # exact integer walk counts, one indicator vector iterated per vertex
    vecs = []
    for u in range(g.n):
        vec = [0] * g.n
        vec[u] = 1
        vecs.append(vec)
    for _ in range(max(g.n - 1, 0)):
        diag = set()
        for u in range(g.n):
            vecs[u] = [sum(vecs[u][w] for w in g.neighbors[v]) for v in range(g.n)]
            diag.add(vecs[u][u])
        if len(diag) > 1:
            return False
    return True


def _local_spectra_equal(g: Graph, tol: float) -> bool:
    projectors = spectral_projectors(g)
    weights = np.column_stack([np.diag(e) for _, e in projectors])
    return float(np.abs(weights - weights[0]).max()) <= tol


def _deleted_spectra_equal(g: Graph, tol: float) -> bool:
    specs = [spectrum(delete_vertices(g, [u]), "adjacency").values
             for u in range(g.n)]
    base = np.asarray(specs[0])
    return all(np.abs(np.asarray(s) - base).max() <= tol for s in specs[1:])


def walk_regularity(g: Graph, tol: float = REL_TOL) -> WalkRegularity:
    """Classify g by all three routes and insist that they agree."""
    if g.n == 0:
        return WalkRegularity(True, True, True)
    if not g.is_connected():
        raise ValueError("walk regularity is classified for connected graphs")
    scale = max(1.0, float(max(g.degrees, default=0)))
    flags = WalkRegularity(
        walk_regular=_diag_walks_constant(g),
        spectrally_regular=_local_spectra_equal(g, tol),
        vertex_deleted_cospectral=(g.n == 1 or _deleted_spectra_equal(g, tol * scale)),
    )
    if len({flags.walk_regular, flags.spectrally_regular,
            flags.vertex_deleted_cospectral}) != 1:
        raise NumericHealthError(
            f"walk-regularity flags disagree on {g.label}: {flags}")
    return flags


def eccentricity_bound_holds(g: Graph, dm=None) -> bool:
    """ecc(u) <= local mesh size, for every vertex of a connected graph."""
    from .graphs import distance_matrix
    if dm is None:
        dm = distance_matrix(g)
    locals_ = local_spectra(g)
    return all(dm.eccentricities[u] <= locals_[u].mesh_size for u in range(g.n))
