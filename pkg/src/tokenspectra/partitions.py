"""Equitable partitions, their quotient matrices, and distance-regular machinery."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .errors import NumericHealthError
from .graphs import Graph, distance_matrix
from .spectra import REL_TOL, Spectrum, multiset_contains, spectrum, sym_eigen
from .tokens import TokenGraph, token_graph

QUOTIENT_TOL = 1e-9
PSEUDOINVERSE_TOL = 1e-7
CONJUGATE_ROOT_TOL = 1e-6


@dataclass(frozen=True)
class Partition:
    """A partition of 0..n-1 into cells 0..r-1 with nonempty cells."""

    assignment: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 1 and self.assignment:
            raise ValueError("cell count must be positive")
        hit = set(self.assignment)
        if self.assignment and hit != set(range(self.r)):
            raise ValueError("cells must be nonempty and numbered 0..r-1")

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "Partition":
        assignment = tuple(int(c) for c in assignment)
        return cls(assignment, max(assignment) + 1 if assignment else 0)

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]]) -> "Partition":
        n = sum(len(c) for c in cells)
        assignment = [-1] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                if assignment[v] != -1:
                    raise ValueError(f"vertex {v} assigned twice")
                assignment[v] = idx
        if -1 in assignment:
            raise ValueError("partition does not cover all vertices")
        return cls(tuple(assignment), len(cells))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple(range(n)), n)

    @classmethod
    def one_cell(cls, n: int) -> "Partition":
        return cls((0,) * n, 1 if n else 0)

    @cached_property
    def cells(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return tuple(tuple(c) for c in out)

    @cached_property
    def characteristic_matrix(self) -> np.ndarray:
        s = np.zeros((len(self.assignment), self.r))
        for v, c in enumerate(self.assignment):
            s[v, c] = 1.0
        return s

    @property
    def cell_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)


@dataclass(frozen=True)
class EquitableResult:
    equitable: bool
    b: np.ndarray | None              # r x r intersection numbers on success
    witness: tuple[int, int, int] | None  # (u, u_other, cell j) on failure

    def __bool__(self) -> bool:
        return self.equitable


def is_equitable(g: Graph, pi: Partition) -> EquitableResult:
    """True iff each vertex's neighbor count into each cell is cell-constant."""
    if len(pi.assignment) != g.n:
        raise ValueError("partition does not match the graph's vertex count")
    counts = np.zeros((g.n, pi.r), dtype=int)
    for v in range(g.n):
        for w in g.neighbors[v]:
            counts[v, pi.assignment[w]] += 1
    b = np.zeros((pi.r, pi.r), dtype=int)
    for i, cell in enumerate(pi.cells):
        first = cell[0]
        b[i] = counts[first]
        for u in cell[1:]:
            diff = np.nonzero(counts[u] != counts[first])[0]
            if diff.size:
                return EquitableResult(False, None, (first, u, int(diff[0])))
    return EquitableResult(True, b, None)


@dataclass(frozen=True)
class QuotientPair:
    """Adjacency and Laplacian quotient matrices of an equitable partition."""

    q_adjacency: np.ndarray
    q_laplacian: np.ndarray
    b: np.ndarray


def _quotient_eigenvalues(q: np.ndarray, sizes: Sequence[int]) -> np.ndarray:
    """Eigenvalues of a quotient matrix via its size-weighted symmetrization."""
    w = np.sqrt(np.asarray(sizes, dtype=float))
    sym = (q * w[:, None]) / w[None, :]
    return sym_eigen((sym + sym.T) / 2.0).values


def quotient_matrices(g: Graph, pi: Partition,
                      tol: float | None = None) -> QuotientPair:
    """Q_A and Q_L of an equitable partition, with the paper-grade identities checked.

    Verifies A S = S Q_A and L S = S Q_L entrywise, the pseudo-inverse forms,
    and that both quotient spectra embed in the graph's spectra.
    """
    res = is_equitable(g, pi)
    if not res:
        raise ValueError(f"partition is not equitable; witness {res.witness}")
    b = res.b.astype(float)
    degrees = b.sum(axis=1)
    q_l = np.diag(degrees) - b
    s = pi.characteristic_matrix
    adjacency, laplacian = g.adjacency, g.laplacian
    for matrix, quotient, label in ((adjacency, b, "A"), (laplacian, q_l, "L")):
        defect = float(np.abs(matrix @ s - s @ quotient).max())
        if defect > QUOTIENT_TOL:
            raise NumericHealthError(
                f"{label} S = S Q_{label} fails by {defect:.3e} on {g.label}")
        gram = s.T @ s
        recon = np.linalg.solve(gram, s.T @ matrix @ s)
        pdefect = float(np.abs(recon - quotient).max())
        if pdefect > PSEUDOINVERSE_TOL:
            raise NumericHealthError(
                f"pseudo-inverse form of Q_{label} fails by {pdefect:.3e} on {g.label}")
    for quotient, kind in ((b, "adjacency"), (q_l, "laplacian")):
        qvals = _quotient_eigenvalues(quotient, pi.cell_sizes)
        big = spectrum(g, kind, tol)
        small = Spectrum.of(qvals, kind, big.tol)
        if not multiset_contains(big, small):
            raise NumericHealthError(
                f"quotient {kind} spectrum not contained in the graph's on {g.label}")
    return QuotientPair(b, q_l, res.b)


# ---------------------------------------------------------------------------
# Distance-regular graphs


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0..b_{d-1}; c_1..c_d} with the derived a_i and intersection matrix."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("need b_0..b_{d-1} and c_1..c_d of equal positive length")
        if self.c[0] != 1:
            raise ValueError("c_1 must equal 1")
        if any(x < 1 for x in self.b) or any(x < 1 for x in self.c):
            raise ValueError("intersection numbers b_i (i<d) and c_i must be >= 1")
        if any(self.a(i) < 0 for i in range(1, self.d + 1)):
            raise ValueError("derived a_i went negative; malformed array")

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def degree(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.d else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if i >= 1 else 0

    def a(self, i: int) -> int:
        return self.degree - self.b_at(i) - self.c_at(i)

    @cached_property
    def intersection_matrix(self) -> np.ndarray:
        d = self.d
        mat = np.zeros((d + 1, d + 1))
        for i in range(d + 1):
            if i > 0:
                mat[i, i] = self.a(i)
            if i < d:
                mat[i, i + 1] = self.b[i]
                mat[i + 1, i] = self.c[i]
        return mat

    def sphere_sizes(self) -> tuple[int, ...]:
        """|G_i(u)| for i = 0..d."""
        sizes = [1]
        for i in range(1, self.d + 1):
            sizes.append(sizes[-1] * self.b[i - 1] // self.c[i - 1])
        return tuple(sizes)

    def __str__(self) -> str:
        return ("{" + ",".join(map(str, self.b)) + "; "
                + ",".join(map(str, self.c)) + "}")


@dataclass(frozen=True)
class NotDistanceRegular:
    """Witness that a connected regular graph is not distance-regular."""

    u: int
    v: int
    distance: int
    detail: str

    def __bool__(self) -> bool:
        return False


def drg_intersection_array(g: Graph) -> IntersectionArray | NotDistanceRegular:
    """The intersection array of g, or a witness pair breaking constancy."""
    if not g.is_connected():
        raise ValueError("intersection arrays are defined for connected graphs")
    if not g.is_regular() or g.n < 2:
        raise ValueError("intersection arrays are defined for regular graphs")
    dm = distance_matrix(g)
    d = dm.diameter
    dist = dm.matrix.astype(int)
    b: list[int | None] = [None] * (d + 1)
    c: list[int | None] = [None] * (d + 1)
    b[0] = g.degree(0)
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            i = dist[u, v]
            ci = sum(1 for w in g.neighbors[v] if dist[u, w] == i - 1)
            bi = sum(1 for w in g.neighbors[v] if dist[u, w] == i + 1)
            for store, value, tag in ((c, ci, "c"), (b, bi, "b")):
                if store[i] is None:
                    store[i] = value
                elif store[i] != value:
                    return NotDistanceRegular(
                        u, v, int(i),
                        f"{tag}_{i} is {value} at pair ({u},{v}) but {store[i]} earlier")
    return IntersectionArray(tuple(int(b[i]) for i in range(d)),
                             tuple(int(c[i]) for i in range(1, d + 1)))


def drg_f2_quotients(ia: IntersectionArray,
                     graph: Graph | None = None) -> tuple[np.ndarray, np.ndarray]:
    """The d x d quotient matrices of the distance-pair partition of F_2.

    Row i (distance class i+1) sends 2*c moves toward class i, keeps 2*a, and
    sends 2*b moves to class i+2. When the underlying graph is supplied, the
    matrices are cross-validated entrywise against quotient_matrices applied
    to the explicitly built 2-token graph.
    """
    d = ia.d
    adj = np.zeros((d, d))
    for row in range(d):
        i = row + 1
        adj[row, row] = 2 * ia.a(i)
        if row + 1 < d:
            adj[row, row + 1] = 2 * ia.b_at(i)
        if row > 0:
            adj[row, row - 1] = 2 * ia.c_at(i)
    lap = np.diag(adj.sum(axis=1)) - adj
    if graph is not None:
        tg = token_graph(graph, 2)
        pi = distance_pair_partition(graph, tg)
        pair = quotient_matrices(tg.graph, pi)
        if (np.abs(pair.q_adjacency - adj).max() > QUOTIENT_TOL
                or np.abs(pair.q_laplacian - lap).max() > QUOTIENT_TOL):
            raise NumericHealthError(
                f"closed-form F_2 quotients disagree with the explicit "
                f"partition quotients for {graph.label}")
    return adj, lap


def distance_pair_partition(base: Graph, tg: TokenGraph | None = None) -> Partition:
    """Partition of F_2(base) vertices by the base distance of their pair."""
    if tg is None:
        tg = token_graph(base, 2)
    if tg.k != 2 or tg.base != base:
        raise ValueError("expected the 2-token graph of the given base")
    dist = distance_matrix(base).matrix
    assignment = []
    for r in range(len(tg.labels)):
        u, v = tg.labels.unrank(r)
        dd = dist[u, v]
        if not np.isfinite(dd):
            raise ValueError("distance-pair partition needs a connected base")
        assignment.append(int(dd) - 1)
    return Partition.from_assignment(assignment)


def distance_polynomials(ia: IntersectionArray,
                         graph: Graph | None = None) -> list[Polynomial]:
    """p_0..p_d from the three-term recurrence; p_i(A) is the i-distance matrix.

    x p_i = b_{i-1} p_{i-1} + a_i p_i + c_{i+1} p_{i+1}; verified against the
    explicit distance matrices and sphere sizes when the graph is supplied.
    """
    x = Polynomial([0.0, 1.0])
    polys = [Polynomial([1.0]), x]
    for i in range(1, ia.d):
        c_next = ia.c_at(i + 1)
        if c_next == 0:
            raise ValueError(f"c_{i + 1} is zero; malformed intersection array")
        nxt = (x * polys[i] - ia.a(i) * polys[i] - ia.b_at(i - 1) * polys[i - 1]) / c_next
        polys.append(nxt)
    if graph is not None:
        _validate_distance_polynomials(ia, polys, graph)
    return polys


def _validate_distance_polynomials(ia: IntersectionArray,
                                   polys: list[Polynomial], g: Graph) -> None:
    dist = distance_matrix(g).matrix
    adjacency = g.adjacency
    spheres = ia.sphere_sizes()
    for i, p in enumerate(polys):
        target = (dist == i).astype(float)
        value = _poly_of_matrix(p, adjacency)
        if float(np.abs(value - target).max()) > PSEUDOINVERSE_TOL:
            raise NumericHealthError(
                f"p_{i}(A) does not equal the {i}-distance matrix of {g.label}")
        at_degree = float(p(ia.degree))
        if abs(at_degree - spheres[i]) > PSEUDOINVERSE_TOL:
            raise NumericHealthError(
                f"p_{i}(degree) = {at_degree} but |G_{i}(u)| = {spheres[i]}")


def _poly_of_matrix(p: Polynomial, m: np.ndarray) -> np.ndarray:
    out = np.zeros_like(m)
    power = np.eye(m.shape[0])
    for coef in p.convert().coef:
        out = out + coef * power
        power = power @ m
    return out


@dataclass(frozen=True)
class ConjugatePolynomial:
    """Interpolated conjugate of p_d, with its verified root identity."""

    poly: Polynomial
    roots: tuple[float, ...]
    quotient_eigenvalues: tuple[float, ...]
    max_root_gap: float


def conjugate_polynomial_check(ia: IntersectionArray,
                               mesh: Sequence[float]) -> ConjugatePolynomial:
    """Interpolate 1/p_d on the eigenvalue mesh; roots match eig(A(F_2/pi))/2."""
    d = ia.d
    mesh = sorted((float(t) for t in mesh), reverse=True)
    if len(mesh) != d + 1:
        raise ValueError(f"need {d + 1} distinct eigenvalues, got {len(mesh)}")
    p_d = distance_polynomials(ia)[-1]
    values = []
    for theta in mesh:
        pv = float(p_d(theta))
        if abs(pv) < 1e-10:
            raise ValueError(f"p_d({theta}) = 0; inconsistent mesh")
        values.append(1.0 / pv)
    conj = Polynomial.fit(mesh, values, deg=d).convert()
    roots = np.sort(np.real(conj.roots()))
    if np.abs(np.imag(np.asarray(conj.roots()))).max() > 1e-8:
        raise NumericHealthError("conjugate polynomial produced complex roots")
    adj, _ = drg_f2_quotients(ia)
    sizes = _f2_class_sizes(ia)
    qvals = np.sort(_quotient_eigenvalues(adj, sizes) / 2.0)
    gap = float(np.abs(roots - qvals).max())
    if gap > CONJUGATE_ROOT_TOL:
        raise NumericHealthError(
            f"conjugate-polynomial roots miss the quotient eigenvalues by {gap:.3e}")
    return ConjugatePolynomial(conj, tuple(float(r) for r in roots),
                               tuple(float(q) for q in qvals), gap)


def _f2_class_sizes(ia: IntersectionArray) -> tuple[int, ...]:
    spheres = ia.sphere_sizes()
    n = sum(spheres)
    return tuple(n * spheres[i] // 2 for i in range(1, ia.d + 1))


# ---------------------------------------------------------------------------
# Strongly regular graphs


@dataclass(frozen=True)
class SRGParams:
    """(n, d, a, c): d-regular, a common neighbors if adjacent, c otherwise."""

    n: int
    d: int
    a: int
    c: int

    def __post_init__(self):
        if self.d * (self.d - self.a - 1) != (self.n - self.d - 1) * self.c:
            raise ValueError(
                f"infeasible SRG parameters ({self.n},{self.d},{self.a},{self.c}): "
                f"d(d-a-1) != (n-d-1)c")


def srg_params_of(g: Graph) -> SRGParams | None:
    """SRG detection as diameter-2 distance regularity plus extraction."""
    ia = drg_intersection_array(g)
    if isinstance(ia, NotDistanceRegular) or ia.d != 2:
        return None
    return SRGParams(g.n, ia.degree, ia.a(1), ia.c_at(2))


@dataclass(frozen=True)
class SRGQuotients:
    q_adjacency: np.ndarray
    q_laplacian: np.ndarray
    theta1: float
    theta2: float
    laplacian_bound: float


def srg_quotients(p: SRGParams, graph: Graph | None = None,
                  tol: float = REL_TOL) -> SRGQuotients:
    """2x2 token quotients of an SRG with the closed-form eigenvalues.

    theta_{1,2} = d + (a-c) +- sqrt([d-(a-c)]^2 - 4c); theta1 is asserted to
    equal the spectral radius of the explicit F_2 when the graph is supplied.
    The Laplacian quotient only bounds: rho_L(F_2) >= 2(d-1) - 2(a-c).
    """
    n, d, a, c = p.n, p.d, p.a, p.c
    q_adj = np.array([[2.0 * a, 2.0 * c],
                      [2.0 * (d - a - 1), 2.0 * (d - c)]])
    q_lap = np.array([[2.0 * c, -2.0 * c],
                      [-2.0 * (d - a - 1), 2.0 * (d - a - 1)]])
    disc = (d - (a - c)) ** 2 - 4 * c
    if disc < 0:
        raise ValueError("negative discriminant; parameters are not an SRG's")
    theta1 = d + (a - c) + math.sqrt(disc)
    theta2 = d + (a - c) - math.sqrt(disc)
    bound = 2.0 * (d - 1) - 2.0 * (a - c)
    if graph is not None:
        from .spectra import spectral_radius
        rho = spectral_radius(token_graph(graph, 2).graph)
        if abs(rho - theta1) > tol * max(1.0, abs(theta1)):
            raise NumericHealthError(
                f"theta1 = {theta1} but rho_A(F_2({graph.label})) = {rho}")
    return SRGQuotients(q_adj, q_lap, theta1, theta2, bound)
