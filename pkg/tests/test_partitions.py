import math

import numpy as np
import pytest

from tokenspectra.families import (complete_bipartite_graph, complete_graph,
                                   cycle_graph, heawood_graph, johnson_graph,
                                   path_graph, petersen_graph, rook_graph,
                                   shrikhande_graph)
from tokenspectra.graphs import Graph, is_bipartite
from tokenspectra.partitions import (IntersectionArray, NotDistanceRegular,
                                     Partition, conjugate_polynomial_check,
                                     distance_pair_partition,
                                     distance_polynomials, drg_f2_quotients,
                                     drg_intersection_array, is_equitable,
                                     quotient_matrices, srg_params_of,
                                     srg_quotients)
from tokenspectra.spectra import (Spectrum, laplacian_spectral_radius,
                                  multiset_contains, spectral_radius,
                                  spectrum)
from tokenspectra.tokens import token_graph


class TestPartitionType:
    def test_from_cells(self):
        pi = Partition.from_cells([[0, 2], [1, 3]])
        assert pi.assignment == (0, 1, 0, 1) and pi.r == 2
        assert pi.cell_sizes == (2, 2)
        s = pi.characteristic_matrix
        assert np.all(s.sum(axis=0) == [2, 2]) and np.all(s.sum(axis=1) == 1)

    def test_rejects_gaps(self):
        with pytest.raises(ValueError):
            Partition((0, 2), 3)

    def test_rejects_double_assignment(self):
        with pytest.raises(ValueError):
            Partition.from_cells([[0, 1], [1, 2]])


class TestEquitable:
    def test_singletons_always_equitable(self):
        g = path_graph(4)
        res = is_equitable(g, Partition.singletons(4))
        assert res and np.array_equal(res.b, g.adjacency)

    def test_one_cell_iff_regular(self):
        assert is_equitable(cycle_graph(5), Partition.one_cell(5)).b[0, 0] == 2
        res = is_equitable(path_graph(4), Partition.one_cell(4))
        assert not res and res.witness is not None

    def test_distance_pairs_of_f2_c9(self):
        base = cycle_graph(9)
        tg = token_graph(base, 2)
        pi = distance_pair_partition(base, tg)
        res = is_equitable(tg.graph, pi)
        assert res and pi.r == 4

    def test_witness_is_concrete(self):
        g = path_graph(4)
        res = is_equitable(g, Partition.one_cell(4))
        u, u2, j = res.witness
        counts = [sum(1 for _ in g.neighbors[v]) for v in (u, u2)]
        assert counts[0] != counts[1] and j == 0


class TestQuotients:
    def test_one_cell_cycle(self):
        pair = quotient_matrices(cycle_graph(6), Partition.one_cell(6))
        assert pair.q_adjacency == pytest.approx(np.array([[2.0]]))
        assert pair.q_laplacian == pytest.approx(np.array([[0.0]]))

    def test_bipartition_k24(self):
        g = complete_bipartite_graph(2, 4)
        pi = Partition.from_cells([[0, 1], [2, 3, 4, 5]])
        pair = quotient_matrices(g, pi)
        assert np.array_equal(pair.q_adjacency, [[0, 4], [2, 0]])
        eigs = np.linalg.eigvals(pair.q_adjacency)
        assert sorted(np.round(eigs, 9)) == pytest.approx(
            [-2 * math.sqrt(2), 2 * math.sqrt(2)])

    def test_rows_sum_to_zero_and_degree(self):
        base = cycle_graph(9)
        tg = token_graph(base, 2)
        pair = quotient_matrices(tg.graph, distance_pair_partition(base, tg))
        assert np.abs(pair.q_laplacian.sum(axis=1)).max() < 1e-12
        degs = pair.q_adjacency.sum(axis=1)
        for row, cell in enumerate(distance_pair_partition(base, tg).cells):
            assert degs[row] == tg.graph.degree(cell[0])

    def test_non_equitable_rejected(self):
        with pytest.raises(ValueError):
            quotient_matrices(path_graph(4), Partition.one_cell(4))

    def test_quotient_spectra_contained(self, corpus_le6):
        # regular corpus graphs: one-cell partition quotients embed
        for g in corpus_le6:
            if not g.is_regular() or g.n < 2:
                continue
            pair = quotient_matrices(g, Partition.one_cell(g.n))
            adj = spectrum(g, "adjacency")
            assert multiset_contains(
                adj, Spectrum.of([pair.q_adjacency[0, 0]], "adjacency", adj.tol))


class TestIntersectionArrays:
    def test_heawood(self):
        ia = drg_intersection_array(heawood_graph())
        assert ia.b == (3, 2, 2) and ia.c == (1, 1, 3)
        assert [ia.a(i) for i in range(1, 4)] == [0, 0, 0]
        assert ia.sphere_sizes() == (1, 3, 6, 4)

    def test_c5(self):
        ia = drg_intersection_array(cycle_graph(5))
        assert ia.b == (2, 1) and ia.c == (1, 1)

    def test_irregular_raises(self):
        with pytest.raises(ValueError):
            drg_intersection_array(path_graph(4))

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            drg_intersection_array(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_regular_non_drg_witness(self):
        # two triangles joined by a perfect matching (3-prism) is DRG;
        # use the 3-cube minus a perfect matching... simplest known non-DRG
        # regular graph: C_6 plus a diagonal? that's irregular. Take the
        # 3-regular graph on 8 vertices that is not vertex-transitive:
        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                                 (4, 5), (5, 6), (6, 7), (7, 4),
                                 (0, 4), (1, 5), (2, 7), (3, 6)])
        out = drg_intersection_array(g)
        assert isinstance(out, NotDistanceRegular)

    def test_intersection_matrix_shape(self):
        ia = drg_intersection_array(heawood_graph())
        mat = ia.intersection_matrix
        assert mat.shape == (4, 4)
        assert mat[0, 1] == 3 and mat[1, 0] == 1 and mat[3, 3] == 0

    def test_families_are_drg(self):
        for g in (cycle_graph(8), complete_graph(5), petersen_graph(),
                  johnson_graph(5, 2), shrikhande_graph(), rook_graph(),
                  complete_bipartite_graph(3, 3)):
            assert isinstance(drg_intersection_array(g), IntersectionArray), g.name


class TestF2Quotients:
    def test_heawood_matrices_and_eigenvalues(self):
        h = heawood_graph()
        ia = drg_intersection_array(h)
        adj, lap = drg_f2_quotients(ia, h)  # cross-validated inside
        assert np.array_equal(adj, [[0, 4, 0], [2, 0, 4], [0, 6, 0]])
        assert np.array_equal(lap, [[4, -4, 0], [-2, 6, -4], [0, -6, 6]])

    def test_quotient_eigenvalues_in_f2_spectra(self):
        for g in (cycle_graph(7), heawood_graph(), petersen_graph()):
            ia = drg_intersection_array(g)
            adj, lap = drg_f2_quotients(ia)
            tg = token_graph(g, 2)
            pi = distance_pair_partition(g, tg)
            sizes = pi.cell_sizes
            from tokenspectra.partitions import _quotient_eigenvalues
            a_spec = spectrum(tg.graph, "adjacency")
            l_spec = spectrum(tg.graph, "laplacian")
            a_small = Spectrum.of(_quotient_eigenvalues(adj, sizes),
                                  "adjacency", a_spec.tol)
            l_small = Spectrum.of(_quotient_eigenvalues(lap, sizes),
                                  "laplacian", l_spec.tol)
            assert multiset_contains(a_spec, a_small), g.name
            assert multiset_contains(l_spec, l_small), g.name

    def test_adjacency_radius_equality(self):
        # Perron value of the quotient equals the token graph's radius
        for g in (cycle_graph(9), heawood_graph(), petersen_graph()):
            ia = drg_intersection_array(g)
            adj, _ = drg_f2_quotients(ia)
            from tokenspectra.partitions import _f2_class_sizes, _quotient_eigenvalues
            rho_q = _quotient_eigenvalues(adj, _f2_class_sizes(ia)).max()
            rho = spectral_radius(token_graph(g, 2).graph)
            assert abs(rho - rho_q) < 1e-9, g.name

    def test_laplacian_radius_bipartite_equality(self):
        for g in (cycle_graph(6), cycle_graph(8), heawood_graph(),
                  complete_bipartite_graph(3, 3)):
            assert is_bipartite(g)
            ia = drg_intersection_array(g)
            _, lap = drg_f2_quotients(ia)
            from tokenspectra.partitions import _f2_class_sizes, _quotient_eigenvalues
            rho_q = _quotient_eigenvalues(lap, _f2_class_sizes(ia)).max()
            rho = laplacian_spectral_radius(token_graph(g, 2).graph)
            assert abs(rho - rho_q) < 1e-8, g.name

    def test_laplacian_radius_lower_bound_nonbipartite(self):
        for g in (cycle_graph(7), petersen_graph(), shrikhande_graph()):
            ia = drg_intersection_array(g)
            _, lap = drg_f2_quotients(ia)
            from tokenspectra.partitions import _f2_class_sizes, _quotient_eigenvalues
            rho_q = _quotient_eigenvalues(lap, _f2_class_sizes(ia)).max()
            rho = laplacian_spectral_radius(token_graph(g, 2).graph)
            assert rho >= rho_q - 1e-9, g.name

    def test_interlacing_corollary(self):
        # sorted quotient eigenvalues interlace twice the graph's eigenvalues
        for g in (cycle_graph(9), heawood_graph(), petersen_graph(),
                  johnson_graph(5, 2)):
            ia = drg_intersection_array(g)
            adj, _ = drg_f2_quotients(ia)
            from tokenspectra.partitions import _f2_class_sizes, _quotient_eigenvalues
            mu = sorted(_quotient_eigenvalues(adj, _f2_class_sizes(ia)),
                        reverse=True)
            theta = [v for v, _ in spectrum(g, "adjacency").distinct()][::-1]
            for i, m in enumerate(mu):
                assert 2 * theta[i + 1] - 1e-9 <= m <= 2 * theta[i] + 1e-9, g.name


class TestDistancePolynomials:
    def test_heawood_p3(self):
        ia = drg_intersection_array(heawood_graph())
        polys = distance_polynomials(ia, heawood_graph())
        assert np.allclose(polys[3].convert().coef, [0, -5 / 3, 0, 1 / 3])

    def test_p1_is_x(self):
        ia = drg_intersection_array(cycle_graph(6))
        polys = distance_polynomials(ia)
        assert np.allclose(polys[1].convert().coef, [0, 1])

    def test_c5_p2(self):
        ia = drg_intersection_array(cycle_graph(5))
        polys = distance_polynomials(ia, cycle_graph(5))
        assert np.allclose(polys[2].convert().coef, [-2, 0, 1])
        assert polys[2](2) == pytest.approx(2.0)  # |G_2(u)| on C_5

    def test_degrees_and_sphere_sizes(self):
        for g in (petersen_graph(), heawood_graph(), cycle_graph(8)):
            ia = drg_intersection_array(g)
            polys = distance_polynomials(ia, g)
            for i, p in enumerate(polys):
                assert p.degree() == i


class TestConjugatePolynomial:
    def test_heawood(self):
        h = heawood_graph()
        ia = drg_intersection_array(h)
        mesh = [v for v, _ in spectrum(h, "adjacency").distinct()]
        res = conjugate_polynomial_check(ia, mesh)
        assert np.allclose(res.poly.coef, [0, -2 / 3, 0, 1 / 12], atol=1e-9)
        root8 = 2 * math.sqrt(2)
        assert np.allclose(res.roots, [-root8, 0, root8], atol=1e-9)
        # mesh values +-1/4 at +-3
        p3 = distance_polynomials(ia)[3]
        assert res.poly(3.0) == pytest.approx(1 / p3(3.0))
        assert res.poly(-3.0) == pytest.approx(-1 / 4)

    def test_degree(self):
        g = petersen_graph()
        ia = drg_intersection_array(g)
        mesh = [v for v, _ in spectrum(g, "adjacency").distinct()]
        res = conjugate_polynomial_check(ia, mesh)
        assert res.poly.degree() == ia.d

    def test_wrong_mesh_size(self):
        ia = drg_intersection_array(cycle_graph(6))
        with pytest.raises(ValueError):
            conjugate_polynomial_check(ia, [1.0, 2.0])


class TestSRG:
    def test_detection(self):
        def params(g):
            p = srg_params_of(g)
            return None if p is None else (p.n, p.d, p.a, p.c)
        assert params(cycle_graph(5)) == (5, 2, 0, 1)
        assert params(petersen_graph()) == (10, 3, 0, 1)
        assert params(shrikhande_graph()) == (16, 6, 2, 2)
        assert params(rook_graph()) == (16, 6, 2, 2)
        assert params(heawood_graph()) is None  # diameter 3
        assert params(complete_graph(5)) is None  # diameter 1

    def test_infeasible_rejected(self):
        from tokenspectra.partitions import SRGParams
        with pytest.raises(ValueError):
            SRGParams(10, 3, 1, 1)

    def test_c5_quotients_and_bound(self):
        q = srg_quotients(srg_params_of(cycle_graph(5)), cycle_graph(5))
        assert np.array_equal(q.q_adjacency, [[0, 2], [2, 2]])
        assert np.array_equal(q.q_laplacian, [[2, -2], [-2, 2]])
        assert q.theta1 == pytest.approx(1 + math.sqrt(5))
        assert q.laplacian_bound == pytest.approx(4.0)
        rho_l = laplacian_spectral_radius(token_graph(cycle_graph(5), 2).graph)
        assert rho_l == pytest.approx(6.2361, abs=1e-3)
        assert rho_l >= q.laplacian_bound

    def test_theta_sum_consistency(self):
        for g in (cycle_graph(5), petersen_graph(), shrikhande_graph()):
            p = srg_params_of(g)
            q = srg_quotients(p)
            assert q.theta1 + q.theta2 == pytest.approx(2 * p.d + 2 * (p.a - p.c))
            assert np.trace(q.q_adjacency) == pytest.approx(q.theta1 + q.theta2)

    def test_quotient_eigenvalues_match_closed_form(self):
        for g in (cycle_graph(5), petersen_graph(), shrikhande_graph()):
            q = srg_quotients(srg_params_of(g), g)
            eigs = sorted(np.linalg.eigvals(q.q_adjacency).real)
            assert eigs == pytest.approx([q.theta2, q.theta1], abs=1e-9)
