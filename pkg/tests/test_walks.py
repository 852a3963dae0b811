import math

import numpy as np
import pytest

from tokenspectra.families import (complete_graph, cycle_graph, heawood_graph,
                                   path_graph, petersen_graph)
from tokenspectra.graphs import Graph, distance_matrix
from tokenspectra.tokens import token_graph
from tokenspectra.walks import (closed_walk_count, closed_walk_count_exact,
                                eccentricity_bound_holds, local_spectra,
                                local_spectrum, power_radius_estimate,
                                spectral_projectors, walk_regularity)

from .oracles import brute_closed_walks


class TestLocalSpectra:
    def test_weights_sum_to_one(self):
        for g in (path_graph(5), petersen_graph(), cycle_graph(9)):
            for loc in local_spectra(g):
                assert abs(sum(w for _, w in loc.pairs) - 1.0) < 1e-8

    def test_vertex_transitive_splits_multiplicity(self):
        from tokenspectra.spectra import spectrum
        g = cycle_graph(6)
        spec_mults = {round(v, 6): m for v, m in
                      spectrum(g, "adjacency").distinct()}
        for loc in local_spectra(g):
            for theta, weight in loc.pairs:
                assert weight == pytest.approx(spec_mults[round(theta, 6)] / g.n,
                                               abs=1e-9)

    def test_p3_center_misses_zero(self):
        loc = local_spectrum(path_graph(3), 1)
        assert all(abs(theta) > 1e-9 for theta, _ in loc.pairs)
        assert loc.mesh_size == 1

    def test_sum_over_vertices_gives_multiplicity(self):
        g = petersen_graph()
        locs = local_spectra(g)
        totals: dict[float, float] = {}
        for loc in locs:
            for theta, w in loc.pairs:
                totals[round(theta, 6)] = totals.get(round(theta, 6), 0.0) + w
        from tokenspectra.spectra import spectrum
        for value, mult in spectrum(g, "adjacency").distinct():
            assert totals[round(value, 6)] == pytest.approx(mult, abs=1e-7)

    def test_projector_reconstruction(self):
        for g in (path_graph(6), petersen_graph()):
            projectors = spectral_projectors(g)
            ident = sum(e for _, e in projectors)
            weighted = sum(theta * e for theta, e in projectors)
            assert np.abs(ident - np.eye(g.n)).max() < 1e-7
            assert np.abs(weighted - g.adjacency).max() < 1e-7

    def test_requires_connected(self):
        with pytest.raises(ValueError):
            local_spectra(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_eccentricity_bound(self, corpus_le6):
        for g in corpus_le6:
            assert eccentricity_bound_holds(g), g.label


class TestClosedWalks:
    def test_length_zero_and_two(self):
        g = path_graph(4)
        for u in range(4):
            assert closed_walk_count(g, u, 0) == pytest.approx(1.0, abs=1e-9)
            assert closed_walk_count(g, u, 2) == pytest.approx(g.degree(u),
                                                               abs=1e-9)

    def test_c4_length_four(self):
        # oracle: explicit enumeration (8 = (2^4 + (-2)^4)/4; see ledger)
        assert brute_closed_walks(cycle_graph(4), 0, 4) == 8
        assert closed_walk_count_exact(cycle_graph(4), 0, 4) == 8
        assert closed_walk_count(cycle_graph(4), 0, 4) == pytest.approx(8.0,
                                                                        abs=1e-6)

    def test_bipartite_odd_walks_vanish(self):
        g = heawood_graph()
        for ell in (1, 3, 5, 7):
            assert closed_walk_count(g, 0, ell) == pytest.approx(0.0, abs=1e-7)
            assert closed_walk_count_exact(g, 0, ell) == 0

    def test_expansion_matches_integer_powers(self, corpus_le6):
        for g in corpus_le6:
            if g.n > 6:
                continue
            for u in (0, g.n - 1):
                for ell in range(0, 13):
                    exact = closed_walk_count_exact(g, u, ell)
                    approx = closed_walk_count(g, u, ell)
                    assert abs(approx - exact) <= 1e-6 * (exact + 1), (g.label, u, ell)

    def test_exact_matches_enumeration(self):
        g = petersen_graph()
        for ell in range(0, 6):
            assert closed_walk_count_exact(g, 3, ell) == brute_closed_walks(g, 3, ell)


class TestPowerRadius:
    def test_complete_graph_limit(self):
        seq = power_radius_estimate(complete_graph(5), 0, 30)
        assert abs(seq[-1][1] - 4.0) < 0.25
        assert all(s <= 4.0 + 1e-9 for _, s in seq)

    def test_c9_upper_bounded_by_radius(self):
        seq = power_radius_estimate(cycle_graph(9), 0, 40)
        last = seq[-1][1]
        assert last <= 2.0 + 1e-12 and abs(last - 2.0) < 0.2

    def test_f2_c9_bounded_by_4cos(self):
        tg = token_graph(cycle_graph(9), 2)
        seq = power_radius_estimate(tg.graph, 0, 40)
        bound = 4 * math.cos(math.pi / 9)
        assert seq[-1][1] <= bound + 1e-12
        # slow but monotone-ish approach from below; report, don't assume
        assert seq[-1][1] > 3.0
        assert seq[-1][1] >= seq[0][1]

    def test_even_lengths_only(self):
        seq = power_radius_estimate(cycle_graph(5), 0, 12)
        assert all(ell % 2 == 0 for ell, _ in seq)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            power_radius_estimate(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 10)
        with pytest.raises(ValueError):
            power_radius_estimate(cycle_graph(5), 0, 2)


class TestWalkRegularity:
    def test_transitive_families_are_walk_regular(self):
        for g in (cycle_graph(6), complete_graph(5), petersen_graph(),
                  heawood_graph()):
            flags = walk_regularity(g)
            assert flags.walk_regular and flags.spectrally_regular
            assert flags.vertex_deleted_cospectral

    def test_p4_is_not(self):
        flags = walk_regularity(path_graph(4))
        assert not flags.walk_regular
        assert not flags.spectrally_regular
        assert not flags.vertex_deleted_cospectral

    def test_walk_regular_implies_regular(self, corpus_le6):
        for g in corpus_le6:
            if walk_regularity(g).walk_regular:
                assert g.is_regular(), g.label

    def test_flags_consistent_on_corpus(self, corpus_le6):
        # the classification must never raise the internal-consistency error
        for g in corpus_le6:
            flags = walk_regularity(g)
            assert (flags.walk_regular == flags.spectrally_regular
                    == flags.vertex_deleted_cospectral)

    def test_ecc_vs_mesh_on_families(self):
        for g in (petersen_graph(), heawood_graph(), cycle_graph(9)):
            assert eccentricity_bound_holds(g, distance_matrix(g))
