"""Token graphs of finite simple graphs and their adjacency/Laplacian spectra."""

__version__ = "0.1.0"

from .analysis import (Check, DeletedRadii, KParamTable, Report, ScanReport,
                       ScanRow, complement_identity, conjecture_scan,
                       deleted_radii, heawood_case_study, johnson_report,
                       k_params, lew_bounds_check, table1_report,
                       token_laplacian_chain, token_radius_bounds)
from .corpus import (all_graphs, canonical_form, connected_graphs,
                     load_connected_corpus)
from .errors import (ContainmentError, Graph6Error, GuardExceededError,
                     NumericHealthError)
from .families import generate
from .graphs import (DistanceMatrix, Graph, complement, connected_components,
                     delete_vertices, distance_matrix, encode_graph6, girth,
                     graph_from_json, is_bipartite, parse_graph6,
                     read_graph6_file, read_graph6_lines, vertex_connectivity)
from .partitions import (ConjugatePolynomial, EquitableResult,
                         IntersectionArray, NotDistanceRegular, Partition,
                         QuotientPair, SRGParams, SRGQuotients,
                         conjugate_polynomial_check, distance_pair_partition,
                         distance_polynomials, drg_f2_quotients,
                         drg_intersection_array, is_equitable,
                         quotient_matrices, srg_params_of, srg_quotients)
from .spectra import (EigenDecomposition, MatchResult, Spectrum,
                      algebraic_connectivity, laplacian_spectral_radius,
                      multiset_contains, multiset_difference, spectral_radius,
                      spectrum, sym_eigen)
from .tokens import (BinomialMatrix, CommutationReport, SubsetIndexer,
                     TokenGraph, binomial_matrix, lift_vector, project_vector,
                     token_graph, verify_commutation)
from .walks import (LocalSpectrum, WalkRegularity, closed_walk_count,
                    closed_walk_count_exact, local_spectra, local_spectrum,
                    power_radius_estimate, spectral_projectors,
                    walk_regularity)
