"""Exact enumeration in the lattice D_n of Dyck paths under inclusion.

Every headline quantity is computed by at least two independent routes that
are required to agree: Catalan counts (closed form vs recurrence), q-analogs
(statistic sums vs recurrences and quotients), maximal chains (incidence
algebra vs hook-length formula), Mobius values (matrix inversion vs the
distributive-lattice criterion), and the q,t-Catalan polynomial (path
statistics vs exact rational evaluation of the partition sum).
"""

from .config import (DEFAULT_LIMITS, ENV_MAX_ORDER, LimitExceededError,
                     Limits, check_order)
from .paths import (CellStats, DyckPath, Partition, PathStats, catalan_closed,
                    catalan_recurrence, cell_stats, count_bad_paths,
                    enumerate_paths, is_below, partition_to_path, path_stats,
                    path_to_partition)
from .polynomials import BiPoly, UniPoly
from .poset import (AntichainCensus, DyckPoset, PointPoset, antichain_census,
                    antichain_ideal_bijection_check, build_poset, ideal_path,
                    jp_isomorphism_check, maximal_chains, min_antichain_cover,
                    min_chain_cover, mobius_direct, order_ideals, path_ideal,
                    point_poset, rank_sizes)
from .incidence import (ExactMatrix, chain_polynomial, chains_of_length,
                        delta_matrix, eta_matrix, interval_count,
                        invert_unitriangular, maximal_chain_count,
                        mobius_matrix, total_chain_matrix, total_chains,
                        zeta_matrix)
from .tableaux import (HookDiagram, hook_lengths,
                       maxchain_tableau_bijection_check, staircase_maxchain,
                       syt_count)
from .qt import (GH_POINT_SEED, PoleError, cn_area, cn_inv, cn_maj,
                 gh_evaluate, gh_pole_check, gh_sample_points, q_binomial,
                 q_factorial, q_int, qt_catalan, qt_specialize,
                 symmetry_check)
from .chromatic import (SimpleGraph, chromatic_polynomial,
                        count_colourings_brute, hasse_chromatic, hasse_graph)
from .parking import (AreaLabelPair, LabelledDyckPath, ParkingFunction,
                      area_from_parking, content_group_representatives,
                      count_parking_functions, enumerate_labelled_paths,
                      enumerate_parking_functions, is_parking_function,
                      labelled_from_vectors, labelled_to_parking,
                      parking_to_labelled, representative_leq,
                      representative_path, vector_conditions_ok, vectors_of)
from .oeis import (REGISTRY, SequenceEntry, SnapshotParseError,
                   UnknownSequenceError, VerificationReport, load_snapshot,
                   parse_snapshot, verify_sequence)

__all__ = [name for name in dir() if not name.startswith("_")]
