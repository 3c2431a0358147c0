"""Signed regular graphs with exactly two distinct adjacency eigenvalues.

Constructions (negated line graphs of complete graphs, the 8-regular
weighing-matrix block family, the doubling chains) and exact verification
of their spectra.
"""

from .core import (GraphError, GroundPartitionInfo, SignedGraph, SignedMatrix,
                   balanced_components, complete_positive, from_edge_list,
                   is_bipartite_ground, is_connected, negate, regularity, switch)
from .doubling import ac, chain, pentagon_seed
from .jacobi import eigenvalues_float, jacobi_eigh
from .linegraph import incidence, line_graph, neg_line_complete, verify_line_spectrum
from .params import AdmissibleTriple, admissible_triples, classify, feasible_orders, table1
from .qext import QExt
from .spectra import (ExactSpectrum, FsrsgParams, NoSuchSTE, exact_multiplicities,
                      fsrsg_parameters, is_weighing, ramanujan_check, verify_ste_exact)
from .starcomp import find_star_set, is_star_set, verify_partition
from .weighing import (WeighPair, assemble_block, block8, build_w, kronecker,
                       pattern_x, pattern_y, search_m4_pairs, semi_orthogonal)

__version__ = "0.1.0"
