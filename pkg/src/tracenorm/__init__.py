"""Trace norms of r-partite matrices and graphs: constructions, bounds, exhaustive search."""

from .bounds import (BoundReport, EqualityCertificate, bom_bound, bon_bound, check_equality_th1,
                     check_equality_thum, check_equality_thun, eab_bound, kmb_bound, km_bound,
                     mb_bound, prop1_lower, prop2_lower)
from .linalg import (Spectrum, hermitian_eigenvalues, kron, max_abs_entry, singular_values,
                     trace_norm)
from .matrices import (NamedMatrix, fourier_complex_hadamard, is_conference, is_hadamard,
                       paley_conference, paley_hadamard_I, paley_hadamard_II, quadratic_character,
                       sylvester)
from .partite import (Graph, PartiteMatrix, Partition, complete_multipartite, construct_th3,
                      construct_th4, kron_hadamard, pad, validate_partite)
from .search import (RecordBook, SearchRecord, chromatic_number, graph_from_index,
                     max_trace_norm_graphs, random_partite_matrix_probe)

__version__ = "0.1.0"
