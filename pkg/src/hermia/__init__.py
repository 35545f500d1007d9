"""hermia: exact spectral analysis of digraphs via the Hermitian adjacency matrix.

Core objects: loop-free digraphs as pair-state tables, their Hermitian
adjacency matrices over the Gaussian integers, exact integer characteristic
polynomials and inertia, twin reduction/expansion, four-way switching with
witness search, exhaustive small-order enumeration, cospectral collision
searches, and exact digraph counting.
"""

from .digraph import (
    Digraph,
    PairState,
    canonical_form,
    digraph_from_edges,
    digraph_from_hermitian,
    digraph_from_json,
    digraph_to_json,
    format_digraph,
    hermitian,
    is_isomorphic,
    is_self_converse,
    parse_digraph,
    read_digraph,
    write_digraph,
)
from .errors import (
    ArityMismatch,
    DigraphParseError,
    EdgeConflict,
    HermiaError,
    InternalInconsistency,
    LoopRejected,
    NonConvergence,
    NotAppropriate,
    NotEquitable,
    PatternMismatch,
    SearchTimeout,
    SizeMismatch,
)
from .gaussian import GaussianInt, GaussianMatrix, HermitianMatrix
from .spectra import (
    CharPoly,
    Inertia,
    Spectrum,
    TriangleBalance,
    char_poly,
    cospectral,
    eigenvalues,
    inertia,
    inertia_from_charpoly,
    interlacing_holds,
    rank,
    spectral_radius,
    spectrum_of,
    trace_power,
    triangle_balance,
)
from .twins import (
    ExpansionVector,
    are_twins,
    expansion_blocks,
    is_reduced,
    twin_classes,
    twin_expand,
    twin_reduction,
)
from .switching import (
    EquivalenceWitness,
    SwitchingMatrix,
    apply_switching,
    switching_equivalent,
    verify_witness,
    whds_over,
)
from .families import (
    QuadraticValue,
    QuotientMatrix,
    c3_whds_predicate,
    charpoly_te,
    charpoly_te_kminus,
    charpoly_te_ta,
    charpoly_te_tb,
    charpoly_te_tminus,
    closed_form_spectrum,
    explicit_spectrum_cases,
    named_digraph,
    negative_tetrahedron,
    negative_triangle,
    oriented_c3,
    quotient_matrix,
    te_kminus_counts,
)
from .enumeration import (
    CollisionReport,
    DigraphCorpus,
    ShdsReport,
    build_corpus,
    classify_one_negative,
    expansion_collision_search,
    scan_order6_one_negative,
    shds_check,
    tminus_collision_search,
    verify_lambda_max_one,
    verify_tr_theorem,
)
from .counting import (
    count_digraphs,
    count_self_converse,
    cycle_types,
    fraction_table,
    self_converse_fraction,
    self_converse_fraction_sci,
)

__version__ = "0.1.0"
