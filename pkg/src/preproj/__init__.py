"""Exact invariants of preprojective algebras of cycle quivers.

Trace generating functions of diagonal graded automorphisms, Molien-averaged
Hilbert series of fixed rings, generator/relation discovery with rewriting
certificates, and Hilbert-series-level freeness/projectivity diagnostics —
all over exact cyclotomic arithmetic.
"""

from .cyclotomic import CycNum, order_as_root_of_unity, root_of_unity
from .fixedring import (
    DiagnosisReport,
    FixedGenerator,
    Presentation,
    check_ambiguities,
    count_irreducible_words,
    diagnose_projectivity,
    discover_relations,
    fixed_paths_up_to,
    minimal_generators,
    presentation_from_json,
    presentation_to_json,
    verify_generators,
    verify_presentation,
)
from .molien import (
    MolienReport,
    hilbert_A,
    hilbert_eA,
    matrix_hilbert_A,
    molien_matrix,
    molien_report,
    molien_scalar,
    molien_vector,
)
from .parsing import (
    ParseError,
    format_ratfun,
    format_ratfun_factored,
    parse_ratfun,
    parse_scalar,
)
from .quiver import (
    AutGroup,
    AutomorphismError,
    CycleQuiver,
    DiagonalAut,
    GroupBoundError,
    SimplePath,
    aut_order,
    generate_group,
    graded_basis,
    make_aut,
    make_cycle_quiver,
    path_eigenvalue,
)
from .ratfun import Poly, RatFun, RatMatrix, pole_order_at_one, series_expand
from .trace import (
    TraceReport,
    p_at_one_factorization,
    total_trace_closed,
    trace_oracle,
    trace_report,
    vector_trace_closed_34,
    vector_trace_closed_35,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
