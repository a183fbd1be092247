"""Exact Schubert-calculus polynomials: slides, Stanley, and transitions."""

from ._limits import TermBudgetExceeded, term_budget
from .perm import (
    Perm,
    Transposition,
    apply_transposition,
    canonical,
    code,
    cross,
    descent_set,
    format_perm,
    from_code,
    grassmannian,
    inverse,
    is_covering,
    last_descent,
    length,
    parse_perm,
    shift,
    to_partition,
)
from .poly import (
    NonExpandableError,
    Polynomial,
    dominates,
    flatten,
    fundamental_quasisym,
    refines,
    slide_expand,
    slide_polynomial,
    substitute_zero,
)
from .schubert import (
    NoSolutionError,
    schubert,
    schubert_coefficient,
    schubert_expand,
    schubert_via_compatible,
    schubert_via_slides,
    schur,
    stanley,
)
from .transition import (
    Chain,
    cross_identity_check,
    format_chain,
    lr_chains,
    lr_coefficient,
    monk_multiply,
    normalize_chain,
    schubert_times_schur,
    truncate_last_descent,
    truncation_paths,
    truncation_start,
)
from .verify import SUITES, CounterexampleError
from .words import (
    VIRTUAL,
    compatible_sequences,
    greedy_compatible,
    is_reduced,
    iter_reduced_words,
    permutation_of_word,
    reduced_words,
    run_decomposition,
    sequence_weight,
    strong_descent_composition,
    weak_descent_composition,
)

__version__ = "0.1.0"

__all__ = [
    "Perm",
    "Transposition",
    "Polynomial",
    "Chain",
    "VIRTUAL",
    "NonExpandableError",
    "NoSolutionError",
    "CounterexampleError",
    "TermBudgetExceeded",
    "SUITES",
    "apply_transposition",
    "canonical",
    "code",
    "compatible_sequences",
    "cross",
    "cross_identity_check",
    "descent_set",
    "dominates",
    "flatten",
    "format_chain",
    "format_perm",
    "from_code",
    "fundamental_quasisym",
    "grassmannian",
    "greedy_compatible",
    "inverse",
    "is_covering",
    "is_reduced",
    "iter_reduced_words",
    "last_descent",
    "length",
    "lr_chains",
    "lr_coefficient",
    "monk_multiply",
    "normalize_chain",
    "parse_perm",
    "permutation_of_word",
    "reduced_words",
    "refines",
    "run_decomposition",
    "schubert",
    "schubert_coefficient",
    "schubert_expand",
    "schubert_times_schur",
    "schubert_via_compatible",
    "schubert_via_slides",
    "schur",
    "sequence_weight",
    "shift",
    "slide_expand",
    "slide_polynomial",
    "stanley",
    "strong_descent_composition",
    "substitute_zero",
    "term_budget",
    "to_partition",
    "truncate_last_descent",
    "truncation_paths",
    "truncation_start",
    "weak_descent_composition",
]
