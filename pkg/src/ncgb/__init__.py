"""Two-sided Groebner bases in free associative algebras over the rationals."""

from .words import (
    EMPTY,
    Alphabet,
    LLexOrdering,
    Occurrence,
    Overlap,
    compare_llex,
    occurrences,
    overlaps,
)
from .polynomial import (
    NcPolynomial,
    PolynomialSyntaxError,
    add_scaled,
    format_polynomial,
    leading,
    make_monic,
    parse_polynomial,
    sandwich,
)
from .division import DivisionResult, divide, normal_remainder
from .obstructions import (
    ModuleTerm,
    Obstruction,
    classify,
    compare_module_terms,
    compare_obstructions,
    has_overlap,
    nontrivial_obstructions,
    s_polynomial,
)
from .criteria import (
    CriteriaReport,
    backward_criterion,
    leading_word_criterion,
    multiply_criterion,
    tail_reduction,
)
from .engine import (
    BasisState,
    EngineConfig,
    RunStats,
    buchberger,
    interreduce,
    select_next,
    verify_groebner,
)

__version__ = "0.1.0"
