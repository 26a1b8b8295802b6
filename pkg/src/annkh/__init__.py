"""Annular Khovanov homology of braid closures over GF(2).

Braid words, Garside normal forms, the resolution-cube chain complex of
the annular closure with its three gradings, the homological word-problem
decision procedures, the distinguished bottom-k class, and the Burau
representation with exact Laurent arithmetic.
"""

from .burau import (
    BivariatePoly,
    LaurentMatrix,
    LaurentPoly,
    bigelow_kernel_word,
    burau_kernel_check,
    burau_matrix,
    char_poly,
    laurent_det,
)
from .cube import (
    DEFAULT_MAX_CROSSINGS,
    AnnularComplex,
    CrossingLimitError,
    EnhancedGenerator,
    build_complex,
    enhanced_generator,
    plamenevskaya_generator,
)
from .diagram import AnnularClosureDiagram, ResolutionState, closure_diagram
from .garside import NormalForm, left_normal_form, words_equal
from .homology import homology_full, homology_graded, kh, poincare_polynomial, skh, total_dim
from .invariants import (
    Decision,
    PlamenevskayaClass,
    VeeringReport,
    flype_pair,
    is_trivial,
    plamenevskaya,
    right_veering_obstruction,
    skh_trivial,
    words_equal_homological,
)
from .words import BraidWord, Permutation, parse_word

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Permutation",
    "parse_word",
    "NormalForm",
    "left_normal_form",
    "words_equal",
    "AnnularClosureDiagram",
    "ResolutionState",
    "closure_diagram",
    "DEFAULT_MAX_CROSSINGS",
    "CrossingLimitError",
    "EnhancedGenerator",
    "AnnularComplex",
    "build_complex",
    "enhanced_generator",
    "plamenevskaya_generator",
    "homology_graded",
    "homology_full",
    "skh",
    "kh",
    "poincare_polynomial",
    "total_dim",
    "Decision",
    "PlamenevskayaClass",
    "VeeringReport",
    "skh_trivial",
    "is_trivial",
    "words_equal_homological",
    "plamenevskaya",
    "right_veering_obstruction",
    "flype_pair",
    "LaurentPoly",
    "LaurentMatrix",
    "BivariatePoly",
    "burau_matrix",
    "laurent_det",
    "char_poly",
    "burau_kernel_check",
    "bigelow_kernel_word",
    "__version__",
]
