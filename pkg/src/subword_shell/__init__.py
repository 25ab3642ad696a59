"""Subword complexes in Coxeter groups and their Alexander dual ideals."""

from .coxeter import (
    CoxeterSystem, GroupElement, bruhat_leq, demazure_product, element_of_word,
    is_reduced_word, left_descents, reduced_words, right_descents,
)
from .words import Subword, contains, demazure_census, make_repeated_word, representations
from .complexes import (
    SimplicialComplex, alexander_dual_ideal, deletion, is_shelling, is_shifted,
    lex_dual_shelling, link, minimal_nonfaces, subword_complex, vertex_decompose_shelling,
)
from .ideals import (
    BettiTable, HilbertNumerator, MonomialIdeal, betti_from_certificate, height,
    hilbert_numerator, linear_quotients_certificate, regularity_of_SR_ideal,
    set_via_min_formula,
)
from .special import SpecialClassReport, detect_and_factor
from .analysis import AnalysisReport, analyze

__version__ = "0.1.0"
