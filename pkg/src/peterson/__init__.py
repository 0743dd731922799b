"""Equivariant Schubert calculus for type A Peterson varieties, in exact arithmetic."""

from .combinatorics import (
    Permutation, Subset, Substring, all_subsets, decompose_substrings,
    fixed_point_permutation, head, stirling2, tail, v_permutation,
)
from .errors import (
    DomainError, InexactDivision, NotInSpan, NotStable, ParseError, PetersonError,
    ResourceCapExceeded,
)
from .gkm import LocalizedClass, expand_localized, localize, oracle_check_monk, pointwise_product
from .groebner import GroebnerBasis, buchberger, normal_form
from .poly import MultiPoly, Rational, UniPoly
from .presentation import (
    giambelli_q_relation, ideal_K, monk_relation, quadratic_conjecture_check, vanishing_check,
)
from .schubert import (
    BasisExpansion, expand_monomial, giambelli_monomial, giambelli_sigma, giambelli_verify,
    monk_coefficient, monk_product, restrict_class, restrict_generator, stability_restrict,
    stirling_expansion,
)

__version__ = "0.1.0"
