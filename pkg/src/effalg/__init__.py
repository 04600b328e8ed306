"""effalg: a toolkit for finite effect algebras.

Validate the defining axioms of a partial-sum table, derive its order
structure, decide every standard structural property with witnesses,
construct the classic finite families, enumerate all effect algebras of
small order up to isomorphism, run the structural laws as executable
checks over the enumeration, and certify the behaviour of four infinite
families through finitely-representable elements.
"""

from .core import (
    FiniteEffectAlgebra,
    Multiset,
    InvalidModelError,
    InvariantViolation,
    OrderRelation,
    ValidationReport,
    Violation,
    derive_order,
    infimum,
    is_orthogonal,
    lower_bounds,
    minimal_upper_bounds,
    oplus_multiset,
    require_valid,
    supremum,
    upper_bounds,
    validate,
)
from .enumeration import (
    ENUMERATION_CAP,
    SearchConstraint,
    SearchResult,
    canonical_form,
    canonicalize,
    count,
    enumerate_up_to_iso,
    permute,
    search,
)
from .models import (
    EfaParseError,
    boolean_algebra,
    chain,
    even_subset_omp,
    horizontal_sum,
    load,
    parse_recipe,
    save,
)
from .properties import (
    PROFILE_FLAGS,
    Decision,
    PropertyProfile,
    atom_decomposition,
    atoms,
    atoms_below,
    classify,
    is_archimedean,
    is_atomic,
    is_atomistic,
    is_disjunctive,
    is_orthoatomistic,
    is_orthoatomistic_sets,
    is_orthocomplete,
    is_principal,
    is_weakly_orthocomplete,
    isotropic_index,
    profile,
)
from .theorems import CHECK_IDS, TheoremReport, run_all, run_exhaustive

__version__ = "0.1.0"

__all__ = [
    "FiniteEffectAlgebra",
    "Multiset",
    "InvalidModelError",
    "InvariantViolation",
    "OrderRelation",
    "ValidationReport",
    "Violation",
    "validate",
    "require_valid",
    "derive_order",
    "is_orthogonal",
    "oplus_multiset",
    "upper_bounds",
    "lower_bounds",
    "minimal_upper_bounds",
    "supremum",
    "infimum",
    "PROFILE_FLAGS",
    "Decision",
    "PropertyProfile",
    "atoms",
    "atoms_below",
    "atom_decomposition",
    "classify",
    "is_principal",
    "isotropic_index",
    "is_archimedean",
    "is_atomic",
    "is_atomistic",
    "is_orthoatomistic",
    "is_orthoatomistic_sets",
    "is_disjunctive",
    "is_orthocomplete",
    "is_weakly_orthocomplete",
    "profile",
    "boolean_algebra",
    "even_subset_omp",
    "chain",
    "horizontal_sum",
    "parse_recipe",
    "load",
    "save",
    "EfaParseError",
    "ENUMERATION_CAP",
    "SearchConstraint",
    "SearchResult",
    "canonical_form",
    "canonicalize",
    "count",
    "enumerate_up_to_iso",
    "permute",
    "search",
    "CHECK_IDS",
    "TheoremReport",
    "run_all",
    "run_exhaustive",
    "__version__",
]
