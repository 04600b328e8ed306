"""Finitely-representable elements of four infinite effect algebras.

Each submodule fixes one concrete countable family, implements its exact
partial sum, order and orthosupplement on the finite representations, and
ships targeted checkers for the non-existence claims the family was built
to witness.  Infinite quantification is replaced by two mechanisms:

* defeaters: constructive refutations that map any candidate bound to a
  strictly better bound or to a structural rejection, and
* finite reductions: arguments that confine all candidates to a finite
  residue, which is then scanned exhaustively.

Every defeater output is re-verified through the family's own order
predicate before it is reported; nothing is trusted as prose.

Families:

* ``fincof``:         finite and cofinite subsets of ℕ (a Boolean algebra
  that is not orthocomplete).
* ``blocks``:         four infinite blocks, the six block unions, and
  finite perturbations (weakly orthocomplete OMP, neither orthocomplete
  nor a lattice).
* ``extended_chain``: 0, 1, 2, ... together with ..., 2', 1', 0'
  (weakly orthocomplete atomic chain that is not orthoatomistic).
* ``balanced``:       finite sets meeting two countable sides in equal
  cardinality, plus their complements (orthoatomistic OMP that is not
  weakly orthocomplete).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Refutation:
    """Outcome of throwing one candidate at a non-existence claim.

    ``kind`` says how the candidate failed; ``witness`` is the defeating
    object (a better bound, or the family element the candidate misses).
    ``verified`` is set only after the defeat has been re-checked with the
    family's own membership and order predicates.
    """

    claim: str
    candidate: Any
    kind: str
    witness: Any
    detail: str
    verified: bool


from . import balanced, blocks, extended_chain, fincof  # noqa: E402

__all__ = ["Refutation", "fincof", "blocks", "extended_chain", "balanced"]
