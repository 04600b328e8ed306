"""Structural property deciders for finite effect algebras.

Every decider takes a valid model and answers one question: is the table
an orthoalgebra, an orthomodular poset, a lattice; is it Archimedean,
orthocomplete, weakly orthocomplete; is it atomic, atomistic,
orthoatomistic, disjunctive.  Deciders that can fail carry a witness.
``profile`` runs all of them once and enforces the implications that are
theorems on finite models, raising ``InvariantViolation`` on any breach:
a breach always means a defect in the deciders, not new mathematics.

Conventions adopted here:

* "sum of atoms" means the sum of an orthogonal *multiset* of atoms
  (repetitions allowed), which is what makes chains orthoatomistic via
  n = 1 + 1 + ... + 1.  The stricter reading with pairwise-distinct atoms
  is decided separately (``is_orthoatomistic_sets``) and reported as a
  supplementary flag so the distinction stays observable.
* "c ∧ b = 0" in the disjunctivity test means: 0 is the only common lower
  bound of c and b (then the infimum exists and is 0).
* A "minimal upper bound" of an orthogonal system means a minimal element
  of the set of upper bounds of its finite partial sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Mapping

from .core import (
    FiniteEffectAlgebra,
    InvariantViolation,
    _bits,
    derive_order,
    infimum,
    require_valid,
    supremum,
)


@dataclass(frozen=True)
class Decision:
    """A boolean verdict plus whatever evidence the decider produced."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Classification:
    orthoalgebra: bool
    omp: bool
    lattice: bool
    oml: bool
    witnesses: Mapping[str, Any]


@lru_cache(maxsize=256)
def atoms(alg: FiniteEffectAlgebra) -> tuple[int, ...]:
    """Minimal nonzero elements, ascending."""
    order = derive_order(alg)
    return tuple(a for a in range(1, alg.size) if order.down[a] == (1 << a) | 1)


def atoms_below(alg: FiniteEffectAlgebra, a: int) -> tuple[int, ...]:
    order = derive_order(alg)
    return tuple(t for t in atoms(alg) if order.le(t, a))


def is_principal(alg: FiniteEffectAlgebra, a: int) -> bool:
    """b + c <= a whenever b, c <= a and b + c is defined (b = c allowed)."""
    order = derive_order(alg)
    below = list(order.below(a))
    for i, b in enumerate(below):
        for c in below[i:]:
            s = alg.sum_of(b, c)
            if s is not None and not order.le(s, a):
                return False
    return True


@lru_cache(maxsize=256)
def classify(alg: FiniteEffectAlgebra) -> Classification:
    """Orthoalgebra / orthomodular poset / lattice / orthomodular lattice.

    The OMP verdict is computed twice, from principality and from
    "a + b is the join of every orthogonal pair"; the two routes are
    theorems of each other, so a disagreement raises.
    """
    require_valid(alg)
    order = derive_order(alg)
    n = alg.size
    witnesses: dict[str, Any] = {}

    orthoalgebra = True
    for a in range(1, n):
        if alg.defined(a, a):
            orthoalgebra = False
            witnesses["orthoalgebra"] = a
            break

    omp = True
    for a in range(n):
        if not is_principal(alg, a):
            omp = False
            witnesses["omp"] = a
            break

    omp_by_joins = True
    for a, b, c in alg.defined_pairs():
        if supremum(alg, (a, b)) != c:
            omp_by_joins = False
            break
    if omp != omp_by_joins:
        raise InvariantViolation(
            f"OMP routes disagree on {alg.name or 'model'}: "
            f"principality={omp}, join-of-orthogonal-pairs={omp_by_joins}")

    lattice = True
    for a in range(n):
        for b in range(a + 1, n):
            if supremum(alg, (a, b)) is None:
                lattice = False
                ub = order.up[a] & order.up[b]
                witnesses["lattice"] = {
                    "kind": "no_supremum",
                    "pair": (a, b),
                    "minimal_upper_bounds": sorted(
                        m for m in _bits(ub) if _is_minimal_in(order, m, ub)),
                }
                break
            if infimum(alg, (a, b)) is None:
                lattice = False
                witnesses["lattice"] = {"kind": "no_infimum", "pair": (a, b)}
                break
        if not lattice:
            break

    return Classification(orthoalgebra, omp, lattice, omp and lattice, witnesses)


def _is_minimal_in(order, m: int, mask: int) -> bool:
    return bool(mask >> m & 1) and order.down[m] & mask == 1 << m


def isotropic_index(alg: FiniteEffectAlgebra, a: int) -> int | float:
    """Largest k such that the k-fold sum of a is defined; ∞ for a = 0."""
    require_valid(alg)
    if a == 0:
        return math.inf
    k = 1
    acc = a
    while True:
        nxt = alg.sum_of(acc, a)
        if nxt is None:
            return k
        acc = nxt
        k += 1
        if k > alg.size:
            # The partial sums of a nonzero element form a strictly
            # increasing chain, so a finite valid model cannot get here.
            raise InvariantViolation(f"unbounded isotropic chain at element {alg.label(a)}")


def is_archimedean(alg: FiniteEffectAlgebra) -> bool:
    """Every nonzero element has a finite isotropic index (runs the real scan)."""
    return all(isotropic_index(alg, a) != math.inf for a in range(1, alg.size))


def is_atomic(alg: FiniteEffectAlgebra) -> bool:
    """Every nonzero element dominates an atom (always true on finite models,
    but decided by the actual scan)."""
    order = derive_order(alg)
    atom_mask = 0
    for t in atoms(alg):
        atom_mask |= 1 << t
    return all(order.down[a] & atom_mask for a in range(1, alg.size))


def is_atomistic(alg: FiniteEffectAlgebra) -> Decision:
    """Every nonzero element is the supremum of the atoms below it."""
    for a in range(1, alg.size):
        if supremum(alg, atoms_below(alg, a)) != a:
            return Decision(False, a)
    return Decision(True)


@lru_cache(maxsize=256)
def _atom_reach(alg: FiniteEffectAlgebra) -> tuple[int, dict[int, tuple[int, int]]]:
    """Closure of {0} under x -> x + atom, with parent links for backtracking.

    An element is a sum of an orthogonal multiset of atoms exactly when it
    lies in this closure: a defined total forces every sub-sum to be
    defined, so growing one atom at a time loses nothing.
    """
    require_valid(alg)
    ats = atoms(alg)
    parent: dict[int, tuple[int, int]] = {}
    reached = 1  # {0}
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for t in ats:
                s = alg.sum_of(x, t)
                if s is not None and not reached >> s & 1:
                    reached |= 1 << s
                    parent[s] = (x, t)
                    nxt.append(s)
        frontier = nxt
    return reached, parent


def atom_decomposition(alg: FiniteEffectAlgebra, a: int) -> tuple[int, ...] | None:
    """A multiset of atoms summing to a (sorted), or ``None`` if unreachable."""
    reached, parent = _atom_reach(alg)
    if not reached >> a & 1:
        return None
    out: list[int] = []
    while a != 0:
        a, t = parent[a]
        out.append(t)
    return tuple(sorted(out))


def is_orthoatomistic(alg: FiniteEffectAlgebra) -> Decision:
    """Every nonzero element is a sum of an orthogonal multiset of atoms.

    On success the witness maps every nonzero element to one decomposition.
    """
    reached, _ = _atom_reach(alg)
    for a in range(1, alg.size):
        if not reached >> a & 1:
            return Decision(False, a)
    return Decision(True, {a: atom_decomposition(alg, a) for a in range(1, alg.size)})


def is_orthoatomistic_sets(alg: FiniteEffectAlgebra) -> bool:
    """Strict-set variant: decompositions may not repeat an atom.

    Supplementary flag only; the headline decider is ``is_orthoatomistic``.
    """
    require_valid(alg)
    order = derive_order(alg)
    ats = atoms(alg)

    def reachable(target: int) -> bool:
        memo: dict[tuple[int, int], bool] = {}

        def go(x: int, i: int) -> bool:
            if x == target:
                return True
            key = (x, i)
            if key in memo:
                return memo[key]
            ok = False
            for j in range(i, len(ats)):
                s = alg.sum_of(x, ats[j])
                # partial sums of a decomposition of `target` stay below it
                if s is not None and order.le(s, target) and go(s, j + 1):
                    ok = True
                    break
            memo[key] = ok
            return ok

        return go(0, 0)

    return all(reachable(a) for a in range(1, alg.size))


def is_disjunctive(alg: FiniteEffectAlgebra) -> Decision:
    """Whenever a is not below b, some nonzero c <= a meets b only in 0."""
    order = derive_order(alg)
    for a in range(alg.size):
        for b in range(alg.size):
            if order.le(a, b):
                continue
            if not any(order.down[c] & order.down[b] == 1
                       for c in _bits(order.down[a] & ~1)):
                return Decision(False, (a, b))
    return Decision(True)


@dataclass(frozen=True)
class OrthoScan:
    orthocomplete: Decision
    weakly_orthocomplete: Decision
    systems_checked: int


@lru_cache(maxsize=256)
def _ortho_scan(alg: FiniteEffectAlgebra) -> OrthoScan:
    """Enumerate every orthogonal multiset and run both completeness checks.

    A multiset of nonzero elements is an orthogonal system iff its total
    sum is defined, so the search extends nondecreasing value sequences and
    prunes on an undefined total.  Multiplicities are implicitly bounded by
    the isotropic indices.  Infinite systems over a finite carrier only add
    copies of 0 (anything else would have infinite isotropic index), so the
    finite enumeration is exhaustive.

    Orthocompleteness needs the supremum of the partial-sum set of every
    system to exist; weak orthocompleteness tolerates a missing supremum as
    long as there is no minimal upper bound either.  Both are theorems on
    finite models, but the checks are performed for real here.
    """
    require_valid(alg)
    order = derive_order(alg)
    n = alg.size
    full = (1 << n) - 1
    oc_witness: list[tuple[int, ...]] = []
    woc_witness: list[tuple[int, ...]] = []
    count = 0
    stack: list[int] = []

    def least_of(mask: int) -> int | None:
        for u in _bits(mask):
            if not mask & ~order.up[u]:
                return u
        return None

    def extend(min_v: int, total: int, psums: int, ub: int) -> None:
        nonlocal count
        for v in range(min_v, n):
            new_total = alg.sum_of(total, v)
            if new_total is None:
                continue
            new_psums = psums
            new_ub = ub
            for p in _bits(psums):
                s = alg.sum_of(p, v)
                if s is None:
                    raise InvariantViolation(
                        "a sub-multiset sum is undefined although the total is defined")
                if not new_psums >> s & 1:
                    new_psums |= 1 << s
                    new_ub &= order.up[s]
            stack.append(v)
            count += 1
            if least_of(new_ub) is None:
                if not oc_witness:
                    oc_witness.append(tuple(stack))
                if not woc_witness and any(
                        order.down[m] & new_ub == 1 << m for m in _bits(new_ub)):
                    woc_witness.append(tuple(stack))
            extend(v, new_total, new_psums, new_ub)
            stack.pop()

    count += 1  # the empty system: partial sums {0}, supremum 0
    extend(1, 0, 1, full)

    oc = Decision(not oc_witness, oc_witness[0] if oc_witness else None)
    woc = Decision(not woc_witness, woc_witness[0] if woc_witness else None)
    return OrthoScan(oc, woc, count)


def is_orthocomplete(alg: FiniteEffectAlgebra) -> Decision:
    """Every orthogonal system has a sum (= supremum of its partial sums)."""
    return _ortho_scan(alg).orthocomplete


def is_weakly_orthocomplete(alg: FiniteEffectAlgebra) -> Decision:
    """Every orthogonal system has a sum or no minimal upper bound at all."""
    return _ortho_scan(alg).weakly_orthocomplete


PROFILE_FLAGS = (
    "orthoalgebra",
    "omp",
    "oml",
    "lattice",
    "archimedean",
    "orthocomplete",
    "weakly_orthocomplete",
    "atomic",
    "atomistic",
    "orthoatomistic",
    "orthoatomistic_sets",
    "disjunctive",
)


@dataclass(frozen=True)
class PropertyProfile:
    orthoalgebra: bool
    omp: bool
    oml: bool
    lattice: bool
    archimedean: bool
    orthocomplete: bool
    weakly_orthocomplete: bool
    atomic: bool
    atomistic: bool
    orthoatomistic: bool
    orthoatomistic_sets: bool
    disjunctive: bool
    atoms: tuple[int, ...]
    witnesses: Mapping[str, Any]

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in PROFILE_FLAGS}


def profile(alg: FiniteEffectAlgebra) -> PropertyProfile:
    """Run every decider once and enforce the cross-property theorems."""
    require_valid(alg)
    cls = classify(alg)
    archimedean = is_archimedean(alg)
    oc = is_orthocomplete(alg)
    woc = is_weakly_orthocomplete(alg)
    atomic = is_atomic(alg)
    atomistic = is_atomistic(alg)
    orthoatomistic = is_orthoatomistic(alg)
    oa_sets = is_orthoatomistic_sets(alg)
    disjunctive = is_disjunctive(alg)
    ats = atoms(alg)

    witnesses: dict[str, Any] = dict(cls.witnesses)
    if not atomistic:
        witnesses["atomistic"] = atomistic.witness
    if not disjunctive:
        witnesses["disjunctive"] = disjunctive.witness
    witnesses["orthoatomistic"] = orthoatomistic.witness

    prof = PropertyProfile(
        orthoalgebra=cls.orthoalgebra,
        omp=cls.omp,
        oml=cls.oml,
        lattice=cls.lattice,
        archimedean=archimedean,
        orthocomplete=oc.ok,
        weakly_orthocomplete=woc.ok,
        atomic=atomic,
        atomistic=atomistic.ok,
        orthoatomistic=orthoatomistic.ok,
        orthoatomistic_sets=oa_sets,
        disjunctive=disjunctive.ok,
        atoms=ats,
        witnesses=witnesses,
    )
    _enforce_profile_invariants(alg, prof)
    return prof


def _enforce_profile_invariants(alg: FiniteEffectAlgebra, p: PropertyProfile) -> None:
    name = alg.name or f"model(size={alg.size})"

    def check(cond: bool, law: str) -> None:
        if not cond:
            raise InvariantViolation(f"{law} failed on {name}")

    check(p.oml == (p.omp and p.lattice), "oml = omp and lattice")
    check(not p.atomistic or p.atomic, "atomistic implies atomic")
    check(not p.orthoatomistic or p.atomic, "orthoatomistic implies atomic")
    check(not p.omp or p.orthoalgebra, "every orthomodular poset is an orthoalgebra")
    check(not (p.omp and p.orthoatomistic) or p.atomistic,
          "an orthoatomistic orthomodular poset is atomistic")
    indices_one = all(isotropic_index(alg, a) == 1 for a in range(1, alg.size))
    check(p.orthoalgebra == indices_one,
          "orthoalgebra iff every nonzero isotropic index is 1")
    check(p.atomistic == (p.atomic and p.disjunctive),
          "atomistic iff atomic and disjunctive")
    # Finite-carrier theorems, each decided by its real procedure above.
    check(p.archimedean, "finite models are Archimedean")
    check(p.atomic, "finite models are atomic")
    check(p.orthocomplete, "finite models are orthocomplete")
    check(p.weakly_orthocomplete, "finite models are weakly orthocomplete")
    check(p.orthoatomistic, "finite models are orthoatomistic")
