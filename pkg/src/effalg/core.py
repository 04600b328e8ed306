"""Finite effect algebras: axioms, validation, and the induced order.

An effect algebra is a carrier with distinguished elements 0 and 1 and a
partial commutative sum.  Writing D(a, b) for "a + b is defined", the
defining laws are

  A1  D(a, b) implies D(b, a) and a + b = b + a,
  A2  if D(a, b) and D(a + b, c) then D(b, c), D(a, b + c) and
      (a + b) + c = a + (b + c)          (strong partial associativity),
  A3  every a has exactly one a' with a + a' = 1 (the orthosupplement),
  A4  D(a, 1) implies a = 0.

The induced order is a <= b iff b = a + c for some c; 0 is bottom, 1 is
top, and the witness c is unique.  a and b are orthogonal iff D(a, b),
equivalently iff a <= b'.

Tables are stored upper-triangular over pairs (a, b) with a <= b, so A1 is
a property of the storage rather than something to check.  ``None`` marks
an undefined sum; undefined is never encoded as a sentinel element index.
Element 0 is always stored at index 0; the unit index is declared.

Models are immutable and hashable; every operation in this module is a
pure function of its inputs, so models can be shared across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


# A finite multiset of elements: mapping element -> multiplicity >= 1
# (collections.Counter fits); plain iterables of elements work everywhere too.
Multiset = Mapping[int, int]


class InvalidModelError(ValueError):
    """An operation that requires a valid effect algebra got an invalid table."""


class InvariantViolation(RuntimeError):
    """A fact that is a theorem for valid models failed to hold.

    This always indicates a defect in this package (or a model that slipped
    past validation), never a mathematical discovery.
    """


def _tri(n: int, a: int, b: int) -> int:
    # index of the (a, b) cell, a <= b, in the row-major upper triangle
    return a * n - a * (a - 1) // 2 + (b - a)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FiniteEffectAlgebra:
    """A finite partial-sum table with designated zero (index 0) and unit.

    ``table`` is the upper triangle in row-major order: the cell for the
    unordered pair (a, b) with a <= b holds the sum a + b, or ``None``.
    ``labels`` and ``name`` are presentation only and do not take part in
    equality or hashing.
    """

    size: int
    one: int
    table: tuple[int | None, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = self.size
        if n < 2:
            raise ValueError("an effect algebra needs at least the two elements 0 and 1")
        if not 1 <= self.one < n:
            raise ValueError(f"unit index {self.one} out of range (zero is pinned to 0)")
        if len(self.table) != n * (n + 1) // 2:
            raise ValueError("table length does not match the carrier size")
        for v in self.table:
            if v is not None and not 0 <= v < n:
                raise ValueError(f"table entry {v!r} out of range")
        if self.labels and len(self.labels) != n:
            raise ValueError("labels must cover the whole carrier")

    @classmethod
    def from_entries(
        cls,
        size: int,
        one: int,
        entries: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]],
        labels: Iterable[str] | None = None,
        name: str = "",
    ) -> "FiniteEffectAlgebra":
        """Build a table from (a, b, c) triples meaning a + b = c.

        Either orientation of a pair is accepted; conflicting values for the
        same unordered pair raise ``ValueError``.
        """
        if isinstance(entries, Mapping):
            items: Iterable[tuple[int, int, int]] = ((a, b, c) for (a, b), c in entries.items())
        else:
            items = entries
        cells: list[int | None] = [None] * (size * (size + 1) // 2)
        for a, b, c in items:
            if not (0 <= a < size and 0 <= b < size and 0 <= c < size):
                raise ValueError(f"entry ({a},{b})={c} out of range for size {size}")
            lo, hi = (a, b) if a <= b else (b, a)
            k = _tri(size, lo, hi)
            if cells[k] is not None and cells[k] != c:
                raise ValueError(f"conflicting sums for pair ({lo},{hi}): {cells[k]} vs {c}")
            cells[k] = c
        return cls(size, one, tuple(cells), tuple(labels or ()), name)

    def sum_of(self, a: int, b: int) -> int | None:
        if a > b:
            a, b = b, a
        return self.table[_tri(self.size, a, b)]

    def defined(self, a: int, b: int) -> bool:
        return self.sum_of(a, b) is not None

    def defined_pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (a, b, a + b) over defined cells with a <= b, in index order."""
        n = self.size
        k = 0
        for a in range(n):
            for b in range(a, n):
                v = self.table[k]
                if v is not None:
                    yield a, b, v
                k += 1

    def entries(self) -> dict[tuple[int, int], int]:
        return {(a, b): c for a, b, c in self.defined_pairs()}

    def with_entry(self, a: int, b: int, value: int | None) -> "FiniteEffectAlgebra":
        """Copy with one cell overwritten (``None`` deletes).  For mutation tests."""
        if a > b:
            a, b = b, a
        cells = list(self.table)
        cells[_tri(self.size, a, b)] = value
        return replace(self, table=tuple(cells))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def label_list(self) -> list[str]:
        return [self.label(i) for i in range(self.size)]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        tag = f" {self.name!r}" if self.name else ""
        return f"<FiniteEffectAlgebra{tag} size={self.size} one={self.one}>"


@dataclass(frozen=True)
class Violation:
    axiom: str  # "A1" | "A2" | "A3" | "A4"
    witness: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def axiom_ids(self) -> set[str]:
        return {v.axiom for v in self.violations}


@lru_cache(maxsize=256)
def validate(alg: FiniteEffectAlgebra) -> ValidationReport:
    """Check A2, A3 and A4 and report every violation found.

    A1 cannot be violated: the triangular storage is symmetric by
    construction (conflicting orientations are rejected when a table is
    built or parsed).  Invalid tables produce a report, never an exception.
    """
    n = alg.size
    one = alg.one
    s = alg.sum_of
    lab = alg.label
    violations: list[Violation] = []

    # Partner lists drive the quantified checks: partners[x] holds every
    # (y, x+y) with the sum defined, ascending in y, so the scans below
    # visit instances in the same lexicographic order as a full triple
    # loop while touching only live entries.
    partners: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, c in alg.defined_pairs():
        partners[a].append((b, c))
        if a != b:
            partners[b].append((a, c))
    for row in partners:
        row.sort()

    # A2, strong form, over all ordered triples with a defined hypothesis.
    for x in range(n):
        for y, p in partners[x]:
            for z, q in partners[p]:
                t = s(y, z)
                if t is None:
                    violations.append(Violation(
                        "A2", (x, y, z),
                        f"({lab(x)}⊕{lab(y)})⊕{lab(z)} is defined but {lab(y)}⊕{lab(z)} is not"))
                    continue
                r = s(x, t)
                if r is None:
                    violations.append(Violation(
                        "A2", (x, y, z),
                        f"({lab(x)}⊕{lab(y)})⊕{lab(z)} is defined but {lab(x)}⊕({lab(y)}⊕{lab(z)}) is not"))
                elif r != q:
                    violations.append(Violation(
                        "A2", (x, y, z),
                        f"({lab(x)}⊕{lab(y)})⊕{lab(z)} = {lab(q)} but {lab(x)}⊕({lab(y)}⊕{lab(z)}) = {lab(r)}"))

    # A3: exactly one orthosupplement per element.
    for a in range(n):
        supplements = [y for y, c in partners[a] if c == one]
        if not supplements:
            violations.append(Violation(
                "A3", (a,), f"{lab(a)} has no orthosupplement (no x with {lab(a)}⊕x = {lab(one)})"))
        elif len(supplements) > 1:
            names = ", ".join(lab(x) for x in supplements)
            violations.append(Violation(
                "A3", (a, *supplements), f"orthosupplement of {lab(a)} is not unique: {names}"))

    # A4: only 0 may be summed with the unit.
    for a in range(1, n):
        if s(a, one) is not None:
            violations.append(Violation(
                "A4", (a,), f"{lab(a)}⊕{lab(one)} is defined but {lab(a)} ≠ {lab(0)}"))

    return ValidationReport(not violations, tuple(violations))


def require_valid(alg: FiniteEffectAlgebra) -> None:
    report = validate(alg)
    if not report.valid:
        first = report.violations[0]
        raise InvalidModelError(
            f"not an effect algebra ({len(report.violations)} violations; first: {first.axiom} {first.message})")


@dataclass(frozen=True, eq=False)
class OrderRelation:
    """The induced order of a valid model, with supplement and difference.

    ``up[a]`` / ``down[a]`` are bitmasks of {b : a <= b} / {b : b <= a}.
    ``ominus[(b, a)]`` is the unique c with a + c = b, present exactly when
    a <= b.
    """

    size: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    supplement: tuple[int, ...]
    ominus: Mapping[tuple[int, int], int]

    def le(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def above(self, a: int) -> Iterator[int]:
        return _bits(self.up[a])

    def below(self, a: int) -> Iterator[int]:
        return _bits(self.down[a])


@lru_cache(maxsize=256)
def derive_order(alg: FiniteEffectAlgebra) -> OrderRelation:
    """Derive <=, the orthosupplement map and the partial difference.

    Rejects invalid tables.  The facts that hold for every valid model
    (partial order, bounds, involution, antitonicity, uniqueness of the
    difference) are re-checked here and raise ``InvariantViolation`` if the
    table somehow breaks them.
    """
    require_valid(alg)
    n = alg.size
    one = alg.one
    up = [1 << a for a in range(n)]
    ominus: dict[tuple[int, int], int] = {}
    for a, b, c in alg.defined_pairs():
        up[a] |= 1 << c
        up[b] |= 1 << c
        for lo, hi in ((a, b), (b, a)):
            prev = ominus.setdefault((c, lo), hi)
            if prev != hi:
                raise InvariantViolation(
                    f"difference not unique: {alg.label(c)} ⊖ {alg.label(lo)} ∈ "
                    f"{{{alg.label(prev)}, {alg.label(hi)}}}")

    full = (1 << n) - 1
    down = [0] * n
    for a in range(n):
        for b in _bits(up[a]):
            down[b] |= 1 << a

    # Partial-order and boundedness checks (theorems for valid tables).
    for a in range(n):
        if not up[a] >> a & 1:
            raise InvariantViolation("order not reflexive")
        for b in _bits(up[a]):
            if a != b and up[b] >> a & 1:
                raise InvariantViolation(f"order not antisymmetric at ({a}, {b})")
            if up[b] & ~up[a]:
                raise InvariantViolation(f"order not transitive at ({a}, {b})")
    if up[0] != full or up[one] != 1 << one or down[one] != full:
        raise InvariantViolation("0 and 1 are not the bounds of the induced order")

    supp = [-1] * n
    for a in range(n):
        for x in range(n):
            if alg.sum_of(a, x) == one:
                supp[a] = x
                break
    for a in range(n):
        if supp[supp[a]] != a:
            raise InvariantViolation("orthosupplement is not an involution")
        for b in _bits(up[a]):
            if not up[supp[b]] >> supp[a] & 1:
                raise InvariantViolation("orthosupplement is not antitone")

    for b in range(n):
        for a in range(n):
            if bool(up[a] >> b & 1) != ((b, a) in ominus):
                raise InvariantViolation("difference domain does not match the order")

    return OrderRelation(n, tuple(up), tuple(down), tuple(supp), ominus)


def is_orthogonal(alg: FiniteEffectAlgebra, a: int, b: int) -> bool:
    """True iff a + b is defined; cross-checked against a <= b'."""
    order = derive_order(alg)
    by_table = alg.defined(a, b)
    by_order = order.le(a, order.supplement[b])
    if by_table != by_order:
        raise InvariantViolation(
            f"orthogonality mismatch at ({alg.label(a)}, {alg.label(b)}): "
            f"table says {by_table}, order says {by_order}")
    return by_table


def _as_sorted_elements(items: Iterable[int] | Multiset, size: int) -> list[int]:
    if isinstance(items, Mapping):
        out: list[int] = []
        for v, mult in sorted(items.items()):
            if mult < 0:
                raise ValueError(f"negative multiplicity for element {v}")
            out.extend([v] * mult)
    else:
        out = sorted(items)
    for v in out:
        if not 0 <= v < size:
            raise ValueError(f"element {v} out of range for carrier of size {size}")
    return out


def oplus_multiset(alg: FiniteEffectAlgebra, items: Iterable[int] | Multiset) -> int | None:
    """Fold the partial sum over a multiset; ``None`` if any step is undefined.

    The fold order is immaterial on valid models (a consequence of A1/A2
    exercised by the test suite); this implementation folds in ascending
    element order.  The empty multiset sums to 0.
    """
    acc = 0
    for v in _as_sorted_elements(items, alg.size):
        nxt = alg.sum_of(acc, v)
        if nxt is None:
            return None
        acc = nxt
    return acc


def _bound_mask(alg: FiniteEffectAlgebra, elems: Iterable[int], upper: bool) -> int:
    order = derive_order(alg)
    mask = (1 << alg.size) - 1
    for s in elems:
        if not 0 <= s < alg.size:
            raise ValueError(f"element {s} out of range for carrier of size {alg.size}")
        mask &= order.up[s] if upper else order.down[s]
    return mask


def upper_bounds(alg: FiniteEffectAlgebra, elems: Iterable[int]) -> set[int]:
    """Common upper bounds of a set of elements (the whole carrier for ∅)."""
    return set(_bits(_bound_mask(alg, elems, upper=True)))


def lower_bounds(alg: FiniteEffectAlgebra, elems: Iterable[int]) -> set[int]:
    return set(_bits(_bound_mask(alg, elems, upper=False)))


def minimal_upper_bounds(alg: FiniteEffectAlgebra, elems: Iterable[int]) -> set[int]:
    order = derive_order(alg)
    ub = _bound_mask(alg, elems, upper=True)
    return {b for b in _bits(ub) if order.down[b] & ub == 1 << b}


def supremum(alg: FiniteEffectAlgebra, elems: Iterable[int]) -> int | None:
    """Least upper bound, or ``None``.  sup ∅ = 0 (bounded-poset convention)."""
    order = derive_order(alg)
    ub = _bound_mask(alg, elems, upper=True)
    for b in _bits(ub):
        if not ub & ~order.up[b]:
            return b
    return None


def infimum(alg: FiniteEffectAlgebra, elems: Iterable[int]) -> int | None:
    """Greatest lower bound, or ``None``.  inf ∅ = 1."""
    order = derive_order(alg)
    lb = _bound_mask(alg, elems, upper=False)
    best = None
    for b in _bits(lb):
        if not lb & ~order.down[b]:
            best = b
    return best


ISOTROPIC_INFINITY = math.inf
