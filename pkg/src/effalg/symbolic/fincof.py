"""Finite and cofinite subsets of ℕ under disjoint union.

An element is either a finite subset of ℕ or the complement of one.  The
partial sum is union of disjoint members (two cofinite sets always
intersect, so their sum is never defined), the orthosupplement is set
complement, and the induced order is plain inclusion.  The family is a
Boolean algebra, but it is not orthocomplete: the singletons of the even
numbers form an orthogonal system whose partial sums have upper bounds
and no minimal one.  ``refute_upper_bound_candidate`` turns any claimed
minimal upper bound (or supremum) of that system into a strictly smaller
upper bound, or rejects it for not being an upper bound at all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import Refutation

CLAIM = "no minimal upper bound for the even-singleton system"


@dataclass(frozen=True)
class FinCofElement:
    """``finite_part`` if ``cofinite`` is false, else ℕ without ``finite_part``."""

    finite_part: frozenset[int]
    cofinite: bool = False

    def __post_init__(self) -> None:
        for p in self.finite_part:
            if not isinstance(p, int) or p < 0:
                raise ValueError(f"points must be naturals, got {p!r}")

    def describe(self) -> str:
        inner = "{" + ",".join(str(p) for p in sorted(self.finite_part)) + "}"
        if self.cofinite:
            return "ℕ" if not self.finite_part else f"ℕ∖{inner}"
        return "∅" if not self.finite_part else inner


def fin(*points: int) -> FinCofElement:
    return FinCofElement(frozenset(points))


def cofin(*removed: int) -> FinCofElement:
    return FinCofElement(frozenset(removed), cofinite=True)


ZERO = fin()
ONE = cofin()


def contains(u: FinCofElement, p: int) -> bool:
    return (p in u.finite_part) != u.cofinite


def oplus(u: FinCofElement, v: FinCofElement) -> FinCofElement | None:
    """Union of disjoint members; ``None`` when the sets intersect."""
    if not u.cofinite and not v.cofinite:
        if u.finite_part & v.finite_part:
            return None
        return FinCofElement(u.finite_part | v.finite_part)
    if u.cofinite and v.cofinite:
        return None  # two cofinite sets always share a point
    lo, hi = (u, v) if v.cofinite else (v, u)
    if not lo.finite_part <= hi.finite_part:
        return None
    return FinCofElement(hi.finite_part - lo.finite_part, cofinite=True)


def supplement(u: FinCofElement) -> FinCofElement:
    return FinCofElement(u.finite_part, not u.cofinite)


def le(u: FinCofElement, v: FinCofElement) -> bool:
    """Inclusion; the difference of nested members is always in the family."""
    if not u.cofinite and not v.cofinite:
        return u.finite_part <= v.finite_part
    if not u.cofinite and v.cofinite:
        return not (u.finite_part & v.finite_part)
    if u.cofinite and not v.cofinite:
        return False
    return v.finite_part <= u.finite_part


def lt(u: FinCofElement, v: FinCofElement) -> bool:
    return u != v and le(u, v)


def ominus(v: FinCofElement, u: FinCofElement) -> FinCofElement | None:
    """The unique c with u + c = v, when u <= v."""
    if not le(u, v):
        return None
    if v.cofinite and not u.cofinite:
        return FinCofElement(v.finite_part | u.finite_part, cofinite=True)
    if v.cofinite and u.cofinite:
        return FinCofElement(u.finite_part - v.finite_part)
    return FinCofElement(v.finite_part - u.finite_part)


# --- the orthogonal system of even singletons -------------------------------

def even_singleton(k: int) -> FinCofElement:
    return fin(2 * k)


def is_upper_bound_of_evens(u: FinCofElement) -> bool:
    """Exact test: u contains every even number.

    A finite set cannot, and a cofinite set does iff it removes no even
    number, so the infinite quantification collapses to a finite check.
    """
    return u.cofinite and all(p % 2 == 1 for p in u.finite_part)


def refute_upper_bound_candidate(candidate: FinCofElement) -> Refutation:
    """Defeat one candidate least/minimal upper bound of the even singletons.

    Either the candidate is not an upper bound (witnessed by a concrete even
    singleton it misses), or removing one odd point of it yields a strictly
    smaller upper bound.  Both outcomes refute minimality claims; the
    defeater is re-verified with ``le`` before being reported.
    """
    if not is_upper_bound_of_evens(candidate):
        missing = _missing_even(candidate)
        witness = even_singleton(missing // 2)
        verified = not le(witness, candidate) and contains(witness, missing)
        return Refutation(
            CLAIM, candidate, "not_upper_bound", witness,
            f"not an upper bound: misses the even singleton {witness.describe()}",
            verified)

    p = 1
    while p in candidate.finite_part:
        p += 2
    smaller = FinCofElement(candidate.finite_part | {p}, cofinite=True)
    verified = (is_upper_bound_of_evens(smaller)
                and lt(smaller, candidate)
                and contains(candidate, p))
    return Refutation(
        CLAIM, candidate, "smaller_upper_bound", smaller,
        f"still an upper bound after removing {p}: {smaller.describe()} < {candidate.describe()}",
        verified)


def _missing_even(u: FinCofElement) -> int:
    if u.cofinite:
        evens = sorted(p for p in u.finite_part if p % 2 == 0)
        return evens[0]
    p = 0
    while p in u.finite_part:
        p += 2
    return p


def random_element(rng: random.Random, max_point: int = 40, max_size: int = 6) -> FinCofElement:
    points = frozenset(rng.sample(range(max_point), rng.randint(0, max_size)))
    return FinCofElement(points, cofinite=rng.random() < 0.5)


def random_upper_bound(rng: random.Random, max_point: int = 40, max_size: int = 6) -> FinCofElement:
    odds = [p for p in range(1, max_point, 2)]
    removed = frozenset(rng.sample(odds, rng.randint(0, max_size)))
    return FinCofElement(removed, cofinite=True)
