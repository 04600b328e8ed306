"""Exhaustive generation of effect algebras up to isomorphism.

The generator fills partial sum tables cell by cell (row-major over pairs
(a, b) with a <= b) and prunes with everything the axioms force:

* the zero row is pinned to a + 0 = a, which holds in every valid table;
* the unit is pinned to the last index and its column to "undefined"
  (only 0 + 1 = 1 survives), which every isomorphism class can realize;
* the orthosupplement involution is chosen up front in canonical form
  (pairs (1,2), (3,4), ... then fixed points), which pins every a + a' = 1
  cell and bars the unit value from all other cells, so uniqueness of
  orthosupplements becomes structural;
* each newly decided cell closes all strong-associativity instances that
  touch it; a contradiction prunes the branch;
* a branch whose partial table is provably not lexicographically minimal
  under the relabelings that respect the pinned structure (permutations
  fixing 0 and the unit and commuting with the involution) is pruned;
* surviving leaves are validated, canonically relabeled, and deduplicated
  by canonical form as a final safety net.

Isomorphisms fix 0 and 1 by definition, and the table alone determines
the unit (the top of the induced order), so the canonical form ranges
over all carrier permutations fixing 0 only.

The search tree may be partitioned at the root across worker processes;
the merged, canonical-form-sorted output is identical to the sequential
run by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .core import FiniteEffectAlgebra, _tri, validate
from .properties import PROFILE_FLAGS, profile

ENUMERATION_CAP = 8

_UNKNOWN = -2
_UNDEF = -1

_LESS, _GREATER, _OPEN = -1, 1, 0

_PRUNE_PERM_LIMIT = 512


def permute(alg: FiniteEffectAlgebra, pi: Sequence[int]) -> FiniteEffectAlgebra:
    """Relabel a table along a carrier permutation with pi[0] == 0."""
    if pi[0] != 0 or sorted(pi) != list(range(alg.size)):
        raise ValueError("need a carrier permutation fixing 0")
    entries = {}
    for a, b, c in alg.defined_pairs():
        entries[(pi[a], pi[b])] = pi[c]
    labels: tuple[str, ...] = ()
    if alg.labels:
        out = [""] * alg.size
        for i, lab in enumerate(alg.labels):
            out[pi[i]] = lab
        labels = tuple(out)
    return FiniteEffectAlgebra.from_entries(alg.size, pi[alg.one], entries, labels, alg.name)


def _linearize(alg: FiniteEffectAlgebra, pi: Sequence[int], inv: Sequence[int],
               best: bytes | None) -> bytes | None:
    """Linearization of the pi-image table; ``None`` once it exceeds ``best``."""
    n = alg.size
    s = alg.sum_of
    out = bytearray()
    pos = 0
    for a in range(n):
        ia = inv[a]
        for b in range(a, n):
            v = s(ia, inv[b])
            code = 255 if v is None else pi[v]
            if best is not None:
                ref = best[pos]
                if code > ref:
                    return None
                if code < ref:
                    best = None  # strictly better; stop comparing
            out.append(code)
            pos += 1
    return bytes(out)


def canonicalize(alg: FiniteEffectAlgebra) -> tuple[bytes, FiniteEffectAlgebra]:
    """Canonical form and the canonically relabeled model."""
    n = alg.size
    best: bytes | None = None
    best_pi: tuple[int, ...] | None = None
    inv = [0] * n
    for perm in itertools.permutations(range(1, n)):
        pi = (0, *perm)
        for i, v in enumerate(pi):
            inv[v] = i
        lin = _linearize(alg, pi, inv, best)
        if lin is not None and (best is None or lin < best):
            best, best_pi = lin, pi
    assert best is not None and best_pi is not None
    return best, permute(alg, best_pi)


def canonical_form(alg: FiniteEffectAlgebra) -> bytes:
    """Relabeling-invariant key: equal forms iff isomorphic (for valid tables)."""
    return canonicalize(alg)[0]


# ---------------------------------------------------------------------------
# supplement involutions and their centralizers


def _canonical_sigma(n: int, pairs: int) -> tuple[int, ...]:
    """Involution on the middle elements: (1,2)...(2k-1,2k), rest fixed."""
    sigma = list(range(n))
    for i in range(pairs):
        sigma[2 * i + 1], sigma[2 * i + 2] = 2 * i + 2, 2 * i + 1
    return tuple(sigma)


def _all_involutions(elems: list[int]) -> Iterator[dict[int, int]]:
    if not elems:
        yield {}
        return
    first, rest = elems[0], elems[1:]
    for tail in _all_involutions(rest):
        yield {first: first, **tail}
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _all_involutions(remaining):
            yield {first: partner, partner: first, **tail}


def _centralizer_perms(n: int, sigma: Sequence[int], limit: int = _PRUNE_PERM_LIMIT
                       ) -> list[tuple[int, ...]]:
    """Permutations fixing 0 and n-1 that commute with sigma (identity excluded).

    Deterministically truncated at ``limit``: any subset gives sound (if
    weaker) pruning, and leaves are deduplicated by canonical form anyway.
    """
    mid = list(range(1, n - 1))
    pairs = sorted({tuple(sorted((a, sigma[a]))) for a in mid if sigma[a] != a})
    fixed = [a for a in mid if sigma[a] == a]
    out: list[tuple[int, ...]] = []
    for pair_order in itertools.permutations(range(len(pairs))):
        for flips in itertools.product((False, True), repeat=len(pairs)):
            for fixed_img in itertools.permutations(fixed):
                pi = list(range(n))
                for slot, which in enumerate(pair_order):
                    a, b = pairs[slot]
                    ta, tb = pairs[which]
                    if flips[slot]:
                        ta, tb = tb, ta
                    pi[a], pi[b] = ta, tb
                for src, dst in zip(fixed, fixed_img):
                    pi[src] = dst
                tpi = tuple(pi)
                if tpi != tuple(range(n)):
                    out.append(tpi)
                if len(out) >= limit:
                    return out
    return out


# ---------------------------------------------------------------------------
# the backtracking search over one supplement stratum


@dataclass(frozen=True)
class _PermData:
    inv_cell: tuple[int, ...]   # free-cell index of the pi-preimage of each free cell
    value_map: tuple[int, ...]  # value relabeling; index n encodes "undefined"


def _search_stratum(n: int, sigma: Sequence[int], first_value: int | None = None,
                    prune: bool = True) -> list[tuple[bytes, FiniteEffectAlgebra]]:
    one = n - 1
    tri = lambda a, b: _tri(n, a, b) if a <= b else _tri(n, b, a)
    tab = [_UNKNOWN] * (n * (n + 1) // 2)
    pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]

    def val(a: int, b: int) -> int:
        return tab[tri(a, b)]

    def place(a: int, b: int, w: int) -> bool:
        tab[tri(a, b)] = w
        if w >= 0:
            pre[w].append((a, b))
            if a != b:
                pre[w].append((b, a))
        return _consistent(a, b, w)

    def unplace(a: int, b: int) -> None:
        w = tab[tri(a, b)]
        tab[tri(a, b)] = _UNKNOWN
        if w >= 0:
            pre[w].pop()
            if a != b:
                pre[w].pop()

    def _consistent(u: int, v: int, w: int) -> bool:
        # Close every strong-associativity instance that touches the new cell.
        orients = ((u, v),) if u == v else ((u, v), (v, u))
        if w >= 0:
            for x, y in orients:          # new cell as the inner sum x+y = w
                for z in range(n):
                    q = val(w, z)
                    if q < 0:
                        continue
                    t = val(y, z)
                    if t == _UNDEF:
                        return False
                    if t == _UNKNOWN:
                        continue
                    r = val(x, t)
                    if r == _UNDEF or (r != _UNKNOWN and r != q):
                        return False
            for p, z in orients:          # new cell as the outer sum (x+y)+z
                for x, y in pre[p]:
                    t = val(y, z)
                    if t == _UNDEF:
                        return False
                    if t == _UNKNOWN:
                        continue
                    r = val(x, t)
                    if r == _UNDEF or (r != _UNKNOWN and r != w):
                        return False
            for y, z in orients:          # new cell as y+z = w
                for x in range(n):
                    p = val(x, y)
                    if p < 0:
                        continue
                    q = val(p, z)
                    if q < 0:
                        continue
                    r = val(x, w)
                    if r == _UNDEF or (r != _UNKNOWN and r != q):
                        return False
            for x, t in orients:          # new cell as x+(y+z) = w
                for y, z in pre[t]:
                    p = val(x, y)
                    if p < 0:
                        continue
                    q = val(p, z)
                    if q >= 0 and q != w:
                        return False
        else:
            for y, z in orients:          # undefined cell forced defined as y+z
                for x in range(n):
                    p = val(x, y)
                    if p >= 0 and val(p, z) >= 0:
                        return False
            for x, t in orients:          # undefined cell forced defined as x+(y+z)
                for y, z in pre[t]:
                    p = val(x, y)
                    if p >= 0 and val(p, z) >= 0:
                        return False
        return True

    # Pins.  Any failure here would mean the stratum is empty.
    pins: list[tuple[int, int, int]] = [(0, x, x) for x in range(n)]
    pins += [(a, sigma[a], one) for a in range(1, n - 1) if a <= sigma[a]]
    pins += [(a, one, _UNDEF) for a in range(1, n)]
    for a, b, w in pins:
        if not place(a, b, w):
            return []

    free = [(a, b) for a in range(1, n - 1) for b in range(a, n - 1) if sigma[a] != b]
    domains = []
    for a, b in free:
        allowed = [c for c in range(1, n - 1) if c != a and c != b]
        domains.append(allowed + [_UNDEF])

    perms: list[_PermData] = []
    if prune and free:
        cell_index = {cell: i for i, cell in enumerate(free)}
        for pi in _centralizer_perms(n, sigma):
            inv_pi = [0] * n
            for i, p in enumerate(pi):
                inv_pi[p] = i
            inv_cell = []
            for a, b in free:
                x, y = inv_pi[a], inv_pi[b]
                inv_cell.append(cell_index[(x, y) if x <= y else (y, x)])
            vmap = [pi[c] for c in range(n)]
            perms.append(_PermData(tuple(inv_cell), tuple(vmap)))

    avals: list[int] = [0] * len(free)
    found: list[tuple[bytes, FiniteEffectAlgebra]] = []

    def emit() -> None:
        entries = {}
        for a in range(n):
            for b in range(a, n):
                w = tab[tri(a, b)]
                if w >= 0:
                    entries[(a, b)] = w
        model = FiniteEffectAlgebra.from_entries(n, one, entries)
        if not validate(model).valid:
            raise RuntimeError(
                f"enumeration produced an invalid table (engine defect): {entries}")
        found.append(canonicalize(model))

    def walk(pd: _PermData, depth: int) -> int:
        # Compare the pi-image of the decided prefix against the prefix itself.
        for j in range(depth):
            k = pd.inv_cell[j]
            if k >= depth:
                return _OPEN
            img = pd.value_map[avals[k]] if avals[k] >= 0 else _UNDEF
            cur = avals[j]
            if img == cur:
                continue
            img_key = 255 if img == _UNDEF else img
            cur_key = 255 if cur == _UNDEF else cur
            return _LESS if img_key < cur_key else _GREATER
        return _OPEN

    def dfs(i: int, active: list[_PermData]) -> None:
        if i == len(free):
            emit()
            return
        a, b = free[i]
        values = domains[i]
        if i == 0 and first_value is not None:
            values = [first_value]
        for w in values:
            if place(a, b, w):
                avals[i] = w
                keep: list[_PermData] = []
                dead = False
                for pd in active:
                    verdict = walk(pd, i + 1)
                    if verdict == _LESS:
                        dead = True  # some relabeling is strictly smaller
                        break
                    if verdict == _OPEN:
                        keep.append(pd)
                if not dead:
                    dfs(i + 1, keep)
            unplace(a, b)

    dfs(0, perms)
    return found


def _stratum_specs(n: int) -> list[tuple[int, int | None]]:
    """(pair count, root cell value or None) tasks covering the whole search."""
    specs: list[tuple[int, int | None]] = []
    for pairs in range((n - 2) // 2 + 1):
        sigma = _canonical_sigma(n, pairs)
        free = [(a, b) for a in range(1, n - 1) for b in range(a, n - 1) if sigma[a] != b]
        if not free:
            specs.append((pairs, None))
        else:
            a, b = free[0]
            for w in [c for c in range(1, n - 1) if c != a and c != b] + [_UNDEF]:
                specs.append((pairs, w))
    return specs


def _run_task(args: tuple[int, int, int | None]) -> list[tuple[bytes, FiniteEffectAlgebra]]:
    n, pairs, first_value = args
    return _search_stratum(n, _canonical_sigma(n, pairs), first_value)


def enumerate_up_to_iso(n: int, jobs: int = 1) -> list[FiniteEffectAlgebra]:
    """All effect algebras on n elements, one canonical model per class.

    Output is sorted by canonical form and identical for any ``jobs``.
    """
    if not 2 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration cap exceeded: need 2 <= n <= {ENUMERATION_CAP}")
    tasks = [(n, pairs, fv) for pairs, fv in _stratum_specs(n)]
    if jobs > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(processes=jobs) as pool:
            chunks = pool.map(_run_task, tasks)
    else:
        chunks = [_run_task(t) for t in tasks]

    by_form: dict[bytes, FiniteEffectAlgebra] = {}
    for chunk in chunks:
        for form, model in chunk:
            by_form.setdefault(form, model)
    ordered = [by_form[f] for f in sorted(by_form)]
    return [replace(m, name=f"enum:{n}:{i}") for i, m in enumerate(ordered)]


def count(n: int) -> dict[int, int]:
    """Isomorphism-class counts for every order from 2 to n."""
    return {k: len(enumerate_up_to_iso(k)) for k in range(2, n + 1)}


def _enumerate_unpruned(n: int) -> list[FiniteEffectAlgebra]:
    """Slow cross-check path: every supplement involution, no symmetry pruning."""
    if not 2 <= n <= ENUMERATION_CAP:
        raise ValueError("enumeration cap exceeded")
    by_form: dict[bytes, FiniteEffectAlgebra] = {}
    for inv in _all_involutions(list(range(1, n - 1))):
        sigma = tuple(inv.get(i, i) for i in range(n))
        for form, model in _search_stratum(n, sigma, prune=False):
            by_form.setdefault(form, model)
    return [by_form[f] for f in sorted(by_form)]


# ---------------------------------------------------------------------------
# constrained search


@dataclass(frozen=True)
class SearchConstraint:
    required: frozenset[str]
    forbidden: frozenset[str]
    max_size: int

    def __post_init__(self) -> None:
        unknown = (self.required | self.forbidden) - set(PROFILE_FLAGS)
        if unknown:
            raise ValueError(f"unknown property names: {', '.join(sorted(unknown))}; "
                             f"known: {', '.join(PROFILE_FLAGS)}")
        if not 2 <= self.max_size <= ENUMERATION_CAP:
            raise ValueError(f"max_size must lie in 2..{ENUMERATION_CAP}")


@dataclass(frozen=True)
class SearchResult:
    model: FiniteEffectAlgebra | None
    certificate: str


def search(constraint: SearchConstraint, jobs: int = 1) -> SearchResult:
    """First enumerated model matching the constraint, else a negative certificate."""
    scanned = 0
    for size in range(2, constraint.max_size + 1):
        for model in enumerate_up_to_iso(size, jobs=jobs):
            scanned += 1
            flags = profile(model).flags()
            if all(flags[p] for p in constraint.required) and \
                    not any(flags[p] for p in constraint.forbidden):
                return SearchResult(model, f"found at order {size} after scanning {scanned} models")
    return SearchResult(None, f"no model of order <= {constraint.max_size} "
                              f"({scanned} isomorphism classes scanned)")
