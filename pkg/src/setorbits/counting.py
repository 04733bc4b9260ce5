"""Exact orbit counting on subsets and fixed-content multisets.

Everything here is integer arithmetic.  Orbit counts come from averaging
fixed-point counts over the whole group; every division by the group order is
checked for exactness and an inexact one raises :class:`InconsistencyError`,
since it can only mean a broken census.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .permgroup import Permutation, StrongGenSet

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

# Above this order the census switches from the plain element iterator to the
# compiled block enumerator.  Both paths produce identical censuses; tests
# compare them on mid-sized groups.
_PURE_CENSUS_LIMIT = 200_000


class InconsistencyError(RuntimeError):
    """An exactness invariant failed; the computation cannot be trusted."""


class BudgetError(ValueError):
    """A brute-force oracle was asked to exceed its stated budget."""


def exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InconsistencyError(f"inexact division in {what}: {numerator} / {denominator}")
    return q


@dataclass(frozen=True)
class CycleIndex:
    """Census of cycle types over all elements of a permutation group."""

    degree: int
    group_order: int
    terms: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        total = 0
        for ctype, count in self.terms.items():
            if sum(ctype) != self.degree:
                raise ValueError(f"cycle type {ctype} does not sum to degree {self.degree}")
            if count <= 0:
                raise ValueError(f"non-positive census count for {ctype}")
            total += count
        if total != self.group_order:
            raise ValueError(f"census total {total} != group order {self.group_order}")


@dataclass(frozen=True)
class PartitionRecord:
    """An integer partition with its block count and symmetry factor."""

    parts: tuple[int, ...]
    block_count: int
    symmetry_factor: int


def partitions_of(n: int) -> list[PartitionRecord]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 1:
        raise ValueError("partitions_of needs n >= 1")
    out: list[PartitionRecord] = []

    def rec(remaining: int, max_part: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(_partition_record(prefix))
            return
        for p in range(min(max_part, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return out


def _partition_record(parts: tuple[int, ...]) -> PartitionRecord:
    mult = Counter(parts)
    f = 1
    for m in mult.values():
        for i in range(2, m + 1):
            f *= i
    return PartitionRecord(parts, len(parts), f)


# ---------------------------------------------------------------------------
# cycle index

def _transversal_arrays(sgs: StrongGenSet) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pack per-level transversal image rows into one uint8 matrix."""
    rows = []
    sizes = []
    for level, t in enumerate(sgs.transversals):
        orbit = sorted(t)
        sizes.append(len(orbit))
        for p in orbit:
            rows.append(t[p].images)
    trans = np.array(rows, dtype=np.uint8)
    sizes_arr = np.array(sizes, dtype=np.int64)
    offs = np.zeros(len(sizes), dtype=np.int64)
    np.cumsum(sizes_arr[:-1], out=offs[1:])
    return trans, offs, sizes_arr


def _encode_shifts(degree: int) -> np.ndarray | None:
    """Bit offsets packing a cycle-count vector into an int64 key, or None if too wide."""
    shifts = np.zeros(degree + 1, dtype=np.int64)
    pos = 0
    for d in range(1, degree + 1):
        shifts[d] = pos
        pos += (degree // d).bit_length()
    if pos > 63:
        return None
    return shifts


def _decode_key(key: int, degree: int, shifts: np.ndarray) -> tuple[int, ...]:
    lengths = []
    for d in range(degree, 0, -1):
        width = (degree // d).bit_length()
        m = (key >> int(shifts[d])) & ((1 << width) - 1)
        lengths.extend([d] * m)
    return tuple(lengths)


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _census_range(trans, offs, sizes, n, c0_start, c0_end, shifts, keys, vals):
        """Census cycle types of all chain products with top index in [c0_start, c0_end).

        Walks the transversal chain depth-first with an odometer, recomputing
        prefix products only from the level that changed, so composition work
        is one gather per visited element, amortized.  Results accumulate in
        an open-addressing table of encoded cycle-count keys.
        """
        levels = sizes.shape[0]
        mask = keys.shape[0] - 1
        prefix = np.empty((levels, n), dtype=np.uint8)
        counters = np.zeros(levels, dtype=np.int64)
        seen = np.zeros(n, dtype=np.int64)
        stamp = 0
        for c0 in range(c0_start, c0_end):
            counters[0] = c0
            for l in range(1, levels):
                counters[l] = 0
            for i in range(n):
                prefix[0, i] = trans[offs[0] + c0, i]
            for l in range(1, levels):
                t0 = offs[l]
                for i in range(n):
                    prefix[l, i] = prefix[l - 1, trans[t0, i]]
            while True:
                row = prefix[levels - 1]
                stamp += 1
                key = np.int64(0)
                for i in range(n):
                    if seen[i] != stamp:
                        length = 0
                        j = i
                        while seen[j] != stamp:
                            seen[j] = stamp
                            length += 1
                            j = row[j]
                        key += np.int64(1) << shifts[length]
                h = (key * np.int64(-7046029254386353131)) & mask
                while True:
                    k = keys[h]
                    if k == key:
                        vals[h] += 1
                        break
                    if k == -1:
                        keys[h] = key
                        vals[h] = 1
                        break
                    h = (h + 1) & mask
                l = levels - 1
                while l >= 1 and counters[l] == sizes[l] - 1:
                    counters[l] = 0
                    l -= 1
                if l < 1:
                    break
                counters[l] += 1
                for k2 in range(l, levels):
                    t0 = offs[k2] + counters[k2]
                    for i in range(n):
                        prefix[k2, i] = prefix[k2 - 1, trans[t0, i]]


def _census_block_range(trans: np.ndarray, offs: np.ndarray, sizes: np.ndarray,
                        degree: int, c0_start: int, c0_end: int,
                        shifts: np.ndarray) -> dict[int, int]:
    table = 1 << 16
    keys = np.full(table, -1, dtype=np.int64)
    vals = np.zeros(table, dtype=np.int64)
    _census_range(trans, offs, sizes, degree, c0_start, c0_end, shifts, keys, vals)
    filled = keys != -1
    return {int(k): int(v) for k, v in zip(keys[filled], vals[filled])}


def _census_worker(args) -> dict[int, int]:
    trans, offs, sizes, degree, c0_start, c0_end, shifts = args
    return _census_block_range(trans, offs, sizes, degree, c0_start, c0_end, shifts)


def _census_pure(sgs: StrongGenSet) -> Counter:
    census: Counter = Counter()
    for p in sgs.elements():
        census[p.cycle_type()] += 1
    return census


_cycle_index_cache: dict[tuple, CycleIndex] = {}


def cycle_index(sgs: StrongGenSet, *, workers: int | None = None) -> CycleIndex:
    """Exact census of cycle types over every element of the group.

    ``workers`` > 1 splits the top-level transversal across processes; the
    merged census is identical for any worker count because the per-block
    censuses are disjoint exact counts.
    """
    cache_key = (sgs.degree, sgs.order(),
                 tuple(g.images for g in sgs.strong_generators))
    hit = _cycle_index_cache.get(cache_key)
    if hit is not None:
        return hit

    order = sgs.order()
    shifts = _encode_shifts(sgs.degree)
    if order <= _PURE_CENSUS_LIMIT or not _HAVE_NUMBA or shifts is None or sgs.degree > 255:
        terms = dict(_census_pure(sgs))
    else:
        trans, offs, sizes = _transversal_arrays(sgs)
        top = int(sizes[0])
        nworkers = workers or 1
        if nworkers <= 1 or top < 2:
            merged = _census_block_range(trans, offs, sizes, sgs.degree, 0, top, shifts)
        else:
            import multiprocessing as mp

            nworkers = min(nworkers, top)
            bounds = [round(i * top / nworkers) for i in range(nworkers + 1)]
            jobs = [(trans, offs, sizes, sgs.degree, bounds[i], bounds[i + 1], shifts)
                    for i in range(nworkers) if bounds[i] < bounds[i + 1]]
            ctx = mp.get_context("fork") if hasattr(os, "fork") else mp.get_context()
            with ctx.Pool(len(jobs)) as pool:
                partials = pool.map(_census_worker, jobs)
            merged = {}
            for part in partials:
                for k, v in part.items():
                    merged[k] = merged.get(k, 0) + v
        terms = {_decode_key(k, sgs.degree, shifts): v for k, v in merged.items()}

    ci = CycleIndex(sgs.degree, order, terms)
    _cycle_index_cache[cache_key] = ci
    return ci


# ---------------------------------------------------------------------------
# orbit counts from a cycle index

def set_orbit_count(ci: CycleIndex) -> int:
    """Number of orbits on all subsets of the points (Burnside average of 2^cycles)."""
    total = sum(count << len(ctype) for ctype, count in ci.terms.items())
    return exact_div(total, ci.group_order, "set orbit count")


@lru_cache(maxsize=None)
def _placements(lengths: tuple[int, ...], caps: tuple[int, ...]) -> int:
    """Ways to deal cycles of the given lengths onto slots with given capacities.

    Slots are distinguishable, but two slots with equal remaining capacity
    admit the same number of completions, so the memo key keeps capacities
    sorted and transitions count how many slots share the chosen value.
    """
    if not lengths:
        return 1
    first, rest = lengths[0], lengths[1:]
    total = 0
    prev = -1
    for i, c in enumerate(caps):
        if c == prev or c < first:
            continue
        prev = c
        k = caps.count(c)
        nxt = tuple(sorted(caps[:i] + (c - first,) + caps[i + 1:], reverse=True))
        total += k * _placements(rest, nxt)
    return total


def multiset_orbit_count(ci: CycleIndex, parts: tuple[int, ...]) -> int:
    """Orbits on arrangements whose letter multiplicities are ``parts``.

    An arrangement fixed by a group element is constant on its cycles, so the
    per-element fixed count is the number of ways to deal the cycles onto the
    letters with exact capacity ``parts[j]`` for letter ``j``.
    """
    if sum(parts) != ci.degree:
        raise ValueError(f"partition {parts} does not sum to degree {ci.degree}")
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    caps = tuple(sorted(parts, reverse=True))
    total = 0
    for ctype, count in ci.terms.items():
        lengths = tuple(sorted(ctype, reverse=True))
        total += count * _placements(lengths, caps)
    return exact_div(total, ci.group_order, f"multiset orbit count for {parts}")


# ---------------------------------------------------------------------------
# brute-force oracles

def brute_force_set_orbits(sgs: StrongGenSet) -> int:
    """Count subset orbits by union-find over all bitmask subsets.

    Uses only the generators, not the chain, so it is an independent check on
    the Burnside path.  Refuses degrees over 20 or orders over 10**6.
    """
    n = sgs.degree
    if n > 20:
        raise BudgetError(f"degree {n} over brute-force budget (20)")
    if sgs.order() > 10**6:
        raise BudgetError(f"order {sgs.order()} over brute-force budget (10**6)")
    gens = [g for g in sgs.strong_generators]

    size = 1 << n
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        bit = [1 << g(i) for i in range(n)]
        img = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            img[mask] = img[mask ^ low] | bit[low.bit_length() - 1]
        for mask in range(size):
            a, b = find(mask), find(img[mask])
            if a != b:
                if a > b:
                    a, b = b, a
                parent[b] = a
    return sum(1 for mask in range(size) if find(mask) == mask)


def _arrangement_rows(counts: tuple[int, ...]) -> np.ndarray:
    """All words with the given letter multiplicities, lexicographic, one row each."""
    n = sum(counts)
    if n == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    blocks = []
    for letter, c in enumerate(counts):
        if c == 0:
            continue
        rest = counts[:letter] + (c - 1,) + counts[letter + 1:]
        sub = _arrangement_rows(rest)
        col = np.full((sub.shape[0], 1), letter, dtype=np.uint8)
        blocks.append(np.hstack([col, sub]))
    return np.vstack(blocks)


def _encode_rows(rows: np.ndarray, column_order: np.ndarray) -> np.ndarray:
    """Pack selected columns into int64 keys, 4 bits per position, high bits first."""
    n = rows.shape[1]
    keys = np.zeros(rows.shape[0], dtype=np.int64)
    for j, col in enumerate(column_order):
        keys += rows[:, col].astype(np.int64) << (4 * (n - 1 - j))
    return keys


def brute_force_multiset_orbits(sgs: StrongGenSet, parts: tuple[int, ...],
                                max_arrangements: int = 10**7) -> int:
    """Count arrangement orbits by explicit minimum-label propagation.

    Materializes every arrangement with content ``parts``, links each to its
    images under the generators and their inverses, and floods minimum labels
    to a fixed point; orbit count is the number of label roots.  Refuses
    degrees over 12 and arrangement spaces over ``max_arrangements``.
    """
    n = sgs.degree
    if n > 12:
        raise BudgetError(f"degree {n} over brute-force budget (12)")
    if sum(parts) != n:
        raise ValueError(f"partition {parts} does not sum to degree {n}")
    count = math.factorial(n)
    for p in parts:
        count //= math.factorial(p)
    if count > max_arrangements:
        raise BudgetError(f"{count} arrangements over budget ({max_arrangements})")

    rows = _arrangement_rows(parts)
    assert rows.shape[0] == count
    identity_order = np.arange(n)
    keys = _encode_rows(rows, identity_order)
    if not np.all(np.diff(keys) > 0):
        raise InconsistencyError("arrangement keys not strictly increasing")

    neighbor_maps = []
    gens = list(sgs.strong_generators)
    for g in gens + [g.inverse() for g in gens]:
        ginv = np.array(g.inverse().images)
        imaged = _encode_rows(rows, ginv)
        pos = np.searchsorted(keys, imaged)
        if not np.array_equal(keys[pos], imaged):
            raise InconsistencyError("generator image left the arrangement space")
        neighbor_maps.append(pos)

    labels = np.arange(count, dtype=np.int64)
    while True:
        nxt = labels
        for pos in neighbor_maps:
            nxt = np.minimum(nxt, nxt[pos])
        nxt = nxt[nxt]
        if np.array_equal(nxt, labels):
            break
        labels = nxt
    return int(np.count_nonzero(labels == np.arange(count)))
