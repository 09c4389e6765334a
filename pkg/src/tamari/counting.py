"""Exact counting of maximal chains by length, brute force and by recursion.

Two independent routes are kept side by side on purpose:

* the *lattice walk*: depth-first enumeration of saturated chains from the
  staircase up to the null diagram (streaming actual chain tableaux), plus a
  cover-graph dynamic program that tallies chains by length without walking
  every leaf; and
* the *recursion*: the count of maximal chains of length n+i is
  ``sum_{t=1}^{2i+3} C(n+i, t+i) * N_i(t)`` where ``N_i(t)`` counts chains of
  length t+i with no plus-full-sets, and the initial values come from the
  inclusion-exclusion ``N_i(n) = sum_{t=1}^{n} (-1)^(n-t) C(n+i, t+i) * #C_i(t)``.

Everything is exact integer arithmetic; there is no floating point here.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from types import MappingProxyType
from typing import Callable, Iterator, Mapping

from .shapes import Box, Partition, ShapeError, covers_with_strips, partitions_in_staircase, staircase
from .tableaux import Tableau


class IncompleteTableError(ValueError):
    """A required initial value N_i(t) is missing from the supplied table."""


@dataclass(frozen=True)
class LengthHistogram:
    """Counts of maximal chains of the n-th lattice, keyed by chain length."""

    n: int
    counts: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", MappingProxyType(dict(self.counts)))

    def get(self, length: int) -> int:
        return self.counts.get(length, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def lengths(self) -> list[int]:
        return sorted(self.counts)


def _graph(n: int) -> dict[Partition, tuple]:
    return {vertex: covers_with_strips(vertex, n) for vertex in partitions_in_staircase(n)}


@lru_cache(maxsize=32)
def count_by_length(n: int) -> LengthHistogram:
    """Histogram of maximal chains by length, via a DP over the cover graph.

    Processes vertices by decreasing box count, pushing per-length chain counts
    from the staircase upward; uses only the covering relation, so it serves as
    the enumeration-side oracle for the recursion.
    """
    if n < 1:
        raise ShapeError(f"lattice order must be >= 1, got {n}")
    order = sorted(partitions_in_staircase(n), key=lambda p: (-sum(p), p))
    reach: dict[Partition, dict[int, int]] = {staircase(n - 1): {0: 1}}
    for vertex in order:
        dist = reach.pop(vertex, None)
        if dist is None:
            continue
        if not vertex:
            return LengthHistogram(n, dist)
        for cover, _ in covers_with_strips(vertex, n):
            target = reach.setdefault(cover, {})
            for length, count in dist.items():
                target[length + 1] = target.get(length + 1, 0) + count
    raise AssertionError("walk never reached the null diagram")


def enumerate_maximal_chains(n: int, length: int | None = None) -> Iterator[Tableau]:
    """Stream every maximal chain of the n-th lattice exactly once, as chain tableaux.

    Order is the depth-first order induced by the cover ordering (corner row
    ascending); the optional filter emits only chains of the given length.
    Lengths are only known at the top, so filtering happens at emission.
    """
    if n < 1:
        raise ShapeError(f"lattice order must be >= 1, got {n}")
    graph = _graph(n)
    grid = [[0] * (n + 1) for _ in range(n + 1)]

    def leaf(depth: int) -> Tableau:
        rows = tuple(tuple(depth - grid[x][y] for y in range(1, n - x + 1))
                     for x in range(1, n))
        return Tableau(n, rows)

    def walk(vertex: Partition, depth: int) -> Iterator[Tableau]:
        if not vertex:
            if length is None or depth == length:
                yield leaf(depth)
            return
        for cover, strip in graph[vertex]:
            for row, col in strip:
                grid[row][col] = depth
            yield from walk(cover, depth + 1)

    yield from walk(staircase(n - 1), 0)


@dataclass
class ChainCensus:
    """Aggregates from one full enumeration of the n-th lattice.

    ``min_plus_full`` maps a chain length to a tally of minimal plus-full-set
    labels; ``plus_full_sets`` (only filled on request) maps the requested
    length to a tally of entire plus-full-set label sets.
    """

    n: int
    by_length: dict[int, int] = field(default_factory=dict)
    nofull_by_length: dict[int, int] = field(default_factory=dict)
    min_plus_full: dict[int, dict[int, int]] = field(default_factory=dict)
    plus_full_sets: dict[int, dict[frozenset[int], int]] = field(default_factory=dict)

    def merge(self, other: "ChainCensus") -> None:
        assert self.n == other.n
        for length, count in other.by_length.items():
            self.by_length[length] = self.by_length.get(length, 0) + count
        for length, count in other.nofull_by_length.items():
            self.nofull_by_length[length] = self.nofull_by_length.get(length, 0) + count
        for length, tally in other.min_plus_full.items():
            mine = self.min_plus_full.setdefault(length, {})
            for label, count in tally.items():
                mine[label] = mine.get(label, 0) + count
        for length, tally in other.plus_full_sets.items():
            mine2 = self.plus_full_sets.setdefault(length, {})
            for labels, count in tally.items():
                mine2[labels] = mine2.get(labels, 0) + count


def _census_walk(n: int, start: Partition, prefix: list[tuple[Box, ...]] | None,
                 collect_sets_for: int | None) -> ChainCensus:
    graph = _graph(n)
    census = ChainCensus(n)
    by_length = census.by_length
    nofull = census.nofull_by_length
    min_pfs = census.min_plus_full
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    max_steps = n * (n - 1) // 2
    steps: list[tuple[int, int, int]] = [(0, 0, 0)] * max_steps

    depth0 = 0
    if prefix:
        for strip in prefix:
            end_row, end_col = strip[-1]
            for row, col in strip:
                grid[row][col] = depth0
            steps[depth0] = (len(strip), end_row, end_col)
            depth0 += 1

    def leaf(total: int) -> None:
        by_length[total] = by_length.get(total, 0) + 1
        found: list[int] = []
        for s in range(total):
            size, end_row, end_col = steps[s]
            if end_row == size and end_row + end_col == n:
                label = total - s
                if end_row == n - 1 or total - grid[end_row + 1][end_col - 1] < label:
                    found.append(label)
        if not found:
            nofull[total] = nofull.get(total, 0) + 1
        else:
            tally = min_pfs.setdefault(total, {})
            minimal = found[-1]
            tally[minimal] = tally.get(minimal, 0) + 1
        if collect_sets_for == total:
            labels = frozenset(found)
            tally2 = census.plus_full_sets.setdefault(total, {})
            tally2[labels] = tally2.get(labels, 0) + 1

    def walk(vertex: Partition, depth: int) -> None:
        if not vertex:
            leaf(depth)
            return
        for cover, strip in graph[vertex]:
            end_row, end_col = strip[-1]
            for row, col in strip:
                grid[row][col] = depth
            steps[depth] = (len(strip), end_row, end_col)
            walk(cover, depth + 1)

    walk(start, depth0)
    return census


def _census_branch(args: tuple[int, int, int | None]) -> ChainCensus:
    n, branch, collect = args
    bottom = staircase(n - 1)
    cover, strip = covers_with_strips(bottom, n)[branch]
    return _census_walk(n, cover, [strip], collect)


@lru_cache(maxsize=16)
def _census_cached(n: int) -> ChainCensus:
    return _census_walk(n, staircase(n - 1), None, None)


def census(n: int, workers: int = 1, collect_sets_for: int | None = None) -> ChainCensus:
    """Enumerate all maximal chains of the n-th lattice, classifying plus-full-sets.

    With ``workers > 1`` the chain forest is partitioned at depth 1 and walked
    by a process pool; merged tallies are independent of the worker count.
    The plain single-worker result is memoized; treat it as read-only.
    """
    if n < 1:
        raise ShapeError(f"lattice order must be >= 1, got {n}")
    branches = covers_with_strips(staircase(n - 1), n)
    if workers <= 1 or len(branches) < 2:
        if collect_sets_for is None:
            return _census_cached(n)
        return _census_walk(n, staircase(n - 1), None, collect_sets_for)
    jobs = [(n, b, collect_sets_for) for b in range(len(branches))]
    context = multiprocessing.get_context("fork")
    with context.Pool(min(workers, len(jobs))) as pool:
        parts = pool.map(_census_branch, jobs)
    merged = ChainCensus(n)
    for part in parts:
        merged.merge(part)
    return merged


def count_nofull_brute(i: int, n: int, workers: int = 1) -> int:
    """Chains of length n+i with no plus-full-sets, by enumeration and classification."""
    if i < -1:
        raise ValueError(f"length offset must be >= -1, got {i}")
    return census(n, workers=workers).nofull_by_length.get(n + i, 0)


def nofull_initial_values(i: int, max_t: int | None = None,
                          histogram: Callable[[int], LengthHistogram] = count_by_length,
                          ) -> dict[int, int]:
    """Initial values N_i(t) for t = 1..min(2i+3, max_t), by inclusion-exclusion.

    ``N_i(n) = sum_{t=1}^{n} (-1)^(n-t) * C(n+i, t+i) * #C_i(t)`` with the
    chain counts taken from ``histogram`` (the cover-graph DP by default).
    Terms beyond ``max_t`` never matter to :func:`chains_count` at ``n <= max_t``
    because their binomial weight vanishes.
    """
    if i < -1:
        raise ValueError(f"length offset must be >= -1, got {i}")
    limit = 2 * i + 3 if max_t is None else min(max_t, 2 * i + 3)
    chain_counts = {t: histogram(t).get(t + i) for t in range(1, limit + 1)}
    values = {}
    for t in range(1, limit + 1):
        values[t] = sum((-1) ** (t - s) * comb(t + i, s + i) * chain_counts[s]
                        for s in range(1, t + 1))
    return values


def chains_count(i: int, n: int, table: Mapping[int, int]) -> int:
    """Number of maximal chains of length n+i via the counting recursion.

    Evaluates ``sum_{t=1}^{2i+3} C(n+i, t+i) * N_i(t)`` from the supplied
    initial values; entries with vanishing binomial weight (t > n) may be
    omitted from ``table``.
    """
    if i < -1:
        raise ValueError(f"length offset must be >= -1, got {i}")
    if n < 1:
        raise ValueError(f"lattice order must be >= 1, got {n}")
    total = 0
    for t in range(1, 2 * i + 3 + 1):
        weight = comb(n + i, t + i)
        if weight == 0:
            continue
        if t not in table:
            raise IncompleteTableError(f"initial value for t={t} (offset i={i}) is missing")
        total += weight * table[t]
    return total


def longest_chain_count(n: int) -> int:
    """Closed product formula for the number of chains of the maximal length C(n, 2)."""
    if n < 1:
        raise ValueError(f"lattice order must be >= 1, got {n}")
    numerator = factorial(comb(n, 2))
    for j in range(1, n - 1):
        numerator *= factorial(j)
    denominator = 1
    for j in range(1, n):
        denominator *= factorial(2 * j - 1)
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0
    return quotient


def conjecture_values(i: int) -> tuple[int, int | None]:
    """The conjectured closed products for N_i(2i+3) and (for i >= 0) N_i(2i+2).

    The first is ``prod_{j=1}^{i+1} C(3j-1, 2)``; the second multiplies it by
    ``i/5``, whose integrality is asserted (a failure would falsify the
    conjectured count).
    """
    if i < -1:
        raise ValueError(f"length offset must be >= -1, got {i}")
    product = 1
    for j in range(1, i + 2):
        product *= comb(3 * j - 1, 2)
    if i < 0:
        return product, None
    scaled, remainder = divmod(i * product, 5)
    if remainder:
        raise ArithmeticError(f"i*product = {i * product} is not divisible by 5 at i={i}")
    return product, scaled


def equal_representation_check(i: int, n: int, workers: int = 1) -> bool:
    """Check equal representation over equal-size plus-full-set label subsets.

    For every subset U of {1..n+i} with at most n-1 elements: the number of
    chains of length n+i whose plus-full-set labels are exactly U must be
    N_i(n-t), and the number whose labels contain U must be #C_i(n-t), where
    t = |U|.  Intended for enumeration scale (n <= 7).
    """
    length = n + i
    tallies = census(n, workers=workers, collect_sets_for=length).plus_full_sets.get(length, {})
    for t in range(0, n):
        expected_exact = count_nofull_brute(i, n - t)
        expected_super = count_by_length(n - t).get(n - t + i)
        for subset in combinations(range(1, length + 1), t):
            wanted = frozenset(subset)
            exact = tallies.get(wanted, 0)
            superset = sum(count for labels, count in tallies.items() if wanted <= labels)
            if exact != expected_exact or superset != expected_super:
                return False
    return True


def vanishing_check(i: int, n: int, workers: int = 1) -> bool:
    """Check that for n >= 2i+4 no chain of length n+i avoids plus-full-sets and
    the minimal plus-full-set labels partition the chains into the nonempty
    classes 1..3i+4."""
    if n < 2 * i + 4:
        raise ValueError(f"vanishing applies for n >= {2 * i + 4}, got {n}")
    summary = census(n, workers=workers)
    length = n + i
    if summary.nofull_by_length.get(length, 0) != 0:
        return False
    tally = summary.min_plus_full.get(length, {})
    if set(tally) != set(range(1, 3 * i + 4 + 1)):
        return False
    if any(count <= 0 for count in tally.values()):
        return False
    return sum(tally.values()) == summary.by_length.get(length, 0)
