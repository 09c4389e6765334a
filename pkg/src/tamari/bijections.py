"""Chain surgery: growing a maximal chain by one plus-full-set, and back.

The central construction takes a maximal chain of the n-th lattice (as a
staircase chain tableau of length n+i) and a level ``0 <= r <= n+i`` and
produces a maximal chain of the (n+1)-st lattice whose (r+1)-set is a
plus-full-set ending in row ``d``, the pivot row.  Restricted to chains whose
plus-full-set labels all exceed ``r`` it is a bijection onto the chains of the
bigger lattice with minimal plus-full-set label ``r+1``; iterating the inverse
strips a chain down to a unique plus-full-set-free base plus a weakly
increasing parameter tuple.  That unique decomposition is what turns chain
counting into the recursion of :mod:`tamari.counting`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import staircase
from .tableaux import (
    RSetClass,
    Tableau,
    TableauError,
    classify_r_set,
    plus_full_set_labels,
)


class GrowthDomainError(ValueError):
    """The chain already has a plus-full-set with label <= r."""

    def __init__(self, label: int):
        super().__init__(f"chain has a plus-full-set with label {label}")
        self.label = label


class NoPlusFullSetError(ValueError):
    """The chain has no plus-full-set, so it is not in the image of any growth map."""


def repeat_row(tab: Tableau, d: int) -> Tableau:
    """Shift rows below ``d`` down one and repeat row ``d``; identity when row ``d`` is empty.

    The ambient parameter grows by one so the duplicated shape always fits.
    """
    if d < 1:
        raise TableauError(f"row index must be >= 1, got {d}")
    rows = tab.rows
    if d <= len(rows):
        rows = rows[:d] + (rows[d - 1],) + rows[d:]
    return Tableau(tab.n + 1, rows)


def unrepeat_row(tab: Tableau, d: int) -> Tableau:
    """Inverse of :func:`repeat_row`: delete row ``d+1`` (which must equal row ``d``)."""
    if d < 1:
        raise TableauError(f"row index must be >= 1, got {d}")
    rows = tab.rows
    row_d = rows[d - 1] if d <= len(rows) else ()
    row_d1 = rows[d] if d + 1 <= len(rows) else ()
    if row_d != row_d1:
        raise TableauError(f"rows {d} and {d + 1} differ, cannot collapse: {rows!r}")
    if d + 1 <= len(rows):
        rows = rows[:d] + rows[d + 1:]
    return Tableau(tab.n - 1, rows)


def append_next_label(tab: Tableau, d: int) -> Tableau:
    """Append a box labeled ``length + 1`` to the end of rows 1..d."""
    if d < 1:
        raise TableauError(f"row index must be >= 1, got {d}")
    new_label = tab.length + 1
    rows = list(tab.rows) + [()] * (d - len(tab.rows))
    for j in range(d):
        rows[j] = rows[j] + (new_label,)
    return Tableau(tab.n, tuple(rows))


def _require_chain(tab: Tableau) -> int:
    if not tab.is_staircase:
        raise TableauError(f"expected a full-staircase chain tableau, got shape {tab.shape!r}")
    return tab.n


def pivot_row(chain: Tableau, r: int) -> int:
    """Minimal k in [n-1] whose outer-diagonal label is <= r, else n."""
    n = _require_chain(chain)
    for k in range(1, n):
        if chain.label(k, n - k) <= r:
            return k
    return n


def expand_chain(chain: Tableau, r: int) -> Tableau:
    """Grow a maximal chain of the n-th lattice into one of the (n+1)-st.

    Steps: repeat the pivot row of the label-<=r part, append the new label
    ``r+1`` down to the pivot row, then push every label above ``r`` one unit
    right (rows above the pivot) or down (rows below it), incrementing it.
    The (r+1)-set of the result is a plus-full-set ending at (d, n-d+1).
    """
    n = _require_chain(chain)
    if not 0 <= r <= chain.length:
        raise TableauError(f"level {r} out of range 0..{chain.length}")
    d = pivot_row(chain, r)
    base = append_next_label(repeat_row(chain.truncate(r), d), d)
    rows = [list(row) for row in base.rows]
    rows.extend([] for _ in range(n - len(rows)))
    for x, row in enumerate(chain.rows, start=1):
        for y, value in enumerate(row, start=1):
            if value <= r:
                continue
            assert x != d, "pivot row holds no labels above r"
            tx, ty = (x, y + 1) if x < d else (x + 1, y)
            assert ty == len(rows[tx - 1]) + 1, "translated boxes must stay contiguous"
            rows[tx - 1].append(value + 1)
    return Tableau(n + 1, tuple(tuple(row) for row in rows if row))


def insert_plus_full_set(chain: Tableau, r: int) -> Tableau:
    """Domain-checked growth: requires that no label j <= r is a plus-full-set.

    Raises:
        GrowthDomainError: carrying the offending label.
    """
    for j in range(1, r + 1):
        if classify_r_set(chain, j) is RSetClass.PLUS_FULL:
            raise GrowthDomainError(j)
    return expand_chain(chain, r)


def extract_plus_full_set(chain: Tableau) -> tuple[int, Tableau]:
    """Inverse growth: peel off the minimal plus-full-set.

    Returns ``(r, smaller)`` with ``insert_plus_full_set(smaller, r) == chain``;
    ``r + 1`` is the minimal plus-full-set label of ``chain``.

    Raises:
        NoPlusFullSetError: if the chain has no plus-full-set.
    """
    n = _require_chain(chain)
    labels = plus_full_set_labels(chain)
    if not labels:
        raise NoPlusFullSetError("chain has no plus-full-set")
    r = labels[0] - 1
    d = chain.r_set(r + 1)[-1][0]
    base = unrepeat_row(chain.truncate(r), d)
    rows = [list(row) for row in base.rows]
    rows.extend([] for _ in range(n - 2 - len(rows)))
    for x, row in enumerate(chain.rows, start=1):
        for y, value in enumerate(row, start=1):
            if value <= r + 1:
                continue
            assert x != d and x != d + 1, "rows at the pivot hold no labels above r+1"
            tx, ty = (x, y - 1) if x < d else (x - 1, y)
            assert ty == len(rows[tx - 1]) + 1, "translated boxes must stay contiguous"
            rows[tx - 1].append(value - 1)
    return r, Tableau(n - 1, tuple(tuple(row) for row in rows if row))


@dataclass(frozen=True)
class ChainDecomposition:
    """A plus-full-set-free base chain plus the growth levels applied to it.

    ``params`` is weakly increasing with ``0 <= params[-1] <= base.length``;
    recomposing yields a chain whose plus-full-set labels are
    ``{params[j] + j + 1}``.
    """

    base: Tableau
    params: tuple[int, ...]


def decompose(chain: Tableau) -> ChainDecomposition:
    """Strip plus-full-sets one at a time until none remain.

    The number of extracted levels equals the number of plus-full-sets, and the
    levels come out weakly increasing.
    """
    _require_chain(chain)
    params = []
    current = chain
    while plus_full_set_labels(current):
        r, current = extract_plus_full_set(current)
        params.append(r)
    return ChainDecomposition(base=current, params=tuple(params))


def recompose(decomposition: ChainDecomposition) -> Tableau:
    """Inverse of :func:`decompose`: apply the growth levels innermost-first."""
    base, params = decomposition.base, decomposition.params
    _require_chain(base)
    if params:
        if any(a > b for a, b in zip(params, params[1:])):
            raise ValueError(f"growth levels must be weakly increasing: {params!r}")
        if params[0] < 0 or params[-1] > base.length:
            raise ValueError(
                f"growth levels must lie in 0..{base.length}: {params!r}")
    current = base
    for r in reversed(params):
        current = insert_plus_full_set(current, r)
    return current


def chain_without_plus_full_sets(i: int) -> Tableau:
    """A maximal chain of length 3i+3 in the (2i+3)-rd lattice with no plus-full-sets.

    For i = -1 this is the empty chain of the one-vertex lattice.  Otherwise
    the outer-diagonal boxes (n-1-2k, 2k+1) receive the top labels n+i-k and
    every remaining box is labeled by its column.
    """
    if i < -1:
        raise ValueError(f"length offset must be >= -1, got {i}")
    if i == -1:
        return Tableau(1, ())
    n = 2 * i + 3
    shape = staircase(n - 1)
    grid = {(x, y): y for x in range(1, n) for y in range(1, shape[x - 1] + 1)}
    for k in range(i + 1):
        grid[(n - (2 * k + 1), 2 * k + 1)] = n + i - k
    rows = tuple(tuple(grid[(x, y)] for y in range(1, shape[x - 1] + 1))
                 for x in range(1, n))
    return Tableau(n, rows)
