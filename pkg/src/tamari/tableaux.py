"""Saturated chains encoded as tableaux, and the full-set classification.

A saturated chain that ends at the null diagram removes, at each upward cover
step, one strip of boxes.  Writing the label ``r`` into the boxes removed at
the r-th step from the top produces a row-strict, column-weak tableau; tableaux
arising this way are called *chain tableaux* here.  A maximal chain of the
n-th Tamari lattice is the same thing as a chain tableau whose shape is the
full staircase (n-1, ..., 1).

The r-set of a tableau is the set of boxes labeled ``r``.  For staircase
shapes, an r-set that begins in row 1 and ends on the outer diagonal is a
*full-set*; it is a *plus-full-set* when its end box is (n-1, 1) or the label
southwest of the end box is smaller than ``r``.  Plus-full-sets drive the
chain surgery in :mod:`tamari.bijections` and the counting recursion in
:mod:`tamari.counting`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .shapes import (
    Box,
    Partition,
    as_partition,
    contained_in_staircase,
    covers_with_strips,
    staircase,
    strip_of_box,
)


class TableauError(ValueError):
    """The rows do not form a valid tableau (or break an operation's precondition)."""


class ChainError(ValueError):
    """An input chain is not a saturated cover chain starting at the null diagram."""


class NotChainTableauError(TableauError):
    """The tableau does not encode any saturated chain."""


class RSetClass(enum.Enum):
    NOT_FULL = "not-full"
    FULL = "full"
    PLUS_FULL = "plus-full"


def validate_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """True iff rows are strictly increasing, columns weakly increasing, and the
    label set is exactly {1, ..., number of distinct labels}."""
    grid = [tuple(row) for row in rows]
    if any(len(a) < len(b) for a, b in zip(grid, grid[1:])):
        return False
    if grid and not grid[-1]:
        return False
    labels = set()
    for x, row in enumerate(grid):
        for y, value in enumerate(row):
            if not isinstance(value, int) or value < 1:
                return False
            if y > 0 and row[y - 1] >= value:
                return False
            if x > 0 and grid[x - 1][y] > value:
                return False
            labels.add(value)
    return not labels or labels == set(range(1, max(labels) + 1))


@dataclass(frozen=True)
class Tableau:
    """Immutable labeled diagram inside the staircase of order ``n - 1``.

    ``rows`` holds the labels row by row.  Construction validates the tableau
    conditions, so every instance satisfies them; whether the labels encode an
    actual chain is the separate predicate :func:`is_chain_tableau`.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        if self.n < 1:
            raise TableauError(f"ambient parameter must be >= 1, got {self.n}")
        if not validate_tableau(self.rows):
            raise TableauError(f"not a valid tableau: {self.rows!r}")
        if not contained_in_staircase(self.shape, self.n):
            raise TableauError(f"shape {self.shape!r} does not fit ambient {self.n}")

    @cached_property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @cached_property
    def length(self) -> int:
        return max((value for row in self.rows for value in row), default=0)

    @cached_property
    def _r_sets(self) -> dict[int, tuple[Box, ...]]:
        sets: dict[int, list[Box]] = {}
        for x, row in enumerate(self.rows, start=1):
            for y, value in enumerate(row, start=1):
                sets.setdefault(value, []).append((x, y))
        return {r: tuple(boxes) for r, boxes in sets.items()}

    def label(self, row: int, col: int) -> int:
        if not (1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1])):
            raise TableauError(f"box {(row, col)!r} outside shape {self.shape!r}")
        return self.rows[row - 1][col - 1]

    def r_set(self, r: int) -> tuple[Box, ...]:
        """Boxes labeled ``r``, by increasing row (at most one per row)."""
        if not 1 <= r <= self.length:
            raise TableauError(f"label {r} out of range 1..{self.length}")
        return self._r_sets[r]

    @property
    def is_staircase(self) -> bool:
        return self.shape == staircase(self.n - 1)

    def truncate(self, r: int) -> "Tableau":
        """The sub-tableau of labels <= r (a chain tableau whenever self is)."""
        if not 0 <= r <= self.length:
            raise TableauError(f"truncation level {r} out of range 0..{self.length}")
        rows = []
        for row in self.rows:
            kept = tuple(value for value in row if value <= r)
            if kept:
                rows.append(kept)
        return Tableau(self.n, tuple(rows))

    def to_text(self) -> str:
        """Fixture text format: header line then one line of labels per row."""
        lines = [f"n={self.n} l={self.length}"]
        lines.extend(" ".join(str(v) for v in row) for row in self.rows)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        lines = [line for line in text.strip().splitlines() if line.strip()]
        if not lines or not lines[0].startswith("n="):
            raise TableauError(f"missing tableau header in {text!r}")
        try:
            fields = dict(item.split("=", 1) for item in lines[0].split())
            n = int(fields["n"])
            declared = int(fields["l"])
        except (KeyError, ValueError) as exc:
            raise TableauError(f"bad tableau header: {lines[0]!r}") from exc
        rows = tuple(tuple(int(v) for v in line.split()) for line in lines[1:])
        tab = cls(n, rows)
        if tab.length != declared:
            raise TableauError(f"header declares l={declared}, rows give l={tab.length}")
        return tab

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tableau":
        try:
            return cls(int(data["n"]), tuple(tuple(row) for row in data["rows"]))
        except (KeyError, TypeError) as exc:
            raise TableauError(f"bad tableau json: {data!r}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def truncate(tab: Tableau, r: int) -> Tableau:
    return tab.truncate(r)


def outer_diagonal(tab: Tableau) -> list[Box]:
    """Boxes (x, y) of the shape maximizing x + y; for the staircase these are
    (k, n-k) for k in [n-1], and the null diagram has none."""
    shape = tab.shape
    if not shape:
        return []
    peak = max(x + length for x, length in enumerate(shape, start=1))
    return [(x, length) for x, length in enumerate(shape, start=1) if x + length == peak]


def chain_to_tableau(chain: Sequence[Sequence[int]], n: int) -> Tableau:
    """Encode a saturated chain (null diagram first, descending by covers) as a tableau.

    The boxes removed at the r-th transition from the top carry label ``r``;
    the result has the shape of the chain's last (lowest) diagram.
    """
    diagrams = [as_partition(step) for step in chain]
    if not diagrams or diagrams[0] != ():
        raise ChainError("chain must start at the null diagram")
    grid: dict[Box, int] = {}
    for r in range(1, len(diagrams)):
        upper, lower = diagrams[r - 1], diagrams[r]
        for cover, strip in covers_with_strips(lower, n):
            if cover == upper:
                for box in strip:
                    grid[box] = r
                break
        else:
            raise ChainError(f"{upper!r} does not cover {lower!r} in ambient {n}")
    bottom = diagrams[-1]
    rows = tuple(tuple(grid[(x, y)] for y in range(1, bottom[x - 1] + 1))
                 for x in range(1, len(bottom) + 1))
    return Tableau(n, rows)


def _truncation_shapes(tab: Tableau) -> list[Partition]:
    """Shapes of the label-<=r sub-tableaux for r = 0..length."""
    shapes = []
    for r in range(tab.length + 1):
        shapes.append(as_partition(
            sum(1 for value in row if value <= r) for row in tab.rows))
    return shapes


def tableau_to_chain(tab: Tableau) -> tuple[Partition, ...]:
    """Decode a chain tableau back to its chain (null diagram first).

    Raises:
        NotChainTableauError: if consecutive truncation shapes are not covers.
    """
    shapes = _truncation_shapes(tab)
    for r in range(1, len(shapes)):
        if shapes[r - 1] not in (cover for cover, _ in covers_with_strips(shapes[r], tab.n)):
            raise NotChainTableauError(
                f"labels <= {r} do not describe a cover step in {tab.rows!r}")
    return tuple(shapes)


def is_chain_tableau(tab: Tableau) -> bool:
    """True iff every k-set equals the strip of its end box inside the label-<=k part.

    This is the strip-matching characterization; :func:`tableau_to_chain` checks
    the same thing through the covering relation instead.
    """
    shapes = _truncation_shapes(tab)
    for k in range(1, tab.length + 1):
        kset = tab.r_set(k)
        end_row, end_col = kset[-1]
        shape = shapes[k]
        if end_row > len(shape) or shape[end_row - 1] != end_col:
            return False
        if set(kset) != set(strip_of_box(shape, tab.n, (end_row, end_col))):
            return False
    return True


def _require_maximal(tab: Tableau) -> int:
    if not tab.is_staircase:
        raise TableauError(f"operation needs a full-staircase tableau, got shape {tab.shape!r}")
    return tab.n


def classify_r_set(tab: Tableau, r: int) -> RSetClass:
    """Classify the r-set of a maximal chain as not-full / full / plus-full.

    Full: begins in row 1 and ends on the outer diagonal.  Plus: additionally
    the end box (k, n-k) satisfies k = n-1, or the label at (k+1, n-k-1) is
    smaller than ``r``.
    """
    n = _require_maximal(tab)
    boxes = tab.r_set(r)
    begin_row = boxes[0][0]
    end_row, end_col = boxes[-1]
    if begin_row != 1 or end_row + end_col != n:
        return RSetClass.NOT_FULL
    if end_row == n - 1:
        return RSetClass.PLUS_FULL
    if tab.label(end_row + 1, end_col - 1) < r:
        return RSetClass.PLUS_FULL
    return RSetClass.FULL


def plus_full_set_labels(tab: Tableau) -> tuple[int, ...]:
    """Ascending labels of all plus-full-sets; at most n-1 of them."""
    return tuple(r for r in range(1, tab.length + 1)
                 if classify_r_set(tab, r) is RSetClass.PLUS_FULL)
