"""Jeu-de-taquin rectification of reverse semistandard Young tableaux.

A single rectification round removes the entry at (1,1) (the largest in
column 1, since columns strictly decrease downward) and slides the larger of
the two neighbors below and to the right into the empty cell, the lower one
on a tie, until both neighbors read 0; the final empty corner is deleted.

Rectifying k cells deletes the k largest first-column entries (the top k
cells of column 1) up front and slides the holes out of the remaining skew
tableau.  Only the lowest hole is ever an inner corner of the hole region,
so the slides run bottom to top; for k = 1 this is exactly the single
round.  Each hole's slide is recorded as a :class:`SlideTrace`, and the
traces are reported largest removed entry first, so ``traces[n-1]``
rectifies the n-th largest cell and, column by column, shifting entries
appear in strictly decreasing order across traces.

An entry that moves one column left during a slide is a *shifting entry*.
For a single round the shifting entries are exactly the diagonally dominant
entries on the southeast path traced by :func:`dominant_path`, which
recomputes them declaratively and checks itself against the slide trace.

:func:`evacuate` iterates single rounds, writing ``n - removed`` into each
vacated corner of a same-shape output grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .tableaux import (
    Cell,
    Filling,
    InvariantViolationError,
    validate,
    violations,
)

Direction = Literal["up", "left"]

ShiftReport = dict[int, list[int]]


@dataclass(frozen=True)
class SlideStep:
    """One slide: ``entry`` moved from ``from_cell`` into ``to_cell``."""

    from_cell: Cell
    to_cell: Cell
    entry: int
    direction: Direction


@dataclass(frozen=True)
class SlideTrace:
    """Record of sliding one removed cell out of the tableau.

    ``steps`` are in path order; ``vacated_cell`` is the corner deleted from
    the shape once no neighbor is left to slide.
    """

    removed_entry: int
    steps: tuple[SlideStep, ...]
    vacated_cell: Cell

    def left_shifts(self) -> list[tuple[int, int, int]]:
        """(row, column, entry) of each column-crossing slide, in order."""
        return [
            (s.from_cell[0], s.from_cell[1], s.entry)
            for s in self.steps
            if s.direction == "left"
        ]


def _slide_out(
    grid: list[list[int | None]],
    er: int,
    ec: int,
    removed: int,
    snaps: list[tuple[str, Filling]] | None = None,
) -> SlideTrace:
    # Slide the hole at 0-based (er, ec) out of the grid, mutating it.  Any
    # other holes sit above the slide path and are never read.
    steps: list[SlideStep] = []
    while True:
        below = grid[er + 1][ec] if er + 1 < len(grid) and ec < len(grid[er + 1]) else 0
        right = grid[er][ec + 1] if ec + 1 < len(grid[er]) else 0
        below = 0 if below is None else below
        right = 0 if right is None else right
        if below == 0 and right == 0:
            break
        if below >= right:  # the lower neighbor wins ties
            grid[er][ec] = below
            grid[er + 1][ec] = None
            steps.append(SlideStep((er + 2, ec + 1), (er + 1, ec + 1), below, "up"))
            er += 1
        else:
            grid[er][ec] = right
            grid[er][ec + 1] = None
            steps.append(SlideStep((er + 1, ec + 2), (er + 1, ec + 1), right, "left"))
            ec += 1
        if snaps is not None:
            s = steps[-1]
            fr, fc = s.from_cell
            snaps.append(
                (
                    f"slide {s.entry} {s.direction} from ({fr},{fc})",
                    Filling([row[:] for row in grid]),
                )
            )
    if len(grid[er]) != ec + 1:
        raise InvariantViolationError(f"slide ended at ({er + 1},{ec + 1}), not a corner")
    grid[er].pop()
    if not grid[er]:
        if er != len(grid) - 1:
            raise InvariantViolationError(f"row {er + 1} emptied above a nonempty row")
        grid.pop()
    if snaps is not None:
        snaps.append((f"vacate ({er + 1},{ec + 1})", Filling([row[:] for row in grid])))
    return SlideTrace(removed, tuple(steps), (er + 1, ec + 1))


def rectify_once(t: Filling) -> tuple[Filling, SlideTrace]:
    """Run one rectification round on a nonempty valid reverse SSYT."""
    t = validate("rssyt", t)
    if t.n_rows == 0:
        raise ValueError("cannot rectify an empty tableau")
    grid: list[list[int | None]] = [list(row) for row in t.rows]
    removed = grid[0][0]
    grid[0][0] = None
    trace = _slide_out(grid, 0, 0, removed)
    out = Filling(grid)
    vs = violations("rssyt", out)
    if vs:
        raise InvariantViolationError(f"slide broke the tableau rules: {vs[0]}")
    return out, trace


def _rectify_cells(
    t: Filling, k: int, snaps: list[tuple[str, Filling]] | None
) -> tuple[Filling, list[SlideTrace]]:
    t = validate("rssyt", t)
    if not 1 <= k <= t.n_rows:
        raise ValueError(f"k must be in 1..{t.n_rows}, got {k}")
    grid: list[list[int | None]] = [list(row) for row in t.rows]
    removed = [t.entry(i, 1) for i in range(1, k + 1)]
    for i in range(k):
        grid[i][0] = None
    if snaps is not None:
        snaps.append(
            (f"remove {k} cell(s) from column 1", Filling([row[:] for row in grid]))
        )
    traces = [
        _slide_out(grid, i, 0, removed[i], snaps) for i in range(k - 1, -1, -1)
    ]
    traces.reverse()  # report by cell: largest removed entry first
    out = Filling(grid)
    vs = violations("rssyt", out)
    if vs:
        raise InvariantViolationError(f"slides broke the tableau rules: {vs[0]}")
    return out, traces


def rectify_k(t: Filling, k: int) -> tuple[Filling, list[SlideTrace]]:
    """Rectify the k largest first-column cells of a valid reverse SSYT.

    The k cells are deleted first and their holes slid out bottom to top;
    ``traces[n-1]`` is the slide of the cell holding the n-th largest
    removed entry.  ``rectify_k(t, 1)`` equals ``rectify_once(t)``.
    """
    return _rectify_cells(t, k, None)


def rectify_k_steps(t: Filling, k: int) -> list[tuple[str, Filling]]:
    """Labelled snapshots of a k-cell rectification, in slide order."""
    snaps: list[tuple[str, Filling]] = []
    out, _ = _rectify_cells(t, k, snaps)
    snaps.append(("result", out))
    return snaps


def shifting_entries(traces: list[SlideTrace]) -> ShiftReport:
    """Per-column shifting entries across traces, in trace order.

    Column index maps to the list of entries that left that column, one per
    trace that shifted there.
    """
    report: ShiftReport = {}
    for trace in traces:
        for _, c, e in trace.left_shifts():
            report.setdefault(c, []).append(e)
    return report


def is_diagonally_dominant(t: Filling, row: int, col: int) -> bool:
    """True when the entry exceeds the one a row down and a column left.

    Absent slots read 0; only filled cells in columns >= 2 qualify.
    """
    if col < 2:
        raise ValueError("diagonal dominance is defined for columns >= 2")
    if t.entry(row, col) == 0:
        raise ValueError(f"({row},{col}) is not a filled cell")
    return t.entry(row, col) > t.entry(row + 1, col - 1)


def dominant_path(t: Filling) -> list[tuple[int, int, int]]:
    """Southeast path of diagonally dominant entries, one per column.

    For each column from 2 on, pick the largest dominant entry at or below
    the previously chosen row; stop at the first column without one.  The
    result must coincide with the column shifts of :func:`rectify_once`,
    which is recomputed here as a guard.
    """
    t = validate("rssyt", t)
    if t.n_rows == 0:
        return []
    path: list[tuple[int, int, int]] = []
    min_row = 1
    for c in range(2, t.width + 1):
        found = None
        for r in range(min_row, t.n_rows + 1):
            v = t.entry(r, c)
            if v == 0:
                break  # columns are top-justified
            if v > t.entry(r + 1, c - 1):
                found = (r, c, v)  # topmost dominant entry is the largest
                break
        if found is None:
            break
        path.append(found)
        min_row = found[0]
    _, trace = rectify_once(t)
    if path != trace.left_shifts():
        raise InvariantViolationError(
            f"dominant path {path} disagrees with slide shifts {trace.left_shifts()}"
        )
    return path


def replay(t: Filling, trace: SlideTrace) -> list[tuple[str, Filling]]:
    """Labelled snapshots of one single-cell round, reconstructed from its
    trace.

    Snapshots show the migrating empty cell as a hole; the last snapshot is
    the rectified tableau.  Raises when the trace does not fit the tableau,
    so tests can use it to check trace coherence.
    """
    grid: list[list[int | None]] = [list(row) for row in t.rows]
    states: list[tuple[str, Filling]] = []
    grid[0][0] = None
    states.append((f"remove {trace.removed_entry} at (1,1)", Filling([r[:] for r in grid])))
    for step in trace.steps:
        fr, fc = step.from_cell
        tr, tc = step.to_cell
        if grid[fr - 1][fc - 1] != step.entry or grid[tr - 1][tc - 1] is not None:
            raise InvariantViolationError(f"trace step {step} does not fit the grid")
        grid[tr - 1][tc - 1] = step.entry
        grid[fr - 1][fc - 1] = None
        states.append(
            (
                f"slide {step.entry} {step.direction} from ({fr},{fc})",
                Filling([r[:] for r in grid]),
            )
        )
    vr, vc = trace.vacated_cell
    if grid[vr - 1][vc - 1] is not None or len(grid[vr - 1]) != vc:
        raise InvariantViolationError(f"vacated cell ({vr},{vc}) is not the trailing empty slot")
    grid[vr - 1].pop()
    if not grid[vr - 1]:
        grid.pop()
    states.append((f"vacate ({vr},{vc})", Filling(grid)))
    return states


def evacuate(t: Filling) -> Filling:
    """Iterated rectification writing ``n - removed`` into each vacated cell.

    The output has the shape of the input with every cell filled; when the
    removed entry equals the cell count the written value is 0, which only
    the carrier tolerates.  Entries above the cell count would force
    negative values, so they are rejected up front.
    """
    t = validate("rssyt", t)
    n = t.cell_count
    top = max((v for _, _, v in t.cells()), default=0)
    if top > n:
        raise ValueError(f"entry {top} exceeds the cell count {n}; n - entry would be negative")
    out: list[list[int | None]] = [[None] * len(row) for row in t.rows]
    cur = t
    while cur.n_rows:
        e = cur.entry(1, 1)
        cur, trace = rectify_once(cur)
        r, c = trace.vacated_cell
        out[r - 1][c - 1] = n - e
    if any(v is None for row in out for v in row):
        raise InvariantViolationError("evacuation left an unfilled cell")
    return Filling(out)
