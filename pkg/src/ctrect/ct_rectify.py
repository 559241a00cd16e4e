"""Direct rectification of composition tableaux, and the eviction ordering.

``phi`` rectifies the k largest first-column entries of a composition
tableau without a detour through reverse SSYT:

1. delete the bottom k first-column entries (the first column strictly
   increases, so the k largest are bottom-justified);
2. swap the entry directly right of each removed cell into column 1,
   leaving a hole; rows emptied entirely disappear;
3. reorder the rows so column 1 strictly increases;
4. column by column: the entries directly right of the removed boxes are
   pulled one column left, largest first, each into the highest cell whose
   left neighbor is filled with a value >= it and whose row stays weakly
   decreasing, bumping strictly smaller entries; a bumped entry re-inserts
   strictly below its old row, cascading as needed.  Each pulled entry's
   source cell becomes a hole at once, and those holes are the removed
   boxes of the next column;
5. stop when no entry sits right of a removed box; trailing holes drop.

The result is again a composition tableau and agrees with mapping to the
reverse SSYT, rectifying k cells there and mapping back; the verification
harness checks that equality over every small instance.

``eviction`` finds the entries that jeu de taquin would shift left, without
sliding: remove the top k first-column entries, then align each column's
survivors against the next column (every survivor takes the highest
remaining entry not exceeding it); unmatched entries are the shifting
entries and the matched ones survive to align the following column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .jeu_de_taquin import ShiftReport
from .tableaux import Cell, Filling, InvariantViolationError, validate, violations


@dataclass
class PhiState:
    """Working state of one phi run.

    The grid may hold holes (``None``); ``box_column`` is the 1-based column
    whose removed boxes are being processed; ``boxes`` are their coordinates;
    ``log`` records insertions and bumps.
    """

    grid: list[list[int | None]]
    box_column: int = 2
    boxes: list[Cell] = field(default_factory=list)
    log: list[str] = field(default_factory=list)

    def snapshot(self) -> Filling:
        return Filling([row[:] for row in self.grid])


def phi(u: Filling, k: int) -> Filling:
    """Rectify the k largest first-column cells of a composition tableau."""
    out, _ = _run(u, k)
    return out


def phi_steps(u: Filling, k: int) -> list[tuple[str, Filling]]:
    """Labelled snapshots of a phi run, ending with the final tableau."""
    _, steps = _run(u, k)
    return steps


def _run(u: Filling, k: int) -> tuple[Filling, list[tuple[str, Filling]]]:
    u = validate("ct", u)
    if not 1 <= k <= u.n_rows:
        raise ValueError(f"k must be in 1..{u.n_rows}, got {k}")
    n = u.n_rows
    grid: list[list[int | None]] = [list(row) for row in u.rows]
    steps: list[tuple[str, Filling]] = []

    for row in grid[n - k:]:
        row[0] = None
    steps.append((f"remove {k} cell(s) from column 1", Filling([r[:] for r in grid])))

    kept = grid[: n - k]
    for row in grid[n - k:]:
        if len(row) == 1:
            continue  # the row is empty now and disappears
        row[0], row[1] = row[1], None
        kept.append(row)
    state = PhiState(kept)
    steps.append(("swap into column 1", state.snapshot()))

    state.grid.sort(key=lambda row: row[0])
    steps.append(("reorder rows", state.snapshot()))

    while True:
        col = state.box_column
        state.boxes = [
            (r + 1, col)
            for r, row in enumerate(state.grid)
            if len(row) >= col and row[col - 1] is None
        ]
        candidates = []
        for r, _ in state.boxes:
            row = state.grid[r - 1]
            if len(row) > col and row[col] is not None:
                candidates.append((row[col], r - 1))
        if not candidates:
            break
        candidates.sort(key=lambda p: (-p[0], p[1]))
        for e, r_src in candidates:
            state.grid[r_src][col] = None  # vacate the source before any bump lands
            state.log.append(f"pull {e} from ({r_src + 1},{col + 1}) into column {col}")
            _insert(state, e, col, 0)
        steps.append((f"column {col} round", state.snapshot()))
        state.box_column += 1

    final_rows = []
    for r, row in enumerate(state.grid, start=1):
        while row and row[-1] is None:
            row.pop()
        if any(v is None for v in row):
            raise InvariantViolationError(f"internal hole survived in row {r}")
        final_rows.append(row)
    out = Filling(final_rows)
    vs = violations("ct", out)
    if vs:
        raise InvariantViolationError(f"phi did not produce a composition tableau: {vs[0]}")
    steps.append(("result", out))
    return out, steps


def _insert(state: PhiState, entry: int, col: int, start_row: int) -> None:
    # col is the 1-based target column; start_row the 0-based first row to
    # scan.  Bumped entries re-enter strictly below their old row.
    e = entry
    row_from = start_row
    while True:
        target = _admissible_row(state.grid, e, col, row_from)
        if target is None:
            raise InvariantViolationError(f"no admissible cell in column {col} for entry {e}")
        row = state.grid[target]
        i = col - 1
        if len(row) == i:
            row.append(e)
            state.log.append(f"place {e} at ({target + 1},{col})")
            return
        bumped = row[i]
        row[i] = e
        if bumped is None:
            state.log.append(f"place {e} at ({target + 1},{col})")
            return
        state.log.append(f"{e} bumps {bumped} at ({target + 1},{col})")
        e, row_from = bumped, target + 1


def _admissible_row(
    grid: list[list[int | None]], e: int, col: int, start_row: int
) -> int | None:
    # Admissible: left neighbor filled with value >= e, and the slot is a
    # hole (with the current right neighbor <= e, holes reading 0), is past
    # the row end, or holds an entry strictly smaller than e (a bump; the
    # right neighbor is then <= the bumped value < e automatically).
    i = col - 1
    for r in range(start_row, len(grid)):
        row = grid[r]
        if len(row) < i:
            continue
        left = row[i - 1]
        if left is None or left < e:
            continue
        if len(row) == i:
            return r
        cur = row[i]
        if cur is None:
            right = row[i + 1] if len(row) > i + 1 else None
            if e >= (0 if right is None else right):
                return r
        elif cur < e:
            return r
    return None


def eviction(t: Filling, k: int) -> ShiftReport:
    """Shifting entries of a k-cell rectification, found by alignment.

    Returns column index -> shifting entries in decreasing order; columns
    without shifting entries are omitted.
    """
    t = validate("rssyt", t)
    if not 1 <= k <= t.n_rows:
        raise ValueError(f"k must be in 1..{t.n_rows}, got {k}")
    survivors = t.column(1)[k:]
    report: ShiftReport = {}
    for c in range(2, t.width + 1):
        entries = t.column(c)  # decreasing top to bottom
        taken = [False] * len(entries)
        matched = []
        for s in survivors:
            for i, e in enumerate(entries):
                if not taken[i] and e <= s:
                    taken[i] = True
                    matched.append(e)
                    break
        shifting = [e for i, e in enumerate(entries) if not taken[i]]
        if shifting:
            report[c] = shifting
        survivors = matched
    return report
