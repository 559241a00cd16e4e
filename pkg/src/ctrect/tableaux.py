"""Grid data model for tableaux.

A :class:`Filling` is a rows-of-slots grid.  Each slot holds a positive
integer or an explicit hole; slots past the end of a row are absent.  Holes
and absent slots both read as entry 0.  On top of the carrier this module
provides the text and JSON formats, shape and weight extraction, and
validators for the four tableau families used throughout the package:

* ``ssyt``  - semistandard Young tableaux (weakly increasing rows, strictly
  increasing columns, partition shape),
* ``rssyt`` - reverse semistandard Young tableaux (weakly decreasing rows,
  strictly decreasing columns, partition shape),
* ``syt``   - standard Young tableaux (an ssyt filled with 1..n, each once),
* ``ct``    - composition tableaux (strictly increasing first column, weakly
  decreasing rows, and the triple rule: for a cell ``a`` directly right of a
  cell ``c`` and any filled cell ``b`` below ``a`` in the same column, if
  ``a <= b`` then ``b > c``, empty slots reading 0).

Coordinates are (row, column), 1-based, row 1 at the top and column 1 at
the left.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

Row = tuple[int | None, ...]
Cell = tuple[int, int]
PartitionShape = tuple[int, ...]
CompositionShape = tuple[int, ...]
Weight = tuple[int, ...]
TableauKind = Literal["ssyt", "rssyt", "syt", "ct"]

KINDS: tuple[TableauKind, ...] = ("ssyt", "rssyt", "syt", "ct")

HOLE_TOKEN = "."


class ParseError(ValueError):
    """Malformed text or JSON input."""


class ShapeUndefinedError(ValueError):
    """The filling has an internal hole or an empty row, so row lengths do
    not determine a composition shape."""


class InvalidTableauError(ValueError):
    """A filling failed validation for the requested tableau kind."""

    def __init__(self, kind: str, violations: list["Violation"]):
        self.kind = kind
        self.violations = violations
        summary = "; ".join(str(v) for v in violations)
        super().__init__(f"not a valid {kind}: {summary}")


class InvariantViolationError(RuntimeError):
    """A theorem-backed internal invariant failed.

    Raised when an operation whose correctness is guaranteed for valid input
    reaches a state that should be impossible: either the input was corrupted
    or the instance falsifies the guarantee, and the verification harness
    records it either way.
    """


@dataclass(frozen=True)
class Violation:
    """One broken validation rule: rule id, offending cell, description."""

    rule: str
    cell: Cell
    message: str

    def __str__(self) -> str:
        r, c = self.cell
        return f"[{self.rule}] at ({r},{c}): {self.message}"


@dataclass(frozen=True)
class Filling:
    """Immutable grid of optional positive entries.

    ``rows[r][c]`` is ``None`` for a hole.  Entries are normally >= 1; entry
    0 is tolerated by the carrier only because evacuation writes ``n - e``
    verbatim, which can be 0.  The parser and every validator reject 0.
    """

    rows: tuple[Row, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        for r, row in enumerate(rows, start=1):
            for c, v in enumerate(row, start=1):
                if v is None:
                    continue
                if not isinstance(v, int) or v < 0:
                    raise ValueError(
                        f"slot ({r},{c}): expected None or a nonnegative integer, got {v!r}"
                    )
        object.__setattr__(self, "rows", rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return max((len(row) for row in self.rows), default=0)

    @property
    def cell_count(self) -> int:
        """Number of non-hole slots."""
        return sum(1 for row in self.rows for v in row if v is not None)

    def row_length(self, r: int) -> int:
        return len(self.rows[r - 1])

    def entry(self, r: int, c: int) -> int:
        """Entry at (r, c); holes, absent slots and out-of-range read 0."""
        if r < 1 or c < 1 or r > len(self.rows):
            return 0
        row = self.rows[r - 1]
        if c > len(row):
            return 0
        v = row[c - 1]
        return 0 if v is None else v

    def is_hole(self, r: int, c: int) -> bool:
        return (
            1 <= r <= len(self.rows)
            and 1 <= c <= len(self.rows[r - 1])
            and self.rows[r - 1][c - 1] is None
        )

    def column(self, c: int) -> list[int]:
        """Non-hole entries of column c, top to bottom."""
        return [
            row[c - 1]
            for row in self.rows
            if c <= len(row) and row[c - 1] is not None
        ]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, column, entry) for every non-hole slot, row-major."""
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                if v is not None:
                    yield (r, c, v)

    def has_holes(self) -> bool:
        return any(v is None for row in self.rows for v in row)

    def __str__(self) -> str:
        return render_filling(self)


def parse_filling(text: str) -> Filling:
    """Parse the canonical text format.

    One line per row, whitespace-separated tokens, each token a positive
    decimal integer or ``.`` for a hole.  Whitespace-only input gives the
    empty filling.

    Raises:
        ParseError: for a zero, negative or otherwise malformed token,
            reporting the row and the token position within it.
    """
    if text.strip() == "":
        return Filling(())
    rows: list[tuple[int | None, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        row: list[int | None] = []
        for colno, tok in enumerate(line.split(), start=1):
            if tok == HOLE_TOKEN:
                row.append(None)
                continue
            if not (tok.isascii() and tok.isdigit()):
                raise ParseError(f"row {lineno} column {colno}: bad token {tok!r}")
            value = int(tok)
            if value == 0:
                raise ParseError(f"row {lineno} column {colno}: entries must be positive")
            row.append(value)
        rows.append(tuple(row))
    return Filling(tuple(rows))


def render_filling(f: Filling, align: bool = False) -> str:
    """Render a filling in the text format; ``parse_filling`` inverts it.

    Canonical mode joins tokens with single spaces.  ``align=True``
    right-aligns every column for display; the token stream is unchanged.
    """
    if not align:
        return "\n".join(
            " ".join(HOLE_TOKEN if v is None else str(v) for v in row)
            for row in f.rows
        )
    widths: dict[int, int] = {}
    for row in f.rows:
        for c, v in enumerate(row):
            tok = HOLE_TOKEN if v is None else str(v)
            widths[c] = max(widths.get(c, 0), len(tok))
    lines = []
    for row in f.rows:
        toks = [
            (HOLE_TOKEN if v is None else str(v)).rjust(widths[c])
            for c, v in enumerate(row)
        ]
        lines.append(" ".join(toks))
    return "\n".join(lines)


def filling_to_json(f: Filling) -> str:
    """Serialize as ``{"rows": [[int|null, ...], ...]}``."""
    return json.dumps({"rows": [list(row) for row in f.rows]})


def filling_from_json(text: str) -> Filling:
    """Parse the JSON tableau format (``null`` is a hole)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(data, dict) or "rows" not in data or not isinstance(data["rows"], list):
        raise ParseError('JSON tableau must be an object with a "rows" list')
    rows = []
    for r, row in enumerate(data["rows"], start=1):
        if not isinstance(row, list):
            raise ParseError(f"row {r}: expected a list")
        for c, v in enumerate(row, start=1):
            if v is None:
                continue
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ParseError(f"row {r} column {c}: entries must be positive integers or null")
        rows.append(tuple(row))
    return Filling(tuple(rows))


def shape_of(f: Filling) -> CompositionShape:
    """Row lengths of a prefix-filled filling as a composition.

    Trailing holes are ignored; an internal hole (a filled slot to the right
    of a hole) or a row with no filled slot leaves the shape undefined.
    """
    parts = []
    for r, row in enumerate(f.rows, start=1):
        filled = 0
        seen_hole = False
        for v in row:
            if v is None:
                seen_hole = True
            elif seen_hole:
                raise ShapeUndefinedError(f"row {r} has a filled slot right of a hole")
            else:
                filled += 1
        if filled == 0:
            raise ShapeUndefinedError(f"row {r} has no filled slot")
        parts.append(filled)
    return tuple(parts)


def weight_of(f: Filling) -> Weight:
    """Frequency vector of the entry values; index v-1 counts value v.

    Holes are ignored.  The result has no trailing zero unless empty.
    """
    counts = Counter(v for row in f.rows for v in row if v)
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(v, 0) for v in range(1, top + 1))


def is_partition_shape(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def violations(kind: TableauKind, f: Filling) -> list[Violation]:
    """Every rule the filling breaks as a tableau of the given kind.

    The list is empty exactly when the filling is valid.  Holes and zero
    entries fail immediately with dedicated violations; the structural rules
    assume a hole-free grid and are skipped in that case.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    vs: list[Violation] = []
    for r, row in enumerate(f.rows, start=1):
        for c, v in enumerate(row, start=1):
            if v is None:
                vs.append(Violation("hole", (r, c), "holes are not allowed in a validated tableau"))
            elif v == 0:
                vs.append(Violation("entry", (r, c), "entries must be positive"))
    if vs:
        return vs
    for r, row in enumerate(f.rows, start=1):
        if not row:
            vs.append(Violation("shape", (r, 1), "empty row"))
    if vs:
        return vs

    if kind in ("ssyt", "rssyt", "syt"):
        for r in range(1, f.n_rows):
            if f.row_length(r + 1) > f.row_length(r):
                vs.append(Violation("shape", (r + 1, 1), "row is longer than the row above"))

    increasing_rows = kind in ("ssyt", "syt")
    for r, row in enumerate(f.rows, start=1):
        for c in range(1, len(row)):
            a, b = row[c - 1], row[c]
            if increasing_rows and a > b:
                vs.append(Violation("row-order", (r, c + 1), f"{b} < {a}: rows must weakly increase"))
            elif not increasing_rows and a < b:
                vs.append(Violation("row-order", (r, c + 1), f"{b} > {a}: rows must weakly decrease"))

    if kind in ("ssyt", "rssyt", "syt"):
        for c in range(1, f.width + 1):
            for r in range(1, f.n_rows):
                upper, lower = f.entry(r, c), f.entry(r + 1, c)
                if upper == 0 or lower == 0:
                    continue
                if kind == "rssyt":
                    if lower >= upper:
                        vs.append(
                            Violation("column-order", (r + 1, c), f"{lower} >= {upper}: columns must strictly decrease")
                        )
                elif lower <= upper:
                    vs.append(
                        Violation("column-order", (r + 1, c), f"{lower} <= {upper}: columns must strictly increase")
                    )

    if kind == "syt":
        entries = sorted(v for _, _, v in f.cells())
        if entries != list(range(1, len(entries) + 1)):
            vs.append(
                Violation("content", (1, 1), f"entries must be exactly 1..{len(entries)}, each used once")
            )

    if kind == "ct":
        for r in range(1, f.n_rows):
            if f.entry(r + 1, 1) <= f.entry(r, 1):
                vs.append(
                    Violation(
                        "first-column",
                        (r + 1, 1),
                        f"{f.entry(r + 1, 1)} <= {f.entry(r, 1)}: first column must strictly increase",
                    )
                )
        vs.extend(_triple_rule_violations(f))

    return vs


def _triple_rule_violations(f: Filling) -> list[Violation]:
    # For each pair of columns (c, c+1) and rows r1 < r2: a = (r1, c+1),
    # c-cell = (r1, c), b = (r2, c+1).  b ranges over filled slots; a and the
    # c-cell read 0 when absent.  Rule: a <= b implies b > c-cell.
    vs = []
    n = f.n_rows
    for c in range(1, f.width):
        for r1 in range(1, n + 1):
            left = f.entry(r1, c)
            if left == 0:
                continue  # b > 0 holds for every filled b
            a = f.entry(r1, c + 1)
            for r2 in range(r1 + 1, n + 1):
                b = f.entry(r2, c + 1)
                if b == 0:
                    continue
                if a <= b <= left:
                    vs.append(
                        Violation(
                            "triple",
                            (r2, c + 1),
                            f"a={a} at ({r1},{c + 1}), c={left} at ({r1},{c}): a <= b={b} but b is not > c",
                        )
                    )
    return vs


def validate(kind: TableauKind, f: Filling) -> Filling:
    """Return ``f`` unchanged if it is a valid tableau of the given kind.

    Raises:
        InvalidTableauError: with the full violation list otherwise.
    """
    vs = violations(kind, f)
    if vs:
        raise InvalidTableauError(kind, vs)
    return f
