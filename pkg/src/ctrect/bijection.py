"""Column-sort bijection between composition tableaux and reverse
semistandard Young tableaux.

``rho`` sorts every column of a composition tableau into decreasing order
and top-justifies it, producing a reverse SSYT.  ``rho_inv`` rebuilds the
composition tableau greedily: the first column is reversed into increasing
order, then each later column's entries are inserted in decreasing value
order, each into the highest row whose slot in that column is still open and
whose left neighbor is at least as large.

Both maps preserve the multiset of entries in every column, hence the
weight.  Each asserts the validity of its output, so a falsifying input
raises :class:`~ctrect.tableaux.InvariantViolationError` instead of passing
silently.
"""

from __future__ import annotations

from .tableaux import Filling, InvariantViolationError, validate, violations


def rho(u: Filling) -> Filling:
    """Map a valid composition tableau to its reverse SSYT."""
    u = validate("ct", u)
    cols: list[list[int]] = []
    for c in range(1, u.width + 1):
        entries = u.column(c)
        if len(set(entries)) != len(entries):
            raise InvariantViolationError(
                f"column {c} holds duplicate entries; unreachable from a valid composition tableau"
            )
        cols.append(sorted(entries, reverse=True))
    height = len(cols[0]) if cols else 0
    rows = [[col[r] for col in cols if len(col) > r] for r in range(height)]
    t = Filling(rows)
    vs = violations("rssyt", t)
    if vs:
        raise InvariantViolationError(f"column sort did not produce a reverse SSYT: {vs[0]}")
    return t


def rho_inv(t: Filling) -> Filling:
    """Map a valid reverse SSYT back to its composition tableau."""
    t = validate("rssyt", t)
    if t.n_rows == 0:
        return t
    rows: list[list[int]] = [[e] for e in reversed(t.column(1))]
    for c in range(2, t.width + 1):
        for e in t.column(c):  # already in decreasing order
            for row in rows:
                if len(row) == c - 1 and row[-1] >= e:
                    row.append(e)
                    break
            else:
                raise InvariantViolationError(
                    f"no admissible row for entry {e} from column {c}"
                )
    u = Filling(rows)
    vs = violations("ct", u)
    if vs:
        raise InvariantViolationError(f"insertion did not produce a composition tableau: {vs[0]}")
    return u
