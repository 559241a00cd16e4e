"""Sparse integer polynomials, tableau enumeration, and the classical
expansions built from them.

A :class:`Polynomial` is a map from exponent vectors (fixed variable count)
to nonzero integer coefficients.  The expansions are Schur polynomials (sum
of weight monomials over semistandard Young tableaux), monomial symmetric
polynomials (sum over distinct rearrangements of the exponent multiset) and
monomial quasisymmetric polynomials (sum over order-preserving placements of
the exponent sequence).  ``is_symmetric`` and ``is_quasisymmetric`` test the
corresponding coefficient conditions directly.

The tableau enumerations are exhaustive backtracking searches in a fixed
order (lexicographic by row-reading word) and are cached, since the
verification harness revisits the same shapes many times.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable

from .tableaux import (
    CompositionShape,
    Filling,
    ParseError,
    PartitionShape,
    is_partition_shape,
    weight_of,
)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``nvars`` variables as a sparse term map."""

    nvars: int
    terms: dict[tuple[int, ...], int]

    def __post_init__(self) -> None:
        clean = {}
        for exps, coeff in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} does not have {self.nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[exps] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def from_monomials(
        cls, nvars: int, monomials: Iterable[tuple[tuple[int, ...], int]]
    ) -> "Polynomial":
        acc: dict[tuple[int, ...], int] = {}
        for exps, coeff in monomials:
            exps = tuple(exps)
            acc[exps] = acc.get(exps, 0) + coeff
        return cls(nvars, acc)

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded lexicographic order, leading exponents first."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def _require_same_vars(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} != {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_vars(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc[exps] = acc.get(exps, 0) + coeff
        return Polynomial(self.nvars, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "Polynomial":
        return Polynomial(self.nvars, {e: scalar * c for e, c in self.terms.items()})

    __mul__ = __rmul__

    def __str__(self) -> str:
        return render_polynomial(self)


def render_polynomial(p: Polynomial) -> str:
    """One term per line, ``coeff: e1,e2,...,en``, in graded lex order."""
    return "\n".join(
        f"{coeff}: {','.join(str(e) for e in exps)}" for exps, coeff in p.sorted_terms()
    )


def parse_polynomial(text: str) -> Polynomial:
    """Parse the ``coeff: e1,...,en`` term-per-line format."""
    terms: dict[tuple[int, ...], int] = {}
    nvars = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'coeff: e1,...,en'")
        try:
            coeff = int(head.strip())
            exps = tuple(int(tok.strip()) for tok in tail.split(","))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if any(e < 0 for e in exps):
            raise ParseError(f"line {lineno}: exponents must be nonnegative")
        if nvars is None:
            nvars = len(exps)
        elif len(exps) != nvars:
            raise ParseError(f"line {lineno}: expected {nvars} exponents, got {len(exps)}")
        terms[exps] = terms.get(exps, 0) + coeff
    if nvars is None:
        raise ParseError("no terms found")
    return Polynomial(nvars, terms)


def partitions(n: int) -> list[PartitionShape]:
    """All partitions of n, lexicographically ascending."""

    def gen(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        shapes = []
        for first in range(1, min(remaining, cap) + 1):
            for rest in gen(remaining - first, first):
                shapes.append((first,) + rest)
        return shapes

    return gen(n, n)


def compositions(n: int) -> list[CompositionShape]:
    """All compositions of n, lexicographically ascending."""

    def gen(remaining: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        shapes = []
        for first in range(1, remaining + 1):
            for rest in gen(remaining - first):
                shapes.append((first,) + rest)
        return shapes

    return gen(n)


def _column_heights(shape: tuple[int, ...]) -> list[int]:
    width = max(shape, default=0)
    return [sum(1 for part in shape if part > c) for c in range(width)]


@lru_cache(maxsize=None)
def enumerate_ssyt(shape: PartitionShape, max_entry: int) -> tuple[Filling, ...]:
    """All semistandard Young tableaux of the shape with entries <= max_entry,
    ordered lexicographically by row-reading word."""
    shape = tuple(shape)
    if shape and not is_partition_shape(shape):
        raise ValueError(f"{shape} is not a partition shape")
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    heights = _column_heights(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Filling] = []

    def place(i: int) -> None:
        if i == len(cells):
            out.append(Filling([row[:] for row in grid]))
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        below = heights[c] - (r + 1)
        hi = max_entry - below  # strictly increasing below needs that much room
        for v in range(lo, hi + 1):
            grid[r][c] = v
            place(i + 1)
        grid[r][c] = 0

    place(0)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_rssyt(shape: PartitionShape, max_entry: int) -> tuple[Filling, ...]:
    """All reverse semistandard Young tableaux of the shape with entries <=
    max_entry, ordered lexicographically by row-reading word."""
    shape = tuple(shape)
    if shape and not is_partition_shape(shape):
        raise ValueError(f"{shape} is not a partition shape")
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    heights = _column_heights(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Filling] = []

    def place(i: int) -> None:
        if i == len(cells):
            out.append(Filling([row[:] for row in grid]))
            return
        r, c = cells[i]
        hi = max_entry
        if c > 0:
            hi = min(hi, grid[r][c - 1])
        if r > 0:
            hi = min(hi, grid[r - 1][c] - 1)
        below = heights[c] - (r + 1)
        lo = 1 + below  # strictly decreasing below needs that much room
        for v in range(lo, hi + 1):
            grid[r][c] = v
            place(i + 1)
        grid[r][c] = 0

    place(0)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_ct(shape: CompositionShape, max_entry: int) -> tuple[Filling, ...]:
    """All composition tableaux of the shape with entries <= max_entry,
    ordered lexicographically by row-reading word."""
    shape = tuple(shape)
    if any(part < 1 for part in shape):
        raise ValueError(f"{shape} is not a composition shape")
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Filling] = []

    def triple_ok(r: int, c: int, v: int) -> bool:
        # v is a candidate b at (r, c >= 1); rows above are complete, so
        # their a and c slots are final.  Absent a reads 0.
        for r1 in range(r):
            if shape[r1] < c:
                continue  # c-cell absent: b > 0 always holds
            left = grid[r1][c - 1]
            a = grid[r1][c] if shape[r1] > c else 0
            if a <= v <= left:
                return False
        return True

    def place(i: int) -> None:
        if i == len(cells):
            out.append(Filling([row[:] for row in grid]))
            return
        r, c = cells[i]
        if c == 0:
            lo = grid[r - 1][0] + 1 if r > 0 else 1
            hi = max_entry
            for v in range(lo, hi + 1):
                grid[r][c] = v
                place(i + 1)
        else:
            hi = grid[r][c - 1]
            for v in range(1, hi + 1):
                if triple_ok(r, c, v):
                    grid[r][c] = v
                    place(i + 1)
        grid[r][c] = 0

    place(0)
    return tuple(out)


def weight_monomial(f: Filling, nvars: int) -> tuple[int, ...]:
    """Exponent vector of the tableau's weight, padded to nvars variables."""
    w = weight_of(f)
    if len(w) > nvars:
        raise ValueError(f"tableau uses entries above {nvars}")
    return tuple(w) + (0,) * (nvars - len(w))


def schur_expand(shape: PartitionShape, nvars: int) -> Polynomial:
    """Schur polynomial: sum of weight monomials over all SSYT of the shape."""
    return Polynomial.from_monomials(
        nvars,
        ((weight_monomial(t, nvars), 1) for t in enumerate_ssyt(tuple(shape), nvars)),
    )


def monomial_sym_expand(shape: PartitionShape, nvars: int) -> Polynomial:
    """Monomial symmetric polynomial: one term per distinct rearrangement."""
    shape = tuple(shape)
    if shape and not is_partition_shape(shape):
        raise ValueError(f"{shape} is not a partition shape")
    if len(shape) > nvars:
        return Polynomial.zero(nvars)
    padded = shape + (0,) * (nvars - len(shape))
    return Polynomial(nvars, {exps: 1 for exps in set(permutations(padded))})


def monomial_qsym_expand(shape: CompositionShape, nvars: int) -> Polynomial:
    """Monomial quasisymmetric polynomial: the exponent sequence placed on
    every increasing choice of variables."""
    shape = tuple(shape)
    if any(part < 1 for part in shape):
        raise ValueError(f"{shape} is not a composition shape")
    if len(shape) > nvars:
        return Polynomial.zero(nvars)
    terms: dict[tuple[int, ...], int] = {}
    for positions in combinations(range(nvars), len(shape)):
        exps = [0] * nvars
        for pos, part in zip(positions, shape):
            exps[pos] = part
        terms[tuple(exps)] = 1
    return Polynomial(nvars, terms)


def is_quasisymmetric(p: Polynomial) -> bool:
    """True when every placement of each exponent sequence onto increasing
    variable choices carries the same coefficient."""
    by_comp: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for exps, coeff in p.terms.items():
        comp = tuple(e for e in exps if e)
        positions = tuple(i for i, e in enumerate(exps) if e)
        by_comp.setdefault(comp, {})[positions] = coeff
    for comp, placements in by_comp.items():
        ref = None
        for positions in combinations(range(p.nvars), len(comp)):
            coeff = placements.get(positions, 0)
            if ref is None:
                ref = coeff
            elif coeff != ref:
                return False
    return True


def is_symmetric(p: Polynomial) -> bool:
    """True when the polynomial is invariant under variable permutations."""
    groups: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for exps, coeff in p.terms.items():
        key = tuple(sorted(exps, reverse=True))
        groups.setdefault(key, {})[exps] = coeff
    for key, placements in groups.items():
        distinct = factorial(p.nvars)
        for mult in Counter(key).values():
            distinct //= factorial(mult)
        if len(placements) != distinct:
            return False
        if len(set(placements.values())) != 1:
            return False
    return True
