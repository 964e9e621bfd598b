"""Column-strict tableaux of rectangular shape (N^l) and their combinatorics.

Tableaux are fillings of an l-row, N-column grid with entries in 1..m,
m = N*l, strictly increasing down each column.  Semistandard tableaux are
additionally weakly increasing along rows.  They index both the standard
tensor bases (through the nu/mu correspondences below) and the basis webs.

The total order used everywhere: a column c beats a column d when, at the
first position where they differ, c has the *smaller* entry; tableaux compare
lexicographically on columns left to right.  Maximal is the tableau whose
row r is constantly r.

The peeling procedure walks a semistandard tableau down to the maximal one
and records the word of lowering moves; that word drives the construction of
the Leclerc-Toffin basis.  The search bound for the peeling index is m-1,
not l: for l >= 2 the procedure cannot terminate otherwise (e.g. shape (2,2)
with rows (1,1),(2,4) needs i = 3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache


class NotSemistandardError(ValueError):
    """Raised when an operation requires a semistandard tableau."""


@dataclass(frozen=True)
class Shape:
    """Rectangular shape: l rows, N columns, entries bounded by m = N*l."""

    N: int
    l: int

    def __post_init__(self):
        if self.N < 2 or self.l < 1:
            raise ValueError(f"invalid shape N={self.N}, l={self.l}")

    @property
    def m(self) -> int:
        return self.N * self.l


@dataclass(frozen=True)
class Tableau:
    """A column-strict filling, stored row-major as a tuple of row tuples."""

    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        N, l, m = self.shape.N, self.shape.l, self.shape.m
        if len(self.rows) != l or any(len(r) != N for r in self.rows):
            raise ValueError("grid does not match shape")
        for r in self.rows:
            for x in r:
                if not 1 <= x <= m:
                    raise ValueError(f"entry {x} out of range 1..{m}")
        for j in range(N):
            for i in range(l - 1):
                if self.rows[i][j] >= self.rows[i + 1][j]:
                    raise ValueError("columns must strictly increase")

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (1-based), read top to bottom."""
        return tuple(self.rows[i][j - 1] for i in range(self.shape.l))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(1, self.shape.N + 1))

    def is_semistandard(self) -> bool:
        return all(
            row[j] <= row[j + 1] for row in self.rows for j in range(self.shape.N - 1)
        )

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        """Ascending in this key == descending in the tableau order."""
        return self.columns()

    def to_json(self) -> dict:
        return {"N": self.shape.N, "l": self.shape.l, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(Shape(int(data["N"]), int(data["l"])),
                   tuple(tuple(int(x) for x in row) for row in data["rows"]))

    def __str__(self) -> str:
        return "/".join("".join(f"{x}" if x < 10 else f"({x})" for x in r) for r in self.rows)


def compare(t1: Tableau, t2: Tableau) -> int:
    """-1, 0 or 1 as t1 is smaller, equal or greater in the total order."""
    if t1.shape != t2.shape:
        raise ValueError("tableaux of different shape are incomparable")
    k1, k2 = t1.sort_key(), t2.sort_key()
    if k1 == k2:
        return 0
    return 1 if k1 < k2 else -1


def highest_tableau(shape: Shape) -> Tableau:
    """The maximal tableau: row r constantly filled with r."""
    return Tableau(shape, tuple(tuple(r + 1 for _ in range(shape.N)) for r in range(shape.l)))


def tableau_type(t: Tableau) -> tuple[int, ...]:
    """Entry multiplicities (k_1, ..., k_m); always sums to m."""
    m = t.shape.m
    k = [0] * m
    for row in t.rows:
        for x in row:
            k[x - 1] += 1
    return tuple(k)


def tableau_to_nu(t: Tableau) -> tuple[tuple[int, ...], ...]:
    """m indicator vectors over columns: nu^i_j = 1 iff column j contains i."""
    cols = [set(c) for c in t.columns()]
    return tuple(
        tuple(1 if i in cols[j] else 0 for j in range(t.shape.N))
        for i in range(1, t.shape.m + 1)
    )


def tableau_to_mu(t: Tableau) -> tuple[tuple[int, ...], ...]:
    """N indicator vectors over entries: mu^i_j = 1 iff j lies in column i."""
    return tuple(
        tuple(1 if j in set(t.column(i)) else 0 for j in range(1, t.shape.m + 1))
        for i in range(1, t.shape.N + 1)
    )


def tableau_from_nu(shape: Shape, nu: tuple[tuple[int, ...], ...]) -> Tableau:
    """Inverse of tableau_to_nu."""
    cols = [[] for _ in range(shape.N)]
    for i, row in enumerate(nu, start=1):
        for j, flag in enumerate(row):
            if flag:
                cols[j].append(i)
    if any(len(c) != shape.l for c in cols):
        raise ValueError("indicator vectors do not fill the shape")
    return Tableau(shape, tuple(tuple(col[i] for col in cols) for i in range(shape.l)))


def tableau_from_mu(shape: Shape, mu: tuple[tuple[int, ...], ...]) -> Tableau:
    """Inverse of tableau_to_mu."""
    cols = [sorted(j for j, flag in enumerate(row, start=1) if flag) for row in mu]
    if any(len(c) != shape.l for c in cols):
        raise ValueError("column sets must have size l")
    return Tableau(shape, tuple(tuple(col[i] for col in cols) for i in range(shape.l)))


@cache
def _columns_of_shape(l: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.combinations(range(1, m + 1), l))


def enumerate_tableaux(
    shape: Shape,
    type: tuple[int, ...] | None = None,
    semistandard_only: bool = False,
) -> list[Tableau]:
    """All tableaux of the shape (and type, if given), strictly descending.

    Columns are built left to right from the l-subsets of 1..m, pruning on
    entry counts when a type is given and on entrywise weak increase when
    only semistandard fillings are wanted.
    """
    if type is not None:
        if len(type) != shape.m or sum(type) != shape.m:
            raise ValueError("type must be an m-vector summing to m")
    out: list[Tableau] = []
    counts = [0] * (shape.m + 1)
    cols: list[tuple[int, ...]] = []

    def build(j: int) -> None:
        if j == shape.N:
            out.append(Tableau(shape, tuple(tuple(c[i] for c in cols) for i in range(shape.l))))
            return
        for col in _columns_of_shape(shape.l, shape.m):
            if semistandard_only and cols and any(a > b for a, b in zip(cols[-1], col)):
                continue
            if type is not None:
                if any(counts[x] + 1 > type[x - 1] for x in col):
                    continue
            for x in col:
                counts[x] += 1
            cols.append(col)
            build(j + 1)
            cols.pop()
            for x in col:
                counts[x] -= 1

    build(0)
    out.sort(key=Tableau.sort_key)
    return out


def peel_word(t: Tableau) -> list[tuple[int, int]]:
    """The lowering word of a semistandard tableau.

    Repeatedly find the smallest i (1 <= i <= m-1) such that entries equal
    to i+1 occur in rows 1..min(i, l); replace all r of them by i and record
    (i, r).  Stops at the maximal tableau.  The word is returned
    outermost-first: the first pair is the last move applied when raising
    back up from the maximal tableau.
    """
    if not t.is_semistandard():
        raise NotSemistandardError(f"not semistandard: {t}")
    shape = t.shape
    top = highest_tableau(shape)
    word: list[tuple[int, int]] = []
    cur = t
    while cur != top:
        for i in range(1, shape.m):
            hits = [
                (ri, ci)
                for ri in range(min(i, shape.l))
                for ci in range(shape.N)
                if cur.rows[ri][ci] == i + 1
            ]
            if hits:
                grid = [list(r) for r in cur.rows]
                for ri, ci in hits:
                    grid[ri][ci] = i
                try:
                    cur = Tableau(shape, tuple(tuple(r) for r in grid))
                except ValueError as exc:
                    raise NotSemistandardError(f"peeling broke column strictness: {exc}")
                if not cur.is_semistandard():
                    raise NotSemistandardError(f"peeling left the semistandard set at {cur}")
                word.append((i, len(hits)))
                break
        else:  # pragma: no cover - unreachable for semistandard input
            raise NotSemistandardError(f"peeling stuck at {cur}")
    return word
