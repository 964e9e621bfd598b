"""Standard bases of tensor products of fundamental SL(N) representations.

A boundary is an ordered list of factors, each a fundamental representation
(exterior power of color 0..N) or its dual.  Slot 1 is the RIGHTMOST tensor
factor; all position arguments use this numbering, so a pair written
x_S (x) x_T in the mathematical order has S at the higher slot.

Basis vectors are indexed per factor by subsets of {1..N}: a plain factor of
color a by a-subsets (decreasing-order wedges of standard vectors), a dual
factor of color c by the c-subsets indexing the dual basis.  Vectors are
sparse maps from index tuples to Laurent polynomials; no zero value is ever
stored.

The elementary intertwiners implemented here, with their local coefficients:

  merge  (a,b):  x_S (x) x_T  ->  v^len(T,S) x_{S u T}   (0 unless disjoint)
  split  (a,b):  x_S  ->  sum_T v^-len(T, S-T) x_T (x) x_{S-T},  |T| = a
  tag    (a):    x_S  ->  v^len(S^c, S) xhat_{S^c}        (left flavor)
                 the right flavor carries the extra sign (-1)^(a(N-a));
                 on a dual factor a tag applies the corresponding inverse
  cup    (a):    1 -> sum_S x_S (x) xhat_S  (plain at the left slot)
  cap    (a):    xhat_S (x) x_T -> delta_{S,T}

where len(S,T) counts pairs i in S, j in T with i < j.  The merge coefficient
attaches v^len(T,S) with S the left input; this choice is pinned down by the
known expansions of the small invariant vectors (see tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .ring import ONE, LaurentPoly


class ShapeMismatchError(ValueError):
    """Raised when an operation does not fit the boundary at the given slot."""


@dataclass(frozen=True)
class Factor:
    color: int
    dual: bool = False

    def to_json(self) -> dict:
        return {"color": self.color, "dual": self.dual}

    @classmethod
    def from_json(cls, data: dict) -> "Factor":
        return cls(int(data["color"]), bool(data.get("dual", False)))


@dataclass(frozen=True)
class Boundary:
    """An ordered tensor boundary; factors[0] is slot 1 (rightmost)."""

    N: int
    factors: tuple[Factor, ...]

    def __post_init__(self):
        for f in self.factors:
            if not 0 <= f.color <= self.N:
                raise ValueError(f"factor color {f.color} outside 0..{self.N}")

    def __len__(self) -> int:
        return len(self.factors)

    def factor(self, pos: int) -> Factor:
        if not 1 <= pos <= len(self.factors):
            raise ShapeMismatchError(f"slot {pos} outside 1..{len(self.factors)}")
        return self.factors[pos - 1]

    def replace(self, pos: int, count: int, new: tuple[Factor, ...]) -> "Boundary":
        """Splice `new` over `count` factors starting at slot `pos`."""
        fs = self.factors
        return Boundary(self.N, fs[: pos - 1] + new + fs[pos - 1 + count :])

    def to_json(self) -> list[dict]:
        return [f.to_json() for f in self.factors]

    @classmethod
    def from_json(cls, N: int, data: list[dict]) -> "Boundary":
        return cls(N, tuple(Factor.from_json(d) for d in data))


Index = tuple[frozenset, ...]


def ell(S, T) -> int:
    """Number of pairs (i, j) with i in S, j in T and i < j."""
    return sum(1 for i in S for j in T if i < j)


@cache
def _subsets(N: int, k: int) -> tuple[frozenset, ...]:
    return tuple(frozenset(c) for c in itertools.combinations(range(1, N + 1), k))


def basis_indices(space: Boundary) -> list[Index]:
    """All basis index tuples of the space, in a fixed deterministic order."""
    pools = [_subsets(space.N, f.color) for f in space.factors]
    return [tuple(choice) for choice in itertools.product(*pools)]


def _index_key(idx: Index) -> tuple:
    return tuple(tuple(sorted(s, reverse=True)) for s in idx)


class TensorVector:
    """A sparse vector: finite map from basis indices to Laurent polynomials."""

    __slots__ = ("space", "coords")

    def __init__(self, space: Boundary, coords: dict[Index, LaurentPoly] | None = None):
        self.space = space
        self.coords: dict[Index, LaurentPoly] = {}
        if coords:
            for idx, c in coords.items():
                if not c.is_zero():
                    self.coords[idx] = c

    @classmethod
    def basis_vector(cls, space: Boundary, idx: Index, coeff: LaurentPoly = ONE) -> "TensorVector":
        for s, f in zip(idx, space.factors):
            if len(s) != f.color:
                raise ShapeMismatchError(f"index {sorted(s)} does not match color {f.color}")
        return cls(space, {idx: coeff})

    def add_term(self, idx: Index, c: LaurentPoly) -> None:
        s = self.coords.get(idx)
        s = c if s is None else s + c
        if s.is_zero():
            self.coords.pop(idx, None)
        else:
            self.coords[idx] = s

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.space != other.space:
            raise ShapeMismatchError("cannot add vectors in different spaces")
        out = TensorVector(self.space, dict(self.coords))
        for idx, c in other.coords.items():
            out.add_term(idx, c)
        return out

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, c: LaurentPoly) -> "TensorVector":
        if c.is_zero():
            return TensorVector(self.space)
        return TensorVector(self.space, {i: a * c for i, a in self.coords.items()})

    def is_zero(self) -> bool:
        return not self.coords

    def coeff(self, idx: Index) -> LaurentPoly:
        return self.coords.get(idx, LaurentPoly.zero())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorVector)
            and self.space == other.space
            and self.coords == other.coords
        )

    def __repr__(self) -> str:
        terms = ", ".join(
            f"({c}) {_index_key(i)}" for i, c in sorted(self.coords.items(), key=lambda kv: _index_key(kv[0]))
        )
        return f"TensorVector[{terms or '0'}]"

    def to_json(self) -> dict:
        terms = []
        for idx in sorted(self.coords, key=_index_key):
            terms.append(
                {
                    "subsets": [sorted(s, reverse=True) for s in idx],
                    "coeff": self.coords[idx].to_json(),
                }
            )
        return {"N": self.space.N, "space": self.space.to_json(), "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "TensorVector":
        space = Boundary.from_json(int(data["N"]), data["space"])
        out = cls(space)
        for term in data["terms"]:
            idx = tuple(frozenset(int(x) for x in s) for s in term["subsets"])
            out.add_term(idx, LaurentPoly.from_json(term["coeff"]))
        return out


def tensor_product(x: TensorVector, y: TensorVector) -> TensorVector:
    """Concatenate boundaries, x to the left of y (y keeps the low slots)."""
    if x.space.N != y.space.N:
        raise ShapeMismatchError("tensor factors over different N")
    space = Boundary(x.space.N, y.space.factors + x.space.factors)
    out = TensorVector(space)
    for ix, cx in x.coords.items():
        for iy, cy in y.coords.items():
            out.add_term(iy + ix, cx * cy)
    return out


def _expect(space: Boundary, pos: int, color: int, dual: bool) -> None:
    f = space.factor(pos)
    if f.color != color or f.dual != dual:
        want = f"{color}{'*' if dual else ''}"
        got = f"{f.color}{'*' if f.dual else ''}"
        raise ShapeMismatchError(f"slot {pos}: expected {want}, found {got}")


def merged_space(space: Boundary, a: int, b: int, pos: int) -> Boundary:
    _expect(space, pos, b, False)
    _expect(space, pos + 1, a, False)
    if a + b > space.N:
        raise ShapeMismatchError(f"merge color {a}+{b} exceeds N={space.N}")
    return space.replace(pos, 2, (Factor(a + b),))


def apply_merge(x: TensorVector, a: int, b: int, pos: int) -> TensorVector:
    """Wedge the factors at slots pos+1 (color a, left) and pos (color b)."""
    space = merged_space(x.space, a, b, pos)
    out = TensorVector(space)
    for idx, c in x.coords.items():
        S, T = idx[pos], idx[pos - 1]  # left, right
        if S & T:
            continue
        coeff = c.shift(ell(T, S))
        out.add_term(idx[: pos - 1] + (S | T,) + idx[pos + 1 :], coeff)
    return out


def split_space(space: Boundary, a: int, b: int, pos: int) -> Boundary:
    _expect(space, pos, a + b, False)
    if a < 0 or b < 0 or a + b > space.N:
        raise ShapeMismatchError(f"split colors ({a},{b}) invalid for N={space.N}")
    return space.replace(pos, 1, (Factor(b), Factor(a)))


def apply_split(x: TensorVector, a: int, b: int, pos: int) -> TensorVector:
    """Split the color-(a+b) factor at pos into a (slot pos+1) and b (slot pos)."""
    space = split_space(x.space, a, b, pos)
    out = TensorVector(space)
    for idx, c in x.coords.items():
        S = idx[pos - 1]
        for comb in itertools.combinations(sorted(S), a):
            T = frozenset(comb)
            rest = S - T
            coeff = c.shift(-ell(T, rest))
            out.add_term(idx[: pos - 1] + (rest, T) + idx[pos:], coeff)
    return out


def tag_space(space: Boundary, pos: int) -> Boundary:
    f = space.factor(pos)
    return space.replace(pos, 1, (Factor(space.N - f.color, not f.dual),))


def apply_tag(x: TensorVector, pos: int, side: str = "left") -> TensorVector:
    """Flip the factor at pos across the duality of exterior powers.

    On a plain color-a factor the left flavor sends x_S to
    v^len(S^c, S) xhat_{S^c}; on a dual color-c factor it applies the inverse
    of the corresponding map.  The right flavor multiplies by (-1)^(a(N-a)).
    Two tags of equal side at the same slot compose to the identity.
    """
    if side not in ("left", "right"):
        raise ValueError(f"unknown tag side {side!r}")
    space = x.space
    f = space.factor(pos)
    N = space.N
    a = f.color if not f.dual else N - f.color
    sign = -1 if (side == "right" and (a * (N - a)) % 2) else 1
    new_space = tag_space(space, pos)
    full = frozenset(range(1, N + 1))
    out = TensorVector(new_space)
    for idx, c in x.coords.items():
        S = idx[pos - 1]
        comp = full - S
        if f.dual:
            coeff = c.shift(-ell(S, comp)) * sign
        else:
            coeff = c.shift(ell(comp, S)) * sign
        out.add_term(idx[: pos - 1] + (comp,) + idx[pos:], coeff)
    return out


def cup_space(space: Boundary, a: int, pos: int) -> Boundary:
    if not 1 <= pos <= len(space.factors) + 1:
        raise ShapeMismatchError(f"cup position {pos} outside 1..{len(space.factors)+1}")
    if not 0 <= a <= space.N:
        raise ShapeMismatchError(f"cup color {a} outside 0..{space.N}")
    return space.replace(pos, 0, (Factor(a, dual=True), Factor(a)))


def apply_cup(x: TensorVector, a: int, pos: int) -> TensorVector:
    """Insert sum_S x_S (x) xhat_S at the position (plain at slot pos+1)."""
    space = cup_space(x.space, a, pos)
    out = TensorVector(space)
    for idx, c in x.coords.items():
        for S in _subsets(space.N, a):
            out.add_term(idx[: pos - 1] + (S, S) + idx[pos - 1 :], c)
    return out


def cap_space(space: Boundary, a: int, pos: int) -> Boundary:
    lo, hi = space.factor(pos), space.factor(pos + 1)
    if lo.color != a or hi.color != a or lo.dual == hi.dual:
        raise ShapeMismatchError(
            f"cap needs a dual/plain color-{a} pair at slots {pos},{pos+1}"
        )
    return space.replace(pos, 2, ())


def apply_cap(x: TensorVector, a: int, pos: int) -> TensorVector:
    """Contract the color-a pair at slots pos, pos+1 by delta of indices.

    The intertwiner pairing has the dual factor at the left slot; the
    opposite layout is accepted too and contracts by the same delta (the
    naive closure, whose round trip on a cup counts the a-subsets).
    """
    space = cap_space(x.space, a, pos)
    out = TensorVector(space)
    for idx, c in x.coords.items():
        if idx[pos - 1] == idx[pos]:
            out.add_term(idx[: pos - 1] + idx[pos + 1 :], c)
    return out
