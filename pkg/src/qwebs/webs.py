"""Web diagrams as composable slice sequences, and their two evaluators.

A web is a domain boundary plus a bottom-to-top list of elementary slices
(merge, split, cup, cap, tag, identity).  Ladders are the tagless webs built
from rungs between adjacent uprights; they realize the generators of the
quantum special linear algebra acting across skew Howe duality, with color-0
uprights kept as explicit factors so slots stay stable.

Two independent evaluators are provided: `evaluate_dense` composes the sparse
intertwiners slice by slice, while `evaluate_statesum` enumerates explicit
edge-labelings (states) of the compiled diagram and adds one signed monomial
per state.  They must agree on everything; the test suite enforces this.

Closed webs on the highest-weight boundary (color-N strands plus color-0
padding) span a one-dimensional space; `ev_closed` reads off the unique
coefficient and `web_form` builds the sesquilinear form
v^d(k) * ev(reflect(u) o w) from it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ring import LaurentPoly
from .tensor import (
    Boundary,
    Factor,
    ShapeMismatchError,
    TensorVector,
    _subsets,
    apply_cap,
    apply_cup,
    apply_merge,
    apply_split,
    apply_tag,
    basis_indices,
    cap_space,
    cup_space,
    ell,
    merged_space,
    split_space,
    tag_space,
)


class IllFormedWebError(ValueError):
    """A slice does not compose; carries the offending slice index."""

    def __init__(self, slice_index: int, message: str):
        super().__init__(f"slice {slice_index}: {message}")
        self.slice_index = slice_index


class AnnihilatedError(ValueError):
    """A ladder word pushed some weight entry outside 0..N (the action is zero)."""


@dataclass(frozen=True)
class Slice:
    kind: str  # merge | split | cup | cap | tag | id
    pos: int
    a: int = 0
    b: int = 0
    side: str = ""

    def mirror(self) -> "Slice":
        if self.kind == "merge":
            return Slice("split", self.pos, self.a, self.b)
        if self.kind == "split":
            return Slice("merge", self.pos, self.a, self.b)
        if self.kind == "cup":
            return Slice("cap", self.pos, self.a)
        if self.kind == "cap":
            return Slice("cup", self.pos, self.a)
        if self.kind == "tag":
            return Slice("tag", self.pos, self.a, side="right" if self.side == "left" else "left")
        return self

    def to_json(self) -> dict:
        d = {"kind": self.kind, "pos": self.pos}
        if self.kind in ("merge", "split"):
            d["a"], d["b"] = self.a, self.b
        elif self.kind in ("cup", "cap"):
            d["a"] = self.a
        elif self.kind == "tag":
            d["a"], d["side"] = self.a, self.side
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Slice":
        return cls(d["kind"], int(d["pos"]), int(d.get("a", 0)), int(d.get("b", 0)),
                   d.get("side", ""))


def merge(a: int, b: int, pos: int) -> Slice:
    return Slice("merge", pos, a, b)


def split(a: int, b: int, pos: int) -> Slice:
    return Slice("split", pos, a, b)


def cup(a: int, pos: int) -> Slice:
    return Slice("cup", pos, a)


def cap(a: int, pos: int) -> Slice:
    return Slice("cap", pos, a)


def tag(a: int, pos: int, side: str = "left") -> Slice:
    return Slice("tag", pos, a, side=side)


@dataclass(frozen=True)
class Web:
    domain: Boundary
    slices: tuple[Slice, ...] = ()

    def to_json(self) -> dict:
        return {
            "N": self.domain.N,
            "domain": self.domain.to_json(),
            "slices": [s.to_json() for s in self.slices],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Web":
        dom = Boundary.from_json(int(data["N"]), data["domain"])
        return cls(dom, tuple(Slice.from_json(s) for s in data["slices"]))


def _step_space(space: Boundary, s: Slice) -> Boundary:
    if s.kind == "merge":
        return merged_space(space, s.a, s.b, s.pos)
    if s.kind == "split":
        return split_space(space, s.a, s.b, s.pos)
    if s.kind == "cup":
        return cup_space(space, s.a, s.pos)
    if s.kind == "cap":
        return cap_space(space, s.a, s.pos)
    if s.kind == "tag":
        f = space.factor(s.pos)
        want = f.color if not f.dual else space.N - f.color
        if want != s.a:
            raise ShapeMismatchError(f"tag color {s.a} does not match slot {s.pos}")
        return tag_space(space, s.pos)
    if s.kind == "id":
        space.factor(s.pos)
        return space
    raise ShapeMismatchError(f"unknown slice kind {s.kind!r}")


def validate(web: Web) -> Boundary:
    """Check every slice composes; returns the codomain boundary."""
    space = web.domain
    for i, s in enumerate(web.slices):
        try:
            space = _step_space(space, s)
        except ShapeMismatchError as exc:
            raise IllFormedWebError(i, str(exc)) from exc
    return space


def codomain(web: Web) -> Boundary:
    return validate(web)


def compose(first: Web, then: Web) -> Web:
    """Stack `then` on top of `first`."""
    if validate(first) != then.domain:
        raise ShapeMismatchError("codomain of the first web does not match")
    return Web(first.domain, first.slices + then.slices)


def reflect(web: Web) -> Web:
    """Reflection across the horizontal axis: slices reversed and mirrored."""
    return Web(validate(web), tuple(s.mirror() for s in reversed(web.slices)))


def identity_web(space: Boundary) -> Web:
    return Web(space)


# -- ladders ----------------------------------------------------------


def weight_boundary(N: int, k: tuple[int, ...]) -> Boundary:
    return Boundary(N, tuple(Factor(c) for c in k))


def highest_weight_vector(N: int, l: int) -> TensorVector:
    """The canonical basis vector of the boundary (N,...,N,0,...,0)."""
    m = N * l
    k = (N,) * l + (0,) * (m - l)
    full = frozenset(range(1, N + 1))
    idx = tuple(full if c == N else frozenset() for c in k)
    return TensorVector.basis_vector(weight_boundary(N, k), idx)


def ladder_from_word(
    N: int, k_start: tuple[int, ...], word: list[tuple[int, int, int]]
) -> Web:
    """The ladder web for a word of raising/lowering rungs.

    Each word entry is (sign, i, a) with sign +1 or -1: a rung of width a
    between uprights i and i+1, moving toward upright i for +1 and toward
    upright i+1 for -1.  Raises AnnihilatedError when an intermediate weight
    entry leaves 0..N; width-0 rungs are dropped.
    """
    k = list(k_start)
    m = len(k)
    slices: list[Slice] = []
    for sign, i, a in word:
        if not 1 <= i <= m - 1:
            raise ValueError(f"rung index {i} outside 1..{m-1}")
        if a < 0:
            raise ValueError("rung width must be nonnegative")
        if a == 0:
            continue
        if sign < 0:
            lo, hi = k[i - 1] - a, k[i] + a
            if lo < 0 or hi > N:
                raise AnnihilatedError(f"weight ({k[i-1]},{k[i]}) cannot lower by {a}")
            slices.append(split(a, lo, i))
            slices.append(merge(k[i], a, i + 1))
            k[i - 1], k[i] = lo, hi
        else:
            lo, hi = k[i] - a, k[i - 1] + a
            if lo < 0 or hi > N:
                raise AnnihilatedError(f"weight ({k[i-1]},{k[i]}) cannot raise by {a}")
            slices.append(split(lo, a, i + 1))
            slices.append(merge(a, k[i - 1], i))
            k[i], k[i - 1] = lo, hi
    return Web(weight_boundary(N, tuple(k_start)), tuple(slices))


# -- dense evaluation -------------------------------------------------


def evaluate_dense(web: Web, x: TensorVector) -> TensorVector:
    """Compose the sparse elementary intertwiners slice by slice."""
    if x.space != web.domain:
        raise ShapeMismatchError("vector does not live in the web's domain")
    for s in web.slices:
        if s.kind == "merge":
            x = apply_merge(x, s.a, s.b, s.pos)
        elif s.kind == "split":
            x = apply_split(x, s.a, s.b, s.pos)
        elif s.kind == "cup":
            x = apply_cup(x, s.a, s.pos)
        elif s.kind == "cap":
            x = apply_cap(x, s.a, s.pos)
        elif s.kind == "tag":
            x = apply_tag(x, s.pos, s.side or "left")
        elif s.kind == "id":
            pass
        else:
            raise ShapeMismatchError(f"unknown slice kind {s.kind!r}")
    return x


def web_matrix(web: Web) -> dict:
    """Column map: domain basis index -> image TensorVector."""
    return {
        idx: evaluate_dense(web, TensorVector.basis_vector(web.domain, idx))
        for idx in basis_indices(web.domain)
    }


# -- state-sum evaluation ---------------------------------------------


@dataclass
class StateGraph:
    """Compiled diagram: edges with colors, events in bottom-to-top order."""

    n_edges: int = 0
    colors: list[int] = field(default_factory=list)
    events: list[tuple] = field(default_factory=list)
    domain_edges: list[int] = field(default_factory=list)
    codomain_edges: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class State:
    """An edge labeling: edge id -> subset of {1..N}, one color-sized set each."""

    assignment: tuple[frozenset, ...]

    def subset(self, edge: int) -> frozenset:
        return self.assignment[edge]


def compile_graph(web: Web) -> StateGraph:
    validate(web)
    g = StateGraph()

    def new_edge(color: int) -> int:
        g.colors.append(color)
        g.n_edges += 1
        return g.n_edges - 1

    space = web.domain
    current = [new_edge(f.color) for f in space.factors]
    g.domain_edges = current[:]
    for s in web.slices:
        if s.kind == "merge":
            out = new_edge(s.a + s.b)
            g.events.append(("merge", current[s.pos], current[s.pos - 1], out))
            current[s.pos - 1 : s.pos + 1] = [out]
        elif s.kind == "split":
            left, right = new_edge(s.a), new_edge(s.b)
            g.events.append(("split", current[s.pos - 1], left, right))
            current[s.pos - 1 : s.pos] = [right, left]
        elif s.kind == "tag":
            f = space.factor(s.pos)
            out = new_edge(space.N - f.color)
            g.events.append(("tag", current[s.pos - 1], out, s.side or "left", f.dual))
            current[s.pos - 1] = out
        elif s.kind == "cup":
            e = new_edge(s.a)
            g.events.append(("cup", e))
            current[s.pos - 1 : s.pos - 1] = [e, e]
        elif s.kind == "cap":
            g.events.append(("cap", current[s.pos], current[s.pos - 1]))
            del current[s.pos - 1 : s.pos + 1]
        space = _step_space(space, s)
    g.codomain_edges = current[:]
    return g


def _state_dfs(g: StateGraph, N: int, start: dict[int, frozenset]):
    """Yield complete assignments extending fixed values on the domain edges."""

    def walk(ev: int, assign: dict[int, frozenset]):
        if ev == len(g.events):
            yield assign
            return
        event = g.events[ev]
        kind = event[0]
        if kind == "merge":
            _, le, re, out = event
            S, T = assign[le], assign[re]
            if S & T:
                return
            assign2 = dict(assign)
            assign2[out] = S | T
            yield from walk(ev + 1, assign2)
        elif kind == "split":
            _, ine, le, re = event
            S = assign[ine]
            for comb in itertools.combinations(sorted(S), g.colors[le]):
                A = frozenset(comb)
                assign2 = dict(assign)
                assign2[le], assign2[re] = A, S - A
                yield from walk(ev + 1, assign2)
        elif kind == "tag":
            _, ine, out = event[:3]
            assign2 = dict(assign)
            assign2[out] = frozenset(range(1, N + 1)) - assign[ine]
            yield from walk(ev + 1, assign2)
        elif kind == "cup":
            _, e = event
            for S in _subsets(N, g.colors[e]):
                assign2 = dict(assign)
                assign2[e] = S
                yield from walk(ev + 1, assign2)
        elif kind == "cap":
            _, e1, e2 = event
            if assign[e1] != assign[e2]:
                return
            yield from walk(ev + 1, assign)

    yield from walk(0, dict(start))


def enumerate_states(web: Web, domain_index, codomain_index) -> list[State]:
    """All states compatible with the fixed boundary indices."""
    g = compile_graph(web)
    N = web.domain.N
    start = {}
    for e, S in zip(g.domain_edges, domain_index):
        if e in start and start[e] != S:
            return []
        start[e] = frozenset(S)
    out = []
    for assign in _state_dfs(g, N, start):
        if tuple(assign[e] for e in g.codomain_edges) == tuple(
            frozenset(s) for s in codomain_index
        ):
            full = tuple(assign.get(e, frozenset()) for e in range(g.n_edges))
            out.append(State(full))
    return out


def _assignment_weight(g: StateGraph, N: int, subset_of) -> LaurentPoly:
    exp = 0
    sign = 1
    for event in g.events:
        kind = event[0]
        if kind == "merge":
            _, le, re, _out = event
            exp += ell(subset_of(re), subset_of(le))
        elif kind == "split":
            _, _ine, le, re = event
            exp -= ell(subset_of(le), subset_of(re))
        elif kind == "tag":
            _, ine, _out, side, in_dual = event
            S = subset_of(ine)
            comp = frozenset(range(1, N + 1)) - S
            if in_dual:
                exp -= ell(S, comp)
                a = N - len(S)
            else:
                exp += ell(comp, S)
                a = len(S)
            if side == "right" and (a * (N - a)) % 2:
                sign = -sign
    return LaurentPoly.monomial(exp, sign)


def state_weight(web: Web, state: State) -> LaurentPoly:
    """The signed monomial a single state contributes."""
    g = compile_graph(web)
    return _assignment_weight(g, web.domain.N, state.subset)


def evaluate_statesum(web: Web, x: TensorVector) -> TensorVector:
    """Sum the per-state monomials over all states; agrees with evaluate_dense."""
    if x.space != web.domain:
        raise ShapeMismatchError("vector does not live in the web's domain")
    g = compile_graph(web)
    N = web.domain.N
    cod = validate(web)
    out = TensorVector(cod)
    for idx, coeff in x.coords.items():
        start = dict(zip(g.domain_edges, idx))
        for assign in _state_dfs(g, N, start):
            w = _assignment_weight(g, N, assign.__getitem__)
            out.add_term(tuple(assign[e] for e in g.codomain_edges), coeff * w)
    return out


# -- closed evaluation and the web form -------------------------------


def d_norm(N: int, l: int, k: tuple[int, ...]) -> int:
    """The normalization exponent (N(N-1)l - sum k_i(k_i-1)) / 2."""
    twice = N * (N - 1) * l - sum(c * (c - 1) for c in k)
    if twice % 2:
        raise ValueError(f"normalization exponent is fractional for k={k}")
    return twice // 2


def _closed_index(space: Boundary):
    full = frozenset(range(1, space.N + 1))
    idx = []
    for f in space.factors:
        if f.dual or f.color not in (0, space.N):
            raise ShapeMismatchError(
                "closed evaluation needs color-N strands with color-0 padding"
            )
        idx.append(full if f.color == space.N else frozenset())
    return tuple(idx)


def ev_closed(web: Web) -> LaurentPoly:
    """The unique coefficient of an endomorphism of the highest-weight boundary."""
    cod = validate(web)
    if cod != web.domain:
        raise ShapeMismatchError("closed evaluation needs equal domain and codomain")
    idx = _closed_index(web.domain)
    image = evaluate_dense(web, TensorVector.basis_vector(web.domain, idx))
    return image.coeff(idx)


def web_form(u: Web, w: Web) -> LaurentPoly:
    """The sesquilinear web form v^d(k) * ev(reflect(u) o w)."""
    if u.domain != w.domain:
        raise ShapeMismatchError("webs must share their domain")
    cod_u, cod_w = validate(u), validate(w)
    if cod_u != cod_w:
        raise ShapeMismatchError("webs must share their codomain")
    _closed_index(u.domain)  # domain must be the highest-weight boundary
    if any(f.dual for f in cod_w.factors):
        raise ShapeMismatchError("the web form is defined on plain boundaries")
    k = tuple(f.color for f in cod_w.factors)
    l = sum(1 for f in u.domain.factors if f.color == u.domain.N)
    d = d_norm(u.domain.N, l, k)
    return ev_closed(compose(w, reflect(u))).shift(d)
