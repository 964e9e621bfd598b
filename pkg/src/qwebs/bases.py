"""Basis vectors of the invariant web spaces.

For each semistandard tableau T the intermediate basis vector A^T is the
divided-power word from the peeling procedure applied to the highest-weight
vector.  Its expansion on column-strict tableaux is unitriangular with
nonnegative-coefficient Laurent polynomials below the leading term.

The dual canonical element b^T is computed from the A-basis by triangular
elimination: scanning semistandard S below T in descending order, any
coefficient at S that fails the negative-exponent test is repaired by
subtracting the bar-symmetric part times A^S.  The recorded corrections
beta_ST are bar-invariant and the result satisfies the full negative
exponent property, also at non-semistandard tableaux; the final check turns
that theorem into a runtime invariant.

Everything is organized per (shape, type) block: coefficients between
different blocks vanish, so blocks are computed and cached independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .howe import TableauVector, act_divided, highest_vector
from .ring import LaurentPoly, bar, symmetrize_correction
from .tableaux import Shape, Tableau, enumerate_tableaux, peel_word, tableau_type
from .webs import Web, ladder_from_word, web_form


class InvariantViolationError(RuntimeError):
    """A structural invariant guaranteed by the theory failed at runtime."""


@dataclass(frozen=True)
class LTBasisElement:
    tableau: Tableau
    word: tuple[tuple[int, int], ...]
    expansion: TableauVector


@dataclass(frozen=True)
class DualCanonicalElement:
    tableau: Tableau
    expansion: TableauVector
    beta: tuple[tuple[Tableau, LaurentPoly], ...]


@dataclass(frozen=True)
class NegativeExponentReport:
    passed: bool
    violations: tuple[tuple[Tableau, LaurentPoly], ...]


def check_negative_exponent(x: TableauVector, leading: Tableau) -> NegativeExponentReport:
    """Leading coefficient must be 1; every other one in v^-1 Z[v^-1]."""
    violations = []
    lead = x.coeff(leading)
    if not lead.is_one():
        violations.append((leading, lead))
    for t, c in x.coords.items():
        if t != leading and not c.only_negative_exponents():
            violations.append((t, c))
    violations.sort(key=lambda vc: vc[0].sort_key())
    return NegativeExponentReport(not violations, tuple(violations))


def lt_vector(t: Tableau) -> LTBasisElement:
    """The intermediate basis vector attached to a semistandard tableau."""
    word = peel_word(t)
    x = highest_vector(t.shape)
    for i, r in reversed(word):
        x = act_divided(-1, i, r, x)
    if not x.coeff(t).is_one():
        raise InvariantViolationError(f"leading coefficient at {t} is {x.coeff(t)}")
    key = t.sort_key()
    for tau, c in x.coords.items():
        if tau != t and tau.sort_key() <= key:
            raise InvariantViolationError(f"non-triangular term {tau} in the vector of {t}")
        if not c.nonnegative_coeffs():
            raise InvariantViolationError(f"negative coefficient {c} at {tau}")
    return LTBasisElement(t, tuple(word), x)


@cache
def lt_block(N: int, l: int, ktype: tuple[int, ...]) -> dict[Tableau, LTBasisElement]:
    """All LT vectors of one type, keyed by tableau (descending iteration order)."""
    shape = Shape(N, l)
    return {t: lt_vector(t) for t in enumerate_tableaux(shape, ktype, semistandard_only=True)}


def dual_canonical(t: Tableau) -> DualCanonicalElement:
    """Triangular bar-symmetric correction of the LT vector at t."""
    block = lt_block(t.shape.N, t.shape.l, tableau_type(t))
    if t not in block:
        raise ValueError(f"{t} is not semistandard")
    cur = TableauVector(t.shape, dict(block[t].expansion.coords))
    beta: list[tuple[Tableau, LaurentPoly]] = []
    below = [s for s in block if s.sort_key() > t.sort_key()]  # s < t, descending
    for s in below:
        gamma = symmetrize_correction(cur.coeff(s))
        if not gamma.is_zero():
            cur = cur - block[s].expansion.scale(gamma)
            beta.append((s, -gamma))
    report = check_negative_exponent(cur, t)
    if not report.passed:
        raise InvariantViolationError(
            f"negative exponent property fails for {t}: {report.violations}"
        )
    for s, g in beta:
        if bar(g) != g:
            raise InvariantViolationError(f"correction at {s} is not bar-invariant: {g}")
    return DualCanonicalElement(t, cur, tuple(beta))


@cache
def dual_block(N: int, l: int, ktype: tuple[int, ...]) -> dict[Tableau, DualCanonicalElement]:
    shape = Shape(N, l)
    return {
        t: dual_canonical(t)
        for t in enumerate_tableaux(shape, ktype, semistandard_only=True)
    }


# -- the form and Gram/Cartan data -------------------------------------


def pairing(x: TableauVector, y: TableauVector) -> LaurentPoly:
    """The sesquilinear form on bar-symmetric vectors, via tensor coefficients.

    bar(sum_tau c^x_tau * c^y_tau) over the common expansion; valid for
    vectors fixed by the bar involution (all basis vectors here are).
    """
    total = LaurentPoly.zero()
    for tau, cx in x.coords.items():
        cy = y.coords.get(tau)
        if cy is not None:
            total = total + cx * cy
    return bar(total)


def lt_web(t: Tableau) -> Web:
    """The ladder web of the LT vector: the peel word glued bottom-up."""
    shape = t.shape
    m = shape.m
    k_start = (shape.N,) * shape.l + (0,) * (m - shape.l)
    word = [(-1, i, r) for i, r in reversed(peel_word(t))]
    return ladder_from_word(shape.N, k_start, word)


@dataclass(frozen=True)
class GradedMatrix:
    """Square array of Laurent polynomials over descending semistandard labels."""

    labels: tuple[Tableau, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {
            "labels": [t.to_json() for t in self.labels],
            "entries": [[p.to_json() for p in row] for row in self.entries],
        }


def gram_matrix(N: int, l: int, ktype: tuple[int, ...], basis: str = "lt") -> GradedMatrix:
    """Gram matrix of a basis of one type block.

    For the LT basis every entry is computed twice: from the tensor
    expansions and by closed evaluation of the composed ladder webs; a
    disagreement raises InvariantViolationError.  The dual canonical Gram
    uses the tensor route.
    """
    if basis == "lt":
        block = lt_block(N, l, ktype)
        expansions = {t: e.expansion for t, e in block.items()}
    elif basis == "dual":
        block = dual_block(N, l, ktype)
        expansions = {t: e.expansion for t, e in block.items()}
    else:
        raise ValueError(f"unknown basis {basis!r}")
    labels = tuple(block)
    rows = []
    webs = {t: lt_web(t) for t in labels} if basis == "lt" else None
    for s in labels:
        row = []
        for t in labels:
            value = pairing(expansions[s], expansions[t])
            if webs is not None:
                by_web = web_form(webs[s], webs[t])
                if by_web != value:
                    raise InvariantViolationError(
                        f"web and tensor Gram entries disagree at ({s}, {t}): "
                        f"{by_web} vs {value}"
                    )
            row.append(value)
        rows.append(tuple(row))
    return GradedMatrix(labels, tuple(rows))
