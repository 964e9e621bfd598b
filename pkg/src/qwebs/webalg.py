"""Graded-dimension data of the web algebras, one block per bounded weight.

The block algebra attached to a weight vector k is spanned by webs sandwiched
between two basis webs; its graded Cartan matrix is the Gram matrix of the
intermediate web basis under the web form.  The block is a graded symmetric
Frobenius algebra whose Gorenstein parameter is twice the normalization
exponent d(k); at the level of graded dimensions this reads

    C_ST = C_TS   and   bar(C_ST) = v^(-2d) * C_ST,

so the total graded dimension D satisfies D(v^-1) = v^(-2d) D(v), which is
what `frobenius_check` asserts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bases import GradedMatrix, gram_matrix
from .ring import LaurentPoly, bar
from .webs import d_norm


def _shape_of_weight(N: int, k: tuple[int, ...]) -> int:
    m = len(k)
    if m % N:
        raise ValueError(f"weight length {m} is not a multiple of N={N}")
    l = m // N
    if sum(k) != m or any(not 0 <= c <= N for c in k):
        raise ValueError(f"{k} is not an N-bounded weight of total {m}")
    return l


def cartan_matrix(N: int, k: tuple[int, ...]) -> GradedMatrix:
    """Graded Cartan matrix of the block at weight k."""
    l = _shape_of_weight(N, k)
    return gram_matrix(N, l, tuple(k), basis="lt")


def gorenstein_parameter(N: int, k: tuple[int, ...]) -> int:
    l = _shape_of_weight(N, k)
    return 2 * d_norm(N, l, tuple(k))


@dataclass(frozen=True)
class FrobeniusReport:
    k: tuple[int, ...]
    passed: bool
    total_dimension: LaurentPoly
    gorenstein: int


def frobenius_check(N: int, k: tuple[int, ...]) -> FrobeniusReport:
    """Check D(v^-1) = v^(-2d) D(v) for the total graded dimension D."""
    cartan = cartan_matrix(N, k)
    total = LaurentPoly.zero()
    for row in cartan.entries:
        for p in row:
            total = total + p
    g = gorenstein_parameter(N, k)
    passed = bar(total) == total.shift(-g)
    return FrobeniusReport(tuple(k), passed, total, g)


def bounded_weights(N: int, m: int) -> list[tuple[int, ...]]:
    """All m-vectors with entries 0..N summing to m, lexicographically."""
    out: list[tuple[int, ...]] = []

    def build(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for c in range(min(N, remaining) + 1):
            if remaining - c <= N * (slots - 1):
                prefix.append(c)
                build(prefix, remaining - c, slots - 1)
                prefix.pop()

    build([], m, m)
    return out
