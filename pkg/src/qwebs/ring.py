"""Exact integer Laurent polynomials in the quantum parameter v.

A polynomial is stored as a map from integer exponent to nonzero integer
coefficient; the zero polynomial is the empty map.  All arithmetic is exact
(arbitrary-precision integers, no floats), values are immutable after
construction and safe to share between workers.

Besides the ring operations this module provides the balanced quantum
combinatorics ([n], [n]!, Gaussian binomials), the bar involution v -> v^-1,
the bar-symmetrization step used by the triangular basis algorithm, and exact
division.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class NonDivisibleError(ArithmeticError):
    """Raised when an exact Laurent-polynomial quotient does not exist."""


class LaurentPoly:
    """An integer Laurent polynomial in v.

    Immutable value type; equality is structural and exact.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, a in items:
            if a:
                c[e] = c.get(e, 0) + a
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        """coeff * v**exp"""
        return cls({exp: coeff})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._c.items()))

    def degree(self) -> int:
        """Top exponent; raises ValueError on the zero polynomial."""
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def valuation(self) -> int:
        """Bottom exponent; raises ValueError on the zero polynomial."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def only_negative_exponents(self) -> bool:
        """True iff the polynomial lies in v^-1 * Z[v^-1] (zero counts)."""
        return all(e < 0 for e in self._c)

    def nonnegative_coeffs(self) -> bool:
        return all(a > 0 for a in self._c.values())

    def eval_at_one(self) -> int:
        """Sum of coefficients (the value at v = 1)."""
        return sum(self._c.values())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -a for e, a in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: a * other for e, a in self._c.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by v**exp."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + exp: a for e, a in self._c.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        r = LaurentPoly.one()
        for _ in range(n):
            r = r * self
        return r

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            if e == 0:
                term = str(abs(a))
            else:
                va = "v" if e == 1 else f"v^{e}"
                term = va if abs(a) == 1 else f"{abs(a)}{va}"
            parts.append(("- " if a < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # -- serialization ------------------------------------------------

    def to_json(self) -> list[list[int]]:
        """[[exponent, coefficient], ...] sorted ascending; [] encodes 0."""
        return [[e, a] for e, a in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((int(e), int(a)) for e, a in data)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def bar(p: LaurentPoly) -> LaurentPoly:
    """The bar involution v -> v^-1 (negates every exponent)."""
    out = LaurentPoly.__new__(LaurentPoly)
    out._c = {-e: a for e, a in p._c.items()}
    return out


def qint(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = v^(n-1) + v^(n-3) + ... + v^(1-n), n >= 0."""
    if n < 0:
        raise ValueError("qint requires n >= 0")
    return LaurentPoly({n - 1 - 2 * j: 1 for j in range(n)})


def qnum(z: int) -> LaurentPoly:
    """Balanced quantum number for any integer: [-n] = -[n]."""
    return qint(z) if z >= 0 else -qint(-z)


def qfactorial(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n]."""
    r = LaurentPoly.one()
    for j in range(1, n + 1):
        r = r * qint(j)
    return r


def qbinom(n: int, k: int) -> LaurentPoly:
    """Balanced Gaussian binomial [n choose k].

    Defined for any integer n via the product formula
    [n-k+1][n-k+2]...[n] / [k]!; zero when k < 0, or when 0 <= n < k.
    Coefficients are nonnegative for n >= 0; for n < 0 the usual sign
    (-1)^k [k-n-1 choose k] appears.
    """
    if k < 0:
        return LaurentPoly.zero()
    num = LaurentPoly.one()
    for j in range(1, k + 1):
        num = num * qnum(n - k + j)
        if num.is_zero():
            return num
    return exact_divide(num, qfactorial(k))


def symmetrize_correction(p: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant g with p - g in v^-1 * Z[v^-1].

    g = p_0 + sum_{i>0} p_i (v^i + v^-i) where p_i is the coefficient
    of v^i in p.
    """
    c: dict[int, int] = {}
    for e, a in p._c.items():
        if e == 0:
            c[0] = c.get(0, 0) + a
        elif e > 0:
            c[e] = c.get(e, 0) + a
            c[-e] = c.get(-e, 0) + a
    return LaurentPoly(c)


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / q in Z[v, v^-1].

    Raises NonDivisibleError when no quotient with integer coefficients
    exists.  Inside this package a failure always indicates an upstream
    bug: divided-power actions are integral.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    # Shift both operands to honest polynomials with nonzero constant term,
    # long-divide from the top, and shift back.
    shift = p.valuation() - q.valuation()
    rem = dict(p.shift(-p.valuation())._c)
    den = q.shift(-q.valuation())._c
    dq = max(den)
    lead = den[dq]
    quot: dict[int, int] = {}
    while rem:
        dp = max(rem)
        if dp < dq:
            raise NonDivisibleError(f"{p} is not divisible by {q}")
        c, r = divmod(rem[dp], lead)
        if r:
            raise NonDivisibleError(f"{p} is not divisible by {q}")
        e = dp - dq
        quot[e] = c
        for de, da in den.items():
            s = rem.get(de + e, 0) - da * c
            if s:
                rem[de + e] = s
            elif de + e in rem:
                del rem[de + e]
    return LaurentPoly(quot).shift(shift)
