"""Relation and property sweeps.

Each checker returns a Report with a pass flag, a case count and the list of
failures (empty when green).  The CLI `verify` subcommand and the acceptance
test suite both drive these functions; everything is deterministic given the
seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bases import dual_block, lt_block, pairing
from .howe import (
    TableauVector,
    act_E,
    act_divided,
    from_tensor,
    highest_vector,
    to_tensor,
    weight_of_type,
)
from .ring import LaurentPoly, bar, qbinom, qnum
from .tableaux import Shape, enumerate_tableaux, tableau_type
from .tensor import Boundary, Factor, TensorVector, basis_indices
from .webalg import bounded_weights, cartan_matrix, frobenius_check, gorenstein_parameter
from .webs import (
    AnnihilatedError,
    Web,
    cap,
    cup,
    d_norm,
    evaluate_dense,
    evaluate_statesum,
    ladder_from_word,
    merge,
    split,
    tag,
    weight_boundary,
    web_matrix,
)


@dataclass
class Report:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.cases} checks"
        if self.failures:
            line += f", {len(self.failures)} failures; first: {self.failures[0]}"
        return line


# -- linear-map helpers -------------------------------------------------


def _zero_matrix(domain: Boundary, cod: Boundary) -> dict:
    return {idx: TensorVector(cod) for idx in basis_indices(domain)}


def _scale_matrix(mat: dict, c: LaurentPoly) -> dict:
    return {idx: vec.scale(c) for idx, vec in mat.items()}


def _add_matrices(m1: dict, m2: dict) -> dict:
    return {idx: m1[idx] + m2[idx] for idx in m1}


def _matrices_equal(m1: dict, m2: dict) -> bool:
    if m1.keys() != m2.keys():
        return False
    return all(m1[idx] == m2[idx] for idx in m1)


def _identity_matrix(space: Boundary) -> dict:
    return {idx: TensorVector.basis_vector(space, idx) for idx in basis_indices(space)}


def ladder_matrix(N: int, k_start: tuple[int, ...], word) -> tuple[tuple[int, ...], dict] | None:
    """(final weight, matrix) of a ladder word; zero matrix when annihilated.

    Returns None when even the final weight leaves 0..N, in which case the
    word indexes no map at all.
    """
    k = list(k_start)
    for sign, i, a in word:
        if sign < 0:
            k[i - 1] -= a
            k[i] += a
        else:
            k[i] -= a
            k[i - 1] += a
    if any(not 0 <= c <= N for c in k):
        return None
    try:
        web = ladder_from_word(N, k_start, list(word))
    except AnnihilatedError:
        return tuple(k), _zero_matrix(weight_boundary(N, k_start), weight_boundary(N, tuple(k)))
    return tuple(k), web_matrix(web)


# -- diagram relations --------------------------------------------------


def check_relations(N_max: int = 4) -> Report:
    rep = Report(f"diagram relations (N <= {N_max})")
    for N in range(2, N_max + 1):
        _check_tag_relations(rep, N)
        _check_digons(rep, N)
        _check_associativity(rep, N)
        _check_squares(rep, N)
    return rep


def _check_tag_relations(rep: Report, N: int) -> None:
    for a in range(N + 1):
        space = Boundary(N, (Factor(a),))
        left = web_matrix(Web(space, (tag(a, 1, "left"),)))
        right = web_matrix(Web(space, (tag(a, 1, "right"),)))
        sign = LaurentPoly({0: -1 if (a * (N - a)) % 2 else 1})
        rep.check(
            _matrices_equal(left, _scale_matrix(right, sign)),
            f"tag flavors differ beyond the sign at N={N}, a={a}",
        )
        # a tag followed by a tag of the same flavor undoes itself
        for side in ("left", "right"):
            again = web_matrix(Web(space, (tag(a, 1, side), tag(N - a, 1, side))))
            rep.check(
                _matrices_equal(again, _identity_matrix(space)),
                f"double {side} tag is not the identity at N={N}, a={a}",
            )


def _check_digons(rep: Report, N: int) -> None:
    for a in range(N + 1):
        for b in range(N + 1 - a):
            space = Boundary(N, (Factor(a + b),))
            digon = web_matrix(Web(space, (split(a, b, 1), merge(a, b, 1))))
            expected = _scale_matrix(_identity_matrix(space), qbinom(a + b, a))
            rep.check(
                _matrices_equal(digon, expected),
                f"parallel digon fails at N={N}, a={a}, b={b}",
            )
            # opposite orientation: a bubble of color b on an a-strand
            strand = Boundary(N, (Factor(a),))
            bubble = Web(
                strand,
                (
                    cup(N - b, 2),
                    tag(N - b, 3),
                    tag(b, 2),
                    merge(b, a, 1),
                    split(b, a, 1),
                    cap(b, 2),
                ),
            )
            expected = _scale_matrix(_identity_matrix(strand), qbinom(N - a, b))
            rep.check(
                _matrices_equal(web_matrix(bubble), expected),
                f"opposite digon fails at N={N}, a={a}, b={b}",
            )


def _check_associativity(rep: Report, N: int) -> None:
    for a in range(N + 1):
        for b in range(N + 1 - a):
            for c in range(N + 1 - a - b):
                # merges: (a b) c versus a (b c), strands left to right a, b, c
                space = Boundary(N, (Factor(c), Factor(b), Factor(a)))
                lhs = web_matrix(Web(space, (merge(a, b, 2), merge(a + b, c, 1))))
                rhs = web_matrix(Web(space, (merge(b, c, 1), merge(a, b + c, 1))))
                rep.check(
                    _matrices_equal(lhs, rhs),
                    f"merge associativity fails at N={N}, ({a},{b},{c})",
                )
                whole = Boundary(N, (Factor(a + b + c),))
                lhs = web_matrix(Web(whole, (split(a + b, c, 1), split(a, b, 2))))
                rhs = web_matrix(Web(whole, (split(a, b + c, 1), split(b, c, 1))))
                rep.check(
                    _matrices_equal(lhs, rhs),
                    f"split coassociativity fails at N={N}, ({a},{b},{c})",
                )


def _check_squares(rep: Report, N: int, s_plus_t: int = 3, st_max: int = 2) -> None:
    for a in range(N + 1):
        for b in range(N + 1):
            k0 = (b, a)  # strand a on the left (upright 2), b on the right
            for s in range(0, s_plus_t + 1):
                for t in range(0, s_plus_t + 1 - s):
                    # same-direction rungs compose to a quantum binomial
                    for sign in (+1, -1):
                        two = ladder_matrix(N, k0, [(sign, 1, s), (sign, 1, t)])
                        one = ladder_matrix(N, k0, [(sign, 1, s + t)])
                        if two is None or one is None:
                            continue
                        expected = _scale_matrix(one[1], qbinom(s + t, t))
                        rep.check(
                            _matrices_equal(two[1], expected),
                            f"parallel square fails at N={N}, a={a}, b={b}, s={s}, t={t}, sign={sign}",
                        )
            for s in range(0, st_max + 1):
                for t in range(0, st_max + 1):
                    lhs = ladder_matrix(N, k0, [(+1, 1, s), (-1, 1, t)])
                    if lhs is None:
                        continue
                    total = None
                    for r in range(0, min(s, t) + 1):
                        term = ladder_matrix(N, k0, [(-1, 1, t - r), (+1, 1, s - r)])
                        if term is None:
                            continue
                        scaled = _scale_matrix(term[1], qbinom(a - b + t - s, r))
                        total = scaled if total is None else _add_matrices(total, scaled)
                    if total is None:
                        total = _zero_matrix(
                            weight_boundary(N, k0), weight_boundary(N, lhs[0])
                        )
                    rep.check(
                        _matrices_equal(lhs[1], total),
                        f"opposite square fails at N={N}, a={a}, b={b}, s={s}, t={t}",
                    )


# -- evaluator equivalence ----------------------------------------------


def random_ladder(rng: random.Random, N: int, m: int, rungs: int) -> Web:
    """A random composable ladder on a random bounded weight."""
    while True:
        k = tuple(rng.randint(0, N) for _ in range(m))
        word = []
        cur = list(k)
        ok = True
        for _ in range(rungs):
            for _attempt in range(20):
                sign = rng.choice((+1, -1))
                i = rng.randint(1, m - 1)
                a = rng.randint(1, 2)
                lo = cur[i - 1] - a if sign < 0 else cur[i] - a
                hi = cur[i] + a if sign < 0 else cur[i - 1] + a
                if lo >= 0 and hi <= N:
                    word.append((sign, i, a))
                    if sign < 0:
                        cur[i - 1], cur[i] = lo, hi
                    else:
                        cur[i], cur[i - 1] = lo, hi
                    break
            else:
                ok = False
                break
        if ok:
            return ladder_from_word(N, k, word)


def check_evaluators(cases: int = 100, seed: int = 2024, N_max: int = 3, m_max: int = 6) -> Report:
    rep = Report(f"evaluator equivalence ({cases} random ladders)")
    rng = random.Random(seed)
    for case in range(cases):
        N = rng.randint(2, N_max)
        m = rng.randint(2, m_max)
        web = random_ladder(rng, N, m, rungs=rng.randint(1, 4))
        for idx in basis_indices(web.domain):
            x = TensorVector.basis_vector(web.domain, idx)
            rep.check(
                evaluate_dense(web, x) == evaluate_statesum(web, x),
                f"evaluators disagree on case {case} index {idx}",
            )
    return rep


# -- skew Howe consistency ----------------------------------------------


def check_howe(pairs=((2, 1), (2, 2), (3, 1), (3, 2)), a_max: int = 2) -> Report:
    rep = Report("ladder action matches the tableau action")
    for N, l in pairs:
        shape = Shape(N, l)
        m = shape.m
        for t in enumerate_tableaux(shape):
            k = tableau_type(t)
            x = TableauVector.basis_vector(t)
            for i in range(1, m):
                for sign in (+1, -1):
                    for a in range(1, a_max + 1):
                        by_tabs = act_divided(sign, i, a, x)
                        try:
                            web = ladder_from_word(N, k, [(sign, i, a)])
                        except AnnihilatedError:
                            rep.check(
                                by_tabs.is_zero(),
                                f"annihilated ladder but nonzero action at {t}, "
                                f"sign={sign}, i={i}, a={a}",
                            )
                            continue
                        image = evaluate_dense(web, to_tensor(x))
                        by_web = from_tensor(shape, image)
                        rep.check(
                            by_web == by_tabs,
                            f"routes disagree at {t}, sign={sign}, i={i}, a={a}",
                        )
    return rep


# -- dual canonical properties -------------------------------------------


def check_dual_blocks(pairs=((2, 1), (2, 2), (2, 3), (3, 1), (3, 2))) -> Report:
    rep = Report("dual canonical basis properties")
    for N, l in pairs:
        m = N * l
        for k in bounded_weights(N, m):
            duals = dual_block(N, l, k)  # construction re-checks the invariants
            if not duals:
                continue
            labels = list(duals)
            for s in labels:
                for t in labels:
                    value = pairing(duals[s].expansion, duals[t].expansion)
                    target = value - LaurentPoly.one() if s == t else value
                    rep.check(
                        target.is_zero() or target.valuation() >= 1,
                        f"almost orthogonality fails at N={N}, l={l}, k={k}, ({s},{t}): {value}",
                    )
            for t, elem in duals.items():
                for s, g in elem.beta:
                    rep.check(
                        bar(g) == g,
                        f"correction not bar-invariant at N={N}, l={l}, {t}->{s}: {g}",
                    )
    return rep


def check_form_consistency(pairs=((2, 1), (2, 2), (2, 3), (3, 1), (3, 2))) -> Report:
    """Gram entries by web evaluation versus tensor expansions, per block."""
    rep = Report("web form consistency")
    from .bases import InvariantViolationError, gram_matrix

    for N, l in pairs:
        m = N * l
        for k in bounded_weights(N, m):
            block = lt_block(N, l, k)
            if not block:
                continue
            try:
                gram = gram_matrix(N, l, k, basis="lt")  # compares both routes
                rep.check(True, "")
            except InvariantViolationError as exc:
                rep.check(False, str(exc))
                continue
            labels = gram.labels
            for idx_s, s in enumerate(labels):
                exp = block[s].expansion
                diag = LaurentPoly.zero()
                for c in exp.coords.values():
                    diag = diag + c * c
                rep.check(
                    gram.entry(idx_s, idx_s) == bar(diag),
                    f"diagonal bilinear identity fails at N={N}, l={l}, k={k}, {s}",
                )
                for idx_t, t in enumerate(labels):
                    rep.check(
                        gram.entry(idx_s, idx_t) == gram.entry(idx_t, idx_s),
                        f"Gram symmetry fails at N={N}, l={l}, k={k}, ({s},{t})",
                    )
    return rep


# -- Shapovalov adjointness ----------------------------------------------


def check_shapovalov(cases: int = 50, seed: int = 7, pairs=((2, 1), (2, 2), (3, 1))) -> Report:
    rep = Report(f"adjointness of raising and lowering ({cases} pairs)")
    rng = random.Random(seed)
    pool = []
    for N, l in pairs:
        m = N * l
        for k in bounded_weights(N, m):
            for i in range(1, m):
                up = list(k)
                up[i - 1] += 1
                up[i] -= 1
                if not (0 <= up[i - 1] <= N and 0 <= up[i] <= N):
                    continue
                w_block = lt_block(N, l, k)
                u_block = lt_block(N, l, tuple(up))
                if w_block and u_block:
                    pool.append((N, l, tuple(k), tuple(up), i))
    done = 0
    while done < cases:
        N, l, k, up, i = rng.choice(pool)
        w_block = lt_block(N, l, k)
        u_block = lt_block(N, l, up)
        u = u_block[rng.choice(list(u_block))].expansion
        w = w_block[rng.choice(list(w_block))].expansion
        lam = weight_of_type(k)
        lhs = pairing(act_E(-1, i, u), w)
        rhs = pairing(u, act_E(+1, i, w)).shift(1 + lam[i - 1])
        rep.check(
            lhs == rhs,
            f"adjointness fails at N={N}, l={l}, k={k}, i={i}: {lhs} vs {rhs}",
        )
        done += 1
    return rep


# -- highest weight and commutator ----------------------------------------


def check_commutator(cases: int = 50, seed: int = 11, pairs=((2, 1), (2, 2), (3, 1), (3, 2))) -> Report:
    rep = Report("highest weight annihilation and commutator")
    for N, l in pairs:
        shape = Shape(N, l)
        top = highest_vector(shape)
        for i in range(1, shape.m):
            rep.check(
                act_E(+1, i, top).is_zero(),
                f"raising does not kill the highest vector at N={N}, l={l}, i={i}",
            )
    rng = random.Random(seed)
    done = 0
    while done < cases:
        N, l = rng.choice(pairs)
        shape = Shape(N, l)
        k = rng.choice(bounded_weights(N, shape.m))
        tableaux = enumerate_tableaux(shape, k)
        if not tableaux:
            continue
        x = TableauVector(shape)
        for t in rng.sample(tableaux, min(len(tableaux), 3)):
            x.add_term(t, LaurentPoly({rng.randint(-2, 2): rng.randint(1, 3)}))
        if x.is_zero():
            continue
        i = rng.randint(1, shape.m - 1)
        lam = weight_of_type(k)
        commutator = act_E(+1, i, act_E(-1, i, x)) - act_E(-1, i, act_E(+1, i, x))
        rep.check(
            commutator == x.scale(qnum(lam[i - 1])),
            f"commutator is not [{lam[i-1]}] at N={N}, l={l}, k={k}, i={i}",
        )
        done += 1
    return rep


def check_serre(pairs=((2, 2), (3, 1))) -> Report:
    """Degree-2 relation with middle coefficient +(v + v^-1), found empirically."""
    rep = Report("degree-2 relation spot checks")
    two = LaurentPoly({1: 1, -1: 1})
    for N, l in pairs:
        shape = Shape(N, l)
        for sign in (+1, -1):
            for i, j in ((1, 2), (2, 1)):
                if max(i, j) > shape.m - 1:
                    continue
                for t in enumerate_tableaux(shape):
                    x = TableauVector.basis_vector(t)

                    def e(idx, vec, s=sign):
                        return act_E(s, idx, vec)

                    lhs = e(i, e(i, e(j, x))) + e(j, e(i, e(i, x)))
                    mid = e(i, e(j, e(i, x))).scale(two)
                    rep.check(
                        lhs == mid,
                        f"degree-2 relation fails at N={N}, l={l}, sign={sign}, i={i}, j={j}, {t}",
                    )
    return rep


# -- algebra diagnostics ---------------------------------------------------


def check_cartan(N_max: int = 3, m_max: int = 6) -> Report:
    rep = Report("graded Cartan data")
    shapes = [
        (N, m // N)
        for N in range(2, N_max + 1)
        for m in range(N, m_max + 1)
        if m % N == 0
    ]
    for N, l in shapes:
        m = N * l
        for k in bounded_weights(N, m):
            block = lt_block(N, l, k)
            if not block:
                continue
            cartan = cartan_matrix(N, k)
            g = gorenstein_parameter(N, k)
            rep.check(
                g == 2 * d_norm(N, l, k),
                f"Gorenstein parameter mismatch at N={N}, k={k}",
            )
            n = len(cartan.labels)
            for i in range(n):
                for j in range(n):
                    c = cartan.entry(i, j)
                    rep.check(
                        c.nonnegative_coeffs() or c.is_zero(),
                        f"negative Cartan coefficient at N={N}, k={k}, ({i},{j}): {c}",
                    )
                    rep.check(
                        c == cartan.entry(j, i),
                        f"Cartan symmetry fails at N={N}, k={k}, ({i},{j})",
                    )
                    rep.check(
                        bar(c) == cartan.entry(j, i).shift(-g),
                        f"graded duality fails at N={N}, k={k}, ({i},{j}): {c}",
                    )
            frob = frobenius_check(N, k)
            rep.check(frob.passed, f"Frobenius check fails at N={N}, k={k}")
    return rep


def run_all(seed: int = 2024) -> list[Report]:
    return [
        check_relations(),
        check_evaluators(seed=seed),
        check_howe(),
        check_dual_blocks(),
        check_form_consistency(),
        check_shapovalov(seed=seed),
        check_commutator(seed=seed),
        check_serre(),
        check_cartan(),
    ]
