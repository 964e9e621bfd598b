import pytest

from qwebs.bases import (
    check_negative_exponent,
    dual_block,
    dual_canonical,
    gram_matrix,
    lt_block,
    lt_vector,
    lt_web,
    pairing,
)
from qwebs.howe import TableauVector
from qwebs.ring import LaurentPoly, bar
from qwebs.tableaux import (
    NotSemistandardError,
    Shape,
    Tableau,
    enumerate_tableaux,
    highest_tableau,
)
from qwebs.tensor import Boundary, Factor, TensorVector, apply_merge, apply_split, apply_tag, ell, tensor_product
from qwebs.webs import d_norm, validate

fs = frozenset
one = LaurentPoly.one()


def mono(e):
    return LaurentPoly.monomial(e)


def test_lt_vector_highest():
    top = highest_tableau(Shape(2, 2))
    elem = lt_vector(top)
    assert elem.word == ()
    assert elem.expansion.coords == {top: one}


def test_lt_vector_two_strands():
    s21 = Shape(2, 1)
    t = Tableau(s21, ((1, 2),))
    elem = lt_vector(t)
    assert elem.word == ((1, 1),)
    assert elem.expansion.coords == {
        t: one,
        Tableau(s21, ((2, 1),)): mono(-1),
    }


def test_lt_vector_three_strands():
    s31 = Shape(3, 1)
    t = Tableau(s31, ((1, 2, 3),))
    elem = lt_vector(t)
    assert elem.word == ((1, 1), (2, 1), (1, 1))
    assert elem.expansion.coeff(t).is_one()
    # all six column-strict rearrangements appear with nonnegative coefficients
    assert len(elem.expansion.coords) == 6
    for tau, c in elem.expansion.coords.items():
        assert c.nonnegative_coeffs()
        if tau != t:
            assert tau.sort_key() > t.sort_key()


def test_lt_vector_rejects_non_semistandard():
    with pytest.raises(NotSemistandardError):
        lt_vector(Tableau(Shape(2, 1), ((2, 1),)))


def test_check_negative_exponent():
    s21 = Shape(2, 1)
    t = Tableau(s21, ((1, 2),))
    assert check_negative_exponent(TableauVector.basis_vector(t), t).passed
    bad = TableauVector.basis_vector(t)
    bad.add_term(Tableau(s21, ((2, 1),)), mono(1))
    rep = check_negative_exponent(bad, t)
    assert not rep.passed
    assert len(rep.violations) == 1


def test_dual_canonical_small_elements():
    # two strands of color one
    s21 = Shape(2, 1)
    t = Tableau(s21, ((1, 2),))
    d = dual_canonical(t)
    assert d.beta == ()
    assert d.expansion.coords == {t: one, Tableau(s21, ((2, 1),)): mono(-1)}
    # one strand of color one and one of color two
    s31 = Shape(3, 1)
    t2 = Tableau(s31, ((1, 1, 2),))
    d2 = dual_canonical(t2)
    assert d2.beta == ()
    assert {tt.rows[0]: c for tt, c in d2.expansion.coords.items()} == {
        (1, 1, 2): one,
        (1, 2, 1): mono(-1),
        (2, 1, 1): mono(-2),
    }
    # trivial at the top
    top = highest_tableau(s21)
    dt = dual_canonical(top)
    assert dt.expansion.coords == {top: one} and dt.beta == ()


def test_dual_canonical_nontrivial_correction():
    # a block where the intermediate basis is not yet dual canonical
    shape = Shape(3, 2)
    k = (0, 0, 1, 2, 1, 2)
    blk = dual_block(3, 2, k)
    corrected = [t for t, e in blk.items() if e.beta]
    assert corrected, "expected a nontrivial correction in this block"
    for t, elem in blk.items():
        rep = check_negative_exponent(elem.expansion, t)
        assert rep.passed
        for s, g in elem.beta:
            assert bar(g) == g
            assert s.sort_key() > t.sort_key()
        # the recorded identity b = A^T + sum beta A^S holds
        lt = lt_block(3, 2, k)
        recon = lt[t].expansion
        for s, g in elem.beta:
            recon = recon + lt[s].expansion.scale(g)
        assert recon == elem.expansion


def test_dual_canonical_deterministic():
    shape = Shape(3, 2)
    k = (0, 0, 1, 2, 1, 2)
    t = [t for t in enumerate_tableaux(shape, k, semistandard_only=True)][-1]
    a = dual_canonical(t)
    b = dual_canonical(t)
    assert a.expansion == b.expansion and a.beta == b.beta


def test_almost_orthogonality_block():
    duals = dual_block(2, 2, (1, 1, 1, 1))
    labels = list(duals)
    for s in labels:
        for t in labels:
            val = pairing(duals[s].expansion, duals[t].expansion)
            target = val - one if s == t else val
            assert target.is_zero() or target.valuation() >= 1


def test_gram_matrix_examples():
    g = gram_matrix(2, 1, (2, 0))
    assert len(g.labels) == 1 and g.entry(0, 0).is_one()
    g = gram_matrix(2, 1, (1, 1))
    assert g.entry(0, 0) == LaurentPoly({2: 1, 0: 1})
    g = gram_matrix(2, 2, (1, 1, 1, 1))
    d = d_norm(2, 2, (1, 1, 1, 1))
    for i in range(2):
        for j in range(2):
            assert g.entry(i, j) == g.entry(j, i)
            assert bar(g.entry(i, j)) == g.entry(j, i).shift(-2 * d)
            assert g.entry(i, j).is_zero() or g.entry(i, j).nonnegative_coeffs()


def test_gram_dual_vs_transition():
    # conjugating the LT Gram by the correction matrix gives the dual Gram
    N, l, k = 3, 2, (0, 0, 1, 2, 1, 2)
    lt = lt_block(N, l, k)
    duals = dual_block(N, l, k)
    labels = list(lt)
    glt = gram_matrix(N, l, k, basis="lt")
    gd = gram_matrix(N, l, k, basis="dual")
    coef = {
        (t, s): g for t, e in duals.items() for s, g in e.beta
    }
    for t in labels:
        coef[(t, t)] = one
    for i, s in enumerate(labels):
        for j, t in enumerate(labels):
            total = LaurentPoly.zero()
            for a, sa in enumerate(labels):
                ca = coef.get((s, sa))
                if ca is None:
                    continue
                for b, tb in enumerate(labels):
                    cb = coef.get((t, tb))
                    if cb is None:
                        continue
                    total = total + bar(ca) * cb * glt.entry(a, b)
            assert total == gd.entry(i, j)


def test_lt_web_matches_expansion():
    # the ladder web of a basis vector has the vector as its image
    from qwebs.howe import to_tensor
    from qwebs.webs import evaluate_dense, highest_weight_vector

    for N, l, rows in ((2, 1, ((1, 2),)), (3, 1, ((1, 2, 3),)), (2, 2, ((1, 2), (3, 4)))):
        t = Tableau(Shape(N, l), rows)
        web = lt_web(t)
        validate(web)
        image = evaluate_dense(web, highest_weight_vector(N, l))
        assert image == to_tensor(lt_vector(t).expansion)


# -- known dual canonical families across duality tags ------------------


def full_split(N, a, b):
    space = Boundary(N, (Factor(N),))
    top = TensorVector.basis_vector(space, (fs(range(1, N + 1)),))
    return apply_split(top, a, b, 1)


def transported(vec):
    """Dual coordinates rewritten in the duality-transported basis."""
    N = vec.space.N
    full = fs(range(1, N + 1))
    out = {}
    for idx, c in vec.coords.items():
        key, coeff = [], c
        for s, f in zip(idx, vec.space.factors):
            if f.dual:
                key.append(full - s)
                coeff = coeff.shift(-ell(s, full - s))
            else:
                key.append(s)
        out[tuple(key)] = out.get(tuple(key), LaurentPoly.zero()) + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def assert_top_and_negexp(vec, top):
    tr = transported(vec)
    assert tr.get(top) == one, tr.get(top)
    for key, c in tr.items():
        if key != top:
            assert c.only_negative_exponents(), (key, str(c))


def rng(hi, lo):
    return fs(range(lo, hi + 1))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_two_factor_invariants_are_dual_canonical(N):
    for a in range(1, N + 1):
        b = N - a
        assert_top_and_negexp(full_split(N, a, b), (rng(b, 1), rng(N, b + 1)))
        # tagged on the left factor
        assert_top_and_negexp(
            apply_tag(full_split(N, b, a), 2), (rng(a, 1), rng(N, a + 1))
        )
        # tagged on the right factor
        assert_top_and_negexp(
            apply_tag(full_split(N, a, b), 1), (rng(b, 1), rng(N, b + 1))
        )


@pytest.mark.parametrize("N", [3, 4])
def test_three_factor_plain_invariants(N):
    for a in range(1, N - 1):
        for b in range(1, N - a):
            c = N - a - b
            if c < 1:
                continue
            vec = apply_split(full_split(N, a + b, c), a, b, 2)
            assert_top_and_negexp(vec, (rng(c, 1), rng(b + c, c + 1), rng(N, b + c + 1)))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_three_factor_dual_invariants(N):
    for a in range(1, N + 1):
        for c in range(1, N + 1 - a):
            b = N - a - c
            left = apply_tag(full_split(N, N - a, a), 2)
            right = apply_tag(full_split(N, c, N - c), 1)
            vec = tensor_product(left, right)
            vec = apply_merge(vec, a, c, 2)
            vec = apply_tag(vec, 2)
            middle = fs(range(N, a + b, -1)) | fs(range(a, 0, -1))
            assert_top_and_negexp(vec, (rng(a + b, 1), middle, rng(N, a + 1)))
