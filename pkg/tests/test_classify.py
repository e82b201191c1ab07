import numpy as np
import pytest

from permtri.classify import (
    Split,
    cubic_diff_quotient_analysis,
    frobenius_identity_holds,
    minus3_square_iff,
    normalize,
    predicted_lambdas,
    r0_symmetry_check,
    reduced_degree,
    scan_lambda,
    theorem_applicable,
    theorem_predict,
    verdict,
)
from permtri.gf import is_prime, make_field, prime_powers
from permtri.poly import BiPoly, Poly, TrinomialParams, build_f, difference_quotient


def divisibility_degree(p, s, r):
    # reference: largest m with p^m dividing all three exponents, by brute force
    exps = (2 * p ** s + r, p ** s + r, r)
    m = max(n for n in range(0, 40) if all(e % p ** n == 0 for e in exps))
    return (0 if r == 0 else exps[0] // p ** m), m


def test_reduced_degree_examples():
    assert reduced_degree(2, 1, 1) == (5, 0)
    assert reduced_degree(7, 2, 0)[0] == 0
    assert reduced_degree(2, 2, 2) == (5, 1)
    assert reduced_degree(3, 0, 9) == (11, 0)


def test_reduced_degree_matches_definition():
    for p in [n for n in range(2, 14) if is_prime(n)]:
        for s in range(4):
            for r in range(13):
                assert reduced_degree(p, s, r) == divisibility_degree(p, s, r)


def test_normalize_examples():
    F = make_field(2, 11)
    n = normalize(TrinomialParams(F, 2, 2, 1))
    assert (n.s, n.r, n.lam, n.m, n.d) == (1, 1, 1, 1, 5)
    assert frobenius_identity_holds(TrinomialParams(F, 2, 2, 1))
    F5 = make_field(5)
    for lam in range(5):
        n = normalize(TrinomialParams(F5, 0, 1, lam))
        assert (n.s, n.r, n.lam, n.m) == (0, 1, lam, 0)
    n = normalize(TrinomialParams(make_field(3), 0, 9, 2))
    assert (n.s, n.r, n.m, n.d) == (0, 9, 0, 11)


def test_normalize_is_idempotent_and_roots_lambda():
    for p, t in [(2, 5), (3, 3), (5, 2)]:
        F = make_field(p, t)
        for s in range(4):
            for r in range(1, 13):
                for lam in (0, 1, F.q - 1):
                    n = normalize(TrinomialParams(F, s, r, lam))
                    assert F.pow(n.lam, p ** n.m) == lam
                    again = normalize(TrinomialParams(F, n.s, n.r, n.lam))
                    assert again.m == 0 and (again.s, again.r) == (n.s, n.r)
                    assert n.s == 0 or n.r % p != 0


def test_applicable_examples():
    assert theorem_applicable(TrinomialParams(make_field(2, 7), 0, 1, 1))
    assert not theorem_applicable(TrinomialParams(make_field(2, 6), 0, 1, 1))
    assert theorem_applicable(TrinomialParams(make_field(3), 1, 0, 1))


def test_predict_examples():
    assert theorem_predict(TrinomialParams(make_field(2, 11), 1, 1, 1))
    F = make_field(5, 3)
    assert theorem_predict(TrinomialParams(F, 0, 1, F.inv(F.integer(3))))
    assert not theorem_predict(TrinomialParams(make_field(2, 12), 1, 1, 1))
    with pytest.raises(ValueError):
        theorem_predict(TrinomialParams(make_field(2, 5), 0, 1, 1))


def test_normalized_reading_covers_unlisted_form():
    # x^10 + x^6 + x^2 = (x^5 + x^3 + x)^2 permutes F_{2^11}
    F = make_field(2, 11)
    v = verdict(TrinomialParams(F, 2, 2, 1))
    assert v.is_pp and v.predicted and v.agrees and v.d == 5
    assert predicted_lambdas(F, 2, 2) == {1}


def test_scan_lambda_examples():
    rows = scan_lambda(make_field(2, 7), 0, 1)
    assert len(rows) == 128 and [v.params.lam for v in rows] == list(range(128))
    assert [v.params.lam for v in rows if v.is_pp] == [1]
    assert all(v.agrees for v in rows)
    rows = scan_lambda(make_field(3, 6), 0, 2)
    assert not any(v.is_pp for v in rows) and rows[0].d == 4 and all(v.agrees for v in rows)
    rows = scan_lambda(make_field(2), 0, 0)
    assert not any(v.is_pp for v in rows)


def test_verdict_row_shape():
    row = verdict(TrinomialParams(make_field(5), 0, 1, 2)).to_row()
    assert row == {"p": 5, "t": 1, "s": 0, "r": 1, "lambdaIndex": 2, "d": 3, "applicable": False,
                   "isPp": True, "predicted": None, "agrees": None}


def test_r0_symmetry_examples():
    F3 = make_field(3)
    for lam in range(3):
        assert r0_symmetry_check(TrinomialParams(F3, 1, 0, lam))
    assert r0_symmetry_check(TrinomialParams(make_field(2), 1, 0, 1))
    assert r0_symmetry_check(TrinomialParams(make_field(5), 0, 0, 0))
    with pytest.raises(ValueError):
        r0_symmetry_check(TrinomialParams(F3, 0, 1, 1))


def test_r0_never_permutes_q_1024():
    for p, t, q in prime_powers(1024):
        F = make_field(p, t)
        for s in range(4):
            assert not any(v.is_pp for v in scan_lambda(F, s, 0))


def test_cubic_examples():
    res = cubic_diff_quotient_analysis(make_field(7), 5)
    assert res.kind == Split.BASE and res.sqrt_minus3 == 2
    assert cubic_diff_quotient_analysis(make_field(5), 2).kind == Split.QUADRATIC
    assert cubic_diff_quotient_analysis(make_field(7), 1).kind == Split.NONE
    F3 = make_field(3, 2)
    assert all(cubic_diff_quotient_analysis(F3, lam).kind == Split.NONE for lam in range(9))
    with pytest.raises(ValueError):
        cubic_diff_quotient_analysis(make_field(2, 3), 1)


def test_cubic_factors_multiply_back():
    for p, t in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 3), (7, 2)]:
        F = make_field(p, t)
        res = cubic_diff_quotient_analysis(F, F.inv(F.integer(3)))
        E = res.field
        f1, f2 = res.factors
        target = difference_quotient(Poly(E, {3: 1, 2: 1, 1: F.inv(F.integer(3))}))
        assert f1 * f2 == target
        assert isinstance(f1, BiPoly) and f1.total_degree == 1


def test_minus3_examples():
    assert minus3_square_iff(5, 1) == (True, True)
    assert minus3_square_iff(7, 1) == (False, False)
    assert minus3_square_iff(5, 2) == (False, False)
    with pytest.raises(ValueError):
        minus3_square_iff(3, 1)


def test_minus3_equivalence():
    for p in [n for n in range(5, 98) if is_prime(n)]:
        for t in range(1, 5):
            if p ** t > 1 << 24:
                continue
            lhs, rhs = minus3_square_iff(p, t)
            assert lhs == rhs, (p, t)


def test_family_sweeps_agree_with_prediction_small_grid():
    for p, t, q in prime_powers(1024, lower=82):
        F = make_field(p, t)
        for s in range(3):
            for r in range(4):
                for v in scan_lambda(F, s, r):
                    if v.applicable:
                        assert v.agrees, v


def test_verdict_with_explicit_flag():
    F = make_field(2, 7)
    v = verdict(TrinomialParams(F, 0, 1, 1), pp=False)
    assert v.predicted and v.agrees is False
    assert np.isscalar(v.d)
    assert build_f(v.params).degree == 3
