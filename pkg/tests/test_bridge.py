import pytest

from permtri.bridge import (
    binomial_setup,
    bridge_grid,
    bridge_row,
    cpp_monomial_check,
    dickson_claim_all_a,
    dickson_preimage_claim_check,
    dickson_report,
    lift_quadratic,
    nr_binomial_is_pp,
    z_set,
)
from permtri.gf import CapExceededError, extension, make_field
from permtri.permcheck import is_cpp, is_pp
from permtri.poly import Poly, TrinomialParams, build_f


def test_lift_examples():
    F3 = make_field(3)
    lift = lift_quadratic(F3, 1, 2)
    assert lift.mu == 2 and lift.irreducible and lift.b is not None
    assert not lift_quadratic(F3, 1, 1).irreducible
    assert lift_quadratic(F3, 1, 1).mu == 1
    assert not lift_quadratic(make_field(5), 1, 0).irreducible
    with pytest.raises(ValueError, match="characteristic 2 unsupported in bridge"):
        lift_quadratic(make_field(2, 3), 1, 1)


@pytest.mark.parametrize("pt", [(3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (3, 3), (5, 2)])
@pytest.mark.parametrize("s", [1, 2])
def test_conjugacy_and_factorized_form(pt, s):
    F = make_field(*pt)
    for lam in range(F.q):
        lift = lift_quadratic(F, s, lam)
        assert F.pow(lift.mu, F.p ** s) == lam
        f = build_f(TrinomialParams(F, s, 1, lam))
        for x in range(F.q):
            inner = F.add(F.add(F.mul(x, x), x), lift.mu)
            assert f.eval(x) == F.mul(x, F.pow(inner, F.p ** s))
        if not lift.irreducible:
            continue
        E, b, bq = lift.quad, lift.b, lift.conjugate
        assert b >= F.q and bq != b
        assert E.add(b, bq) == E.neg(1)
        assert E.mul(b, bq) == lift.mu
        assert E.add(E.add(E.mul(b, b), b), lift.mu) == 0


def test_nr_example_729():
    lift = lift_quadratic(make_field(3), 1, 2)
    setup = binomial_setup(lift)
    assert setup.big.q == 729 and setup.exponent == 365
    big = setup.big
    assert big.add(big.add(big.mul(setup.b, setup.b), setup.b), 2) == 0
    assert nr_binomial_is_pp(lift) == (False, False)
    assert cpp_monomial_check(lift) == (False, False)


def test_reducible_lift_rejected():
    lift = lift_quadratic(make_field(3), 1, 1)
    with pytest.raises(ValueError):
        nr_binomial_is_pp(lift)
    with pytest.raises(ValueError):
        cpp_monomial_check(lift)


def test_cap(monkeypatch):
    monkeypatch.setenv("PERMTRI_CAP", "700")
    with pytest.raises(CapExceededError):
        nr_binomial_is_pp(lift_quadratic(make_field(3), 1, 2))


def test_grid_is_computed_from_cap():
    assert bridge_grid() == [(3, 1, 1), (3, 2, 1), (5, 1, 1)]
    assert bridge_grid(cap=729) == [(3, 1, 1)]
    assert (7, 1, 1) in bridge_grid(cap=7 ** 14)


def test_either_root_gives_same_verdict():
    lift = lift_quadratic(make_field(3), 1, 2)
    setup = binomial_setup(lift)
    big = setup.big
    other = big.sub(big.neg(1), setup.b)
    assert big.add(big.add(big.mul(other, other), other), 2) == 0
    verdicts = set()
    for b in (setup.b, other):
        binomial = is_pp(Poly(big, {setup.exponent: 1, 1: b}))
        assert binomial == is_cpp(Poly(big, {setup.exponent: big.inv(b)}))
        verdicts.add(binomial)
    assert len(verdicts) == 1


def test_bridge_rows_all_lambda_729():
    rows = [bridge_row(3, 1, 1, lam) for lam in range(3)]
    assert [r.irreducible for r in rows] == [False, False, True]
    assert rows[2].agree and rows[2].to_row()["lhs"] is False


def test_z_set():
    assert z_set(5) == {1, 5, 3}
    assert z_set(6) == {1, 6, 3}
    assert z_set(3) == {1, 3, 2}


def test_dickson_examples():
    F9 = make_field(3, 2)
    rep = dickson_report(F9, 5, 1)
    assert rep.z_claim and rep.histogram.nonzero_counts <= {1, 3, 5} and not rep.pp
    # 49 = -1 mod 5, so 5 | Q + 1: the value-set claim applies and D_5 is not a PP
    rep = dickson_report(make_field(7, 2), 5, 1)
    assert not rep.pp and not rep.pp_expected and rep.z_claim
    assert rep.histogram.counts == {0: 20, 1: 23, 3: 2, 5: 4}
    for pt in [(7, 1), (2, 3), (2, 7)]:
        rep = dickson_report(make_field(*pt), 5, 1)
        assert rep.pp and rep.pp_expected and rep.holds
    for q, pt in [(7, (7, 1)), (8, (2, 3)), (25, (5, 2))]:
        F = make_field(*pt)
        for a in range(1, F.q):
            rep = dickson_report(F, 1, a)
            assert rep.pp and rep.histogram.counts == {1: q}
    assert dickson_preimage_claim_check(F9, 5, 1)
    with pytest.raises(ValueError):
        dickson_report(F9, 3, 1)
    with pytest.raises(ValueError):
        dickson_report(F9, 5, 0)


@pytest.mark.parametrize("pt,n", [((3, 2), 5), ((2, 4), 3), ((2, 5), 3), ((7, 2), 5), ((13, 1), 7), ((5, 3), 3)])
def test_square_class_shortcut_matches_brute_force(pt, n):
    F = make_field(*pt)
    brute = all(dickson_report(F, n, a).holds for a in range(1, F.q))
    assert dickson_claim_all_a(F, n) == brute


def test_tower_field_used_for_degree_six():
    F9 = make_field(3, 2)
    lift = next(lift_quadratic(F9, 1, lam) for lam in range(9) if lift_quadratic(F9, 1, lam).irreducible)
    setup = binomial_setup(lift)
    assert setup.big == extension(F9, 6) and setup.big.q == 531441
