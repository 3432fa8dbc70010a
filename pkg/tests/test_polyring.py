import itertools

import pytest

from qdemazure.laurent import ONE, ZERO, z_pow
from qdemazure.polyring import (
    TriPoly,
    X1,
    X2,
    X3,
    demazure,
    drop_x123_multiples,
    normalize_index,
    s_action,
    sigma,
    tau,
    x_var,
)


def monomials(max_deg):
    for d in range(max_deg + 1):
        for e1 in range(d + 1):
            for e2 in range(d - e1 + 1):
                yield TriPoly.monomial((e1, e2, d - e1 - e2))


def test_normalize_index():
    assert [normalize_index(i) for i in (0, 4, -1, -2, 7)] == [3, 1, 2, 1, 1]


def test_x_var_rejects_bad_index():
    with pytest.raises(ValueError):
        x_var(0)
    with pytest.raises(ValueError):
        x_var(4)


def test_s_action_examples():
    assert s_action(1, X1) == X2 * z_pow(1)
    assert s_action(1, X2) == X1 * z_pow(-1)
    assert s_action(1, X3) == X3
    # s_i on x_i^k x_{i+1}^{d-k} picks up z^{2k-d}; here (k, d) = (3, 4)
    f = TriPoly.monomial((3, 1, 0))
    assert s_action(1, f) == TriPoly.monomial((1, 3, 0), z_pow(2))
    assert s_action(3, X3) == X1 * z_pow(1)
    assert s_action(3, X1) == X3 * z_pow(-1)
    with pytest.raises(ValueError):
        s_action(0, X1)


def test_s_action_is_involution():
    for f in monomials(4):
        for i in (1, 2, 3):
            assert s_action(i, s_action(i, f)) == f


def test_demazure_examples():
    assert demazure(1, X1) == TriPoly.one()
    assert demazure(1, X2) == TriPoly.monomial((0, 0, 0), -z_pow(-1))
    assert demazure(1, X3) == TriPoly.zero()
    cube = TriPoly.monomial((3, 0, 0))
    want = (
        TriPoly.monomial((2, 0, 0))
        + TriPoly.monomial((1, 1, 0), z_pow(1))
        + TriPoly.monomial((0, 2, 0), z_pow(2))
    )
    assert demazure(1, cube) == want
    with pytest.raises(ValueError):
        demazure(5, X1)


def test_demazure_drops_degree_by_one():
    for f in monomials(5):
        deg = sum(next(iter(f.terms())))
        for i in (1, 2, 3):
            g = demazure(i, f)
            if not g.is_zero():
                assert all(sum(e) == deg - 1 for e in g.terms())


def test_demazure_kills_invariants():
    for i in (1, 2, 3):
        f = x_var(i) * x_var(normalize_index(i + 1)) * z_pow(-1)
        # x_i x_{i+1} z^{-1} is s_i-invariant
        assert s_action(i, f) == f
        assert demazure(i, f).is_zero()


def test_sigma_tau_examples():
    assert sigma(X3) == X1
    assert sigma(X1) == X2
    assert tau(X2 * z_pow(1)) == X2 * z_pow(-1)
    assert tau(X1 * X1 * X3) == X3 * X3 * X1
    for f in monomials(4):
        assert sigma(sigma(sigma(f))) == f
        assert tau(tau(f)) == f


def test_quadratic_braid_leibniz_small():
    z1 = z_pow(1)
    monos = list(monomials(4))
    for f in monos:
        for i in (1, 2, 3):
            j = normalize_index(i + 1)
            assert demazure(i, demazure(i, f)).is_zero()
            assert demazure(i, demazure(j, demazure(i, f))) * z1 == demazure(
                j, demazure(i, demazure(j, f))
            )
            assert demazure(i, f) == -demazure(i, s_action(i, f))
            assert sigma(demazure(i, f)) == demazure(j, sigma(f))
            assert tau(demazure(i, f)) == demazure(normalize_index(-i), tau(f)) * (-z1)
    small = list(monomials(2))
    for f, g in itertools.product(small, small):
        for i in (1, 2, 3):
            assert demazure(i, f * g) == demazure(i, f) * g + s_action(i, f) * demazure(i, g)


def test_drop_x123_multiples():
    f = X1 * X2 * X3 + X1 * X1
    assert drop_x123_multiples(f) == X1 * X1
    assert drop_x123_multiples(TriPoly.zero()).is_zero()


def test_scalar_predicates():
    assert TriPoly.one().is_scalar()
    assert TriPoly.zero().is_scalar()
    assert not X1.is_scalar()
    assert TriPoly.one().constant_coefficient() == ONE
    assert X1.constant_coefficient() == ZERO


def test_rejects_negative_exponents():
    with pytest.raises(ValueError):
        TriPoly.monomial((-1, 0, 0))


def test_render_and_json():
    f = X1 * X1 * X2 * (ONE + z_pow(3))
    assert f.render() == "x1^2*x2 * (1 + z^3)"
    assert TriPoly.zero().render() == "0"
    assert TriPoly.one().render() == "1"
    assert X2.render() == "x2"
    assert f.to_json() == [{"exponents": [2, 1, 0], "coeff": {"0": "1", "6": "1"}}]
