import math

import pytest

import riccati3d as r3


def test_basis_products():
    e1, e2, e3 = (r3.Biquaternion.basis(k) for k in (1, 2, 3))
    assert (e1 * e2).coefficients() == [0, 0, 0, 1]
    assert (e2 * e1).coefficients() == [0, 0, 0, -1]
    assert (e1 * e1).coefficients() == [-1, 0, 0, 0]
    q = r3.Biquaternion(1, 2j, 0, 3)
    prod = q * q.inverse()
    assert abs(prod[0] - 1) < 1e-14
    assert max(abs(prod[k]) for k in (1, 2, 3)) < 1e-14


def test_zero_divisor():
    with pytest.raises(r3.ZeroDivisor):
        r3.Biquaternion(1, 1j, 0, 0).inverse()


def test_verify_algebra():
    report = r3.verify("algebra", seconds=False, **{"tol.algebra": 1e-12})
    assert report["overall_pass"]
    assert report["config_echo"]["suite"] == "algebra"
    assert all("seconds" not in c for c in report["checks"])


def test_verify_bad_config():
    with pytest.raises(r3.ConfigError):
        r3.verify("algebra", order=3)
    with pytest.raises(r3.ConfigError):
        r3.verify("nothing")


def test_rotational_spot_value():
    Q = r3.solution_Q("rotational", [2.0, 0.0, 5.0], {"k": 1.0, "c": 0.0})
    assert abs(Q[0] + 5.0 / 6.0) < 1e-12
    assert r3.riccati_residual("rotational", [2.0, 0.3, 0.1]) < 1e-6
    with pytest.raises(r3.DomainError):
        r3.solution_Q("rotational", [1.0, 0.0, 0.0])


def test_evaluate_grid():
    rows = r3.evaluate("rotational", "1.5,3,3,1.5,3,3,0,1,2", fields=("Q", "residuals"), k=1, c=0)
    assert len(rows) == 18
    assert all(abs(r["Re_resid_sc"]) < 1e-6 for r in rows if not r["masked"])
    with pytest.raises(r3.DomainError):
        r3.evaluate("rotational", "1.5,9,3,0,1,2,0,1,2")


def test_group_actions():
    x, Q = r3.group_act(7, math.log(2.0), [0.3, -0.2, 0.9], [1.0, -2.0, 0.5])
    assert x == pytest.approx([0.6, -0.4, 1.8])
    assert Q == pytest.approx([0.5, -1.0, 0.25])
    with pytest.raises(r3.PoleError):
        r3.group_act(8, 0.5, [2.0, 0.0, 0.0], [0.0, 0.0, 0.0])
    assert r3.vhat([0] * 8 + [1, 0], [0.3, -1, 2], [1, 2, 3]) == [1, 0, 0, 0, 0, 0]
