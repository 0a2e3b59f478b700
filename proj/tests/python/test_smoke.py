from fractions import Fraction

import pytest

import x49


def test_kronecker_and_discriminants():
    assert x49.kronecker(28, 3) == 1
    assert x49.kronecker(28, 5) == -1
    assert x49.fundamental_discriminant(3) == 12


def test_theta_of_a_diagonal_form():
    r = x49.theta_series((98, 0, 0, 98, 0, 14), 30)
    assert [n for n, c in enumerate(r) if c] == [0, 7, 28]
    assert x49.level_and_character((98, 0, 0, 98, 0, 14))["level"] == 196


def test_invalid_gram_raises():
    with pytest.raises(ValueError):
        x49.theta_series((3, 0, 0, 2, 0, 2), 5)


def test_sturm_bound():
    assert x49.sturm_bound(3, 2, 196, "half_integral") == 42


def test_fixture_and_extension():
    g1 = x49.fixture("g1")
    assert len(g1) == 43
    assert g1[1] == 1 and g1[8] == -2
    f1 = x49.extend_fixture("f1", 100)
    assert f1[:43] == x49.fixture("f1")


def test_shimura_lift_of_g1():
    sh = x49.shimura_lift("g1", 1, 29)
    assert sh == x49.fixture("Sh1_g1")
    F = x49.coefficients(29)
    old = x49.fixture("F_old")
    assert all(sh[n] == Fraction(F[n] + old[n], 2) for n in range(1, 30))


def test_newform():
    assert [x49.ap(p) for p in (2, 3, 7, 11)] == [1, 0, 0, 4]


def test_l_values():
    assert abs(x49.l_value(1)["value"] - 0.9666558528) < 1e-4
    assert x49.l_value(-3)["declared_zero"]
    assert abs(x49.l_value(15, 1e-5)["value"] - 1.9967) < 5e-3


def test_predict():
    r = x49.predict(29)
    assert r["case"] == "i" and r["counts"] == (8, 0) and not r["positive_rank_predicted"]
    assert x49.predict(-3)["positive_rank_predicted"]
    assert x49.predict(11)["positive_rank_predicted"]
    assert x49.companion(17)["d2"] == 17
    with pytest.raises(ValueError):
        x49.predict(0)


def test_search_and_cli():
    assert len(x49.enumerate_candidates(98, diagonal_only=True)) == 2
    code, out, _ = x49.run_cli(["criterion", "29", "--json"])
    assert code == 0 and '"positive_rank_predicted": false' in out
    assert x49.run_cli(["criterion", "0"])[0] == 2


def test_verify_theta_suite():
    (suite,) = x49.verify("theta")
    assert suite["passed"], [c for c in suite["checks"] if not c["passed"]]
