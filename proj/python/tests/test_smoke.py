from fractions import Fraction

import pytest

import germsig


def test_cosec_sum():
    for d in range(2, 20):
        assert germsig.cosec2_sum(d) == Fraction(d * d - 1, 3)
    assert germsig.cosec2_half(1, 4).startswith("0.2")


def test_meyer_tau():
    s = [[0, -1], [1, 0]]
    i = [[1, 0], [0, 1]]
    assert germsig.meyer_tau(i, s) == 0
    assert germsig.meyer_tau(s, s) == -2
    with pytest.raises(germsig.GermsigError) as info:
        germsig.meyer_tau([[2, 0], [0, 1]], i)
    assert germsig.error_name(info.value) == "NotSymplectic"


def test_representation():
    assert germsig.genus(2, 6) == 2
    m = germsig.homology_rep(2, 4, "s12 s12^-1")
    assert m == [[1, 0], [0, 1]]
    a = germsig.homology_rep(3, 6, "s12 s23 s12")
    b = germsig.homology_rep(3, 6, "s23 s12 s23")
    assert a == b
    with pytest.raises(germsig.GermsigError) as info:
        germsig.homology_rep(3, 4, "s12", labels=[1, 2, 1, 2])
    assert germsig.error_name(info.value) == "InvalidWord"


def test_local_signature():
    assert germsig.phi(2, 6, "s12") == Fraction(3, 5)
    germ = germsig.p1_germ(3, 3)
    assert germsig.sigma_loc(germ) == Fraction(-4, 3)
    assert germsig.chi_loc_p1(2, 6) == Fraction(3, 5)
    action = {
        "order": 2,
        "signQuotient": 0,
        "perElement": {"t": {"surfaces": [{"psi": {"num": 1, "den": 2}, "e": -2}], "points": []}},
    }
    assert germsig.total_signature(action) == 2
    with pytest.raises(germsig.GermsigError):
        germsig.p1_germ(2, 5)


def test_winding():
    a = [(3, 1, 2), (3, 2, 1)]
    ref = [(3, 4, 5, 2)]
    assert germsig.relative_winding(5, a, ref) == -1
    assert germsig.relative_winding(5, ref, ref) == 0
    assert germsig.relative_winding(4, [], [], sheets=2, projection_a=1) == 1


def test_suite():
    assert "cosec_sum" in germsig.suite_names()
    report = germsig.run_suite("representation")
    assert report["pass"] is True
