import pytest

import prismcore as pc


def test_poly_arithmetic():
    assert pc.poly_mul("T1 + 1", "T1 - 1", p=2) == pc.poly_add("T1^2", "-1", p=2)
    # inversion of 1 + 2T at precision 3 (p = 2): geometric series mod 8
    inv = pc.poly_invert("1 + 2*T1", p=2, prec=3)
    assert pc.poly_mul("1 + 2*T1", inv, p=2, prec=3) == "1"


def test_witt_laws():
    a, b = [3, 1, 4], [1, 5, 9]
    assert pc.witt_add(2, a, b) == pc.witt_add(2, b, a)
    assert pc.witt_mul(3, a, b) == pc.witt_mul(3, b, a)
    zero = pc.witt_add(2, a, pc.witt_neg(2, a))
    assert zero == [0, 0, 0]


def test_ghost_additivity():
    a, b = [2, 7, 1], [5, 0, 3]
    ga, gb = pc.ghost(2, a), pc.ghost(2, b)
    gs = pc.ghost(2, pc.witt_add(2, a, b))
    assert gs == [x + y for x, y in zip(ga, gb)]


def test_delta_worked_instance():
    # delta(T) = 2T^2 at p = 2: delta^2(T) = 23 T^4, Joyal top 29 T^4
    assert pc.delta_iterate("2*T1^2", "T1", 2, p=2) == "23*T^4"
    assert pc.joyal_coordinates("2*T1^2", "T1", 2, p=2)[2] == "29*T^4"


def test_sections_and_envelope():
    assert pc.sections_agree("T1^2", "T1^2 + 4*T1", 1, p=2)
    assert not pc.sections_agree("T1^2", "T1", 1, p=2)
    assert pc.envelope_phi_y_ok("2*T1^2 + T1", "2*T1^2 + T1 + 2", p=2)


def test_run_suite():
    out = pc.run_suite("witt-laws", p=2, seed=7)
    assert out["verdict"] == "pass"
    assert '"suite": "witt-laws"' in out["json"]
    with pytest.raises(pc.ConfigInvalidError):
        pc.run_suite("no-such-suite")
