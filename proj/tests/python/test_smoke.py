from fractions import Fraction

import pytest

import besselpow as bp


def test_zeta_concrete_and_symbolic():
    assert bp.zeta(1, 2) == [Fraction(1, 8), Fraction(1, 192)]
    z2 = bp.zeta(None, 1)[0]
    assert z2.den == (1, 1)
    assert z2.num == (Fraction(1, 4),)
    assert z2(3) == Fraction(1, 16)


def test_pole_is_value_error():
    with pytest.raises(ValueError):
        bp.zeta(-1, 1)


def test_b_polys_routes_agree():
    ref = bp.b_polys(Fraction(5, 3), 6)
    for route in ("bell", "pochhammer", "step", "binomial"):
        assert bp.b_polys(Fraction(5, 3), 6, route=route) == ref
    assert bp.b_polys(0, 2)[2] == [0, -1, 2]
    assert bp.b_value(0, 2, 3) == 15
    assert bp.b_value(0, 2, 0, route="bender") == Fraction(1, 12)
    assert "bender" in bp.routes


def test_sequences_and_walks():
    assert [v for _, v in bp.sequence("M", 4)] == [1, 1, 3, 16]
    assert [v for _, v in bp.sequence("b_tilde", 5, nu=0)] == [1, 1, 2, 16]
    assert bp.walk_moment(3, 4) == 15
    assert bp.rayleigh_phi(4) == [11, 5]
    assert bp.rayleigh_degree(4) == 1


def test_verify_report():
    report = bp.verify(max_n=4)
    assert report["summary"]["fail"] == 0
    assert report["summary"]["expected-discrepancy"] >= 2
    bad = bp.verify(max_n=4, mutate_zeta_sign=True)
    assert bad["summary"]["fail"] > 0


def test_cli():
    code, out, err = bp.run_cli(["seq", "M", "--max", "4", "--bfile"])
    assert (code, out, err) == (0, "1 1\n2 1\n3 3\n4 16\n", "")
    code, _, err = bp.run_cli(["zeta", "--nu", "x"])
    assert code == 1 and "--nu" in err


def test_sym_string_means_symbolic():
    assert bp.zeta("sym", 2) == bp.zeta(None, 2)
