import pytest

import qlie


def test_parse_and_print_round_trip():
    p = qlie.parse("b0^2 b1 + b3")
    assert str(p) == "b0^2 b1 + b3"
    assert qlie.parse(str(p)) == p


def test_products():
    b1, b2 = qlie.parse("b1"), qlie.parse("b2")
    assert str(qlie.stuffle(b1, b2)) == "b3 + b1 b2 + b2 b1"
    assert str(qlie.shuffle(b1, b2)) == "b1 b2 + b2 b1"
    assert qlie.gr_d(qlie.stuffle(b1, b2)) == qlie.shuffle(b1, b2)


def test_maps():
    assert str(qlie.tau(qlie.parse("b2"))) == "b0 b1"
    assert str(qlie.sec(qlie.parse("b0 b1"))) == "b0 b1 - b1 b0"
    assert str(qlie.tau_dbi(qlie.parse("D(3,0)"))) == "D(1,2)"
    assert str(qlie.delta(qlie.parse("D(1,0)"))) == "D(2,1)"
    assert str(qlie.theta(qlie.parse("ad0^2(x1)"))) == \
        "b0^2 b1 - 2 * b0 b1 b0 + b1 b0^2 + b3"


def test_brackets_and_bimoulds():
    f, g = qlie.parse("D(1,0)"), qlie.parse("D(2,0)")
    br = qlie.bracket_a(f, g)
    assert qlie.beta(br) == qlie.ari(qlie.beta(f), qlie.beta(g))
    assert str(qlie.beta(qlie.parse("D(2,1)"))) == "[1] X1 Y1"
    alternal, _, _ = qlie.is_alternal(qlie.beta(br))
    assert alternal


def test_membership():
    member, cond, _ = qlie.is_in_lq(qlie.parse("b1"))
    assert member
    member, cond, _ = qlie.is_in_lq(qlie.parse("b2"))
    assert not member and cond == "ii"
    member, _, _ = qlie.is_in_ls(qlie.parse("ad0^2(x1)"))
    assert member


def test_bases_and_dims():
    basis = qlie.basis("lq", 3, 1)
    assert len(basis) == 2
    assert str(basis[0]) == "D(1,2) + D(3,0)"
    table = dict(((k, d), n) for k, d, n in qlie.dims("lq", 5, 1))
    assert table[(1, 1)] == 1 and table[(3, 1)] == 2 and table[(5, 1)] == 3
    assert table[(2, 1)] == 0 and table[(4, 1)] == 0


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        qlie.tau(qlie.parse("b1 b0"))
    with pytest.raises(ValueError):
        qlie.parse("b1 x0")
    with pytest.raises(ValueError):
        qlie.to_dbi(qlie.parse("b0 b1"))
