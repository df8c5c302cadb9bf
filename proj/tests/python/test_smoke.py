import pytest

import ncfapprox as na


def test_quadnum_arithmetic():
    x = na.parse_number("(3-sqrt(5))/2")
    assert (x.a, x.b, x.c, x.D) == (3, -1, 2, 5)
    assert x * x - na.QuadNum(3) * x + na.QuadNum(1) == na.QuadNum(0)
    assert abs(float(x) - 0.3819660112501051) < 1e-15
    assert x.to_decimal(8) == "0.38196601"
    assert na.QuadNum("0.5") == na.QuadNum.rational(1, 2)


def test_expansions():
    e = na.parse_ncf("[0; (3,5)*]-")
    assert e.period == [3, 5]
    assert na.expand(e.value()) == e
    assert na.value_of("[0; (3,5)*]-") == na.parse_number("(15-1*sqrt(165))/6")
    assert na.expand("5/7").preperiod == [2, 2, 3]


def test_digits_and_m():
    base = na.parse_ncf("[0; (3)*]-")
    d = na.alpha_expand("1/2", base)
    assert (d.b_pre, d.b_period) == ([1], [0, 2, 0])
    m = na.m_exact(base, "1/sqrt(5)")
    assert m.kind == "Exact"
    assert m.value == na.parse_number("sqrt(5)/25")
    u = na.m_exact(base, "1/2")
    assert u.kind == "UpperBoundOnly"
    assert u.value == na.parse_number("1/(4*sqrt(5))")
    est = na.m_estimate(base.value(), "1/sqrt(5)", 16)
    assert est.value is None
    assert abs(est.estimate - float(m.value)) / float(m.value) < 0.02
    alpha = base.value()
    assert na.is_lattice_equivalent(na.QuadNum(3) * alpha - na.QuadNum(1), alpha) == (-1, 3)


def test_rho_search_and_bounds():
    m, digits, nodes = na.rho_search("[0; (3,5)*]-", period_multiple=2)
    assert m.value == na.period2_rho(3)
    assert digits.t_period == [3, -1]
    b = na.bound_report(3)
    assert b.c == (na.QuadNum(6) * na.parse_number("sqrt(3)") + na.QuadNum(8)).reciprocal()
    assert na.rho_lower_via_gamma_star(na.family("thm2", 4, 3)).value >= na.bound_report(4).c


def test_errors():
    with pytest.raises(na.NcfError):
        na.parse_number("(1+")
    with pytest.raises(ValueError):
        na.bound_report(2)
    with pytest.raises(na.NcfError):
        na.m_exact("[0; (3)*]-", "3*(3-sqrt(5))/2-1")
