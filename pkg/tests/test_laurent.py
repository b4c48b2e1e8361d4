from klrchar.laurent import (ExactDivisionError, LaurentPoly, PowerSeries,
                             factor_quantum, quantum_factors)

import pytest


def L(**kw):
    return LaurentPoly({int(k[1:].replace("m", "-")): v for k, v in kw.items()})


def test_qint_balanced():
    assert LaurentPoly.qint(2) == LaurentPoly({1: 1, -1: 1})
    assert LaurentPoly.qint(3) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert LaurentPoly.qint(2, 3) == LaurentPoly({3: 1, -3: 1})
    assert LaurentPoly.qint(1) == LaurentPoly.one()
    assert LaurentPoly.qint(0) == LaurentPoly.zero()


def test_qfact():
    two = LaurentPoly.qint(2)
    three = LaurentPoly.qint(3)
    assert LaurentPoly.qfact(3) == two * three


def test_arithmetic_and_bar():
    p = LaurentPoly({1: 2, -3: 1})
    q = LaurentPoly({1: -2, 0: 5})
    assert (p + q) == LaurentPoly({0: 5, -3: 1})
    assert (p - p) == LaurentPoly.zero()
    assert p.bar() == LaurentPoly({-1: 2, 3: 1})
    assert p.bar().bar() == p
    assert LaurentPoly.qint(5, 2).is_bar_invariant()
    assert not p.is_bar_invariant()


def test_exact_division():
    a = LaurentPoly.qint(2) * LaurentPoly.qint(3)
    assert a.exact_div(LaurentPoly.qint(3)) == LaurentPoly.qint(2)
    with pytest.raises(ExactDivisionError):
        (LaurentPoly.one() + LaurentPoly.term(1, 1)).exact_div(LaurentPoly.qint(2))
    # 1 - q^2 divides the A2 commutator coefficient exactly
    num = LaurentPoly({0: 1, 2: -1})
    assert num.exact_div(num) == LaurentPoly.one()


def test_pos_part():
    p = LaurentPoly({3: 1, 0: 7, -2: 4})
    assert p.pos_part() == LaurentPoly({3: 1})


def test_series_division_roundtrip():
    one = PowerSeries.from_poly(LaurentPoly.one(), 15)
    d = (LaurentPoly.one() - LaurentPoly.term(1, 2))
    geo = one.div_poly(d)
    assert geo.c == {2 * k: 1 for k in range(8)}
    assert geo * d == one
    # unit negative lowest term
    md = LaurentPoly({-1: 1, 3: -1})
    s = PowerSeries.from_poly(LaurentPoly.term(1, -1), 10)
    assert s.div_poly(md) * md == s


def test_series_truncate_and_eq():
    a = PowerSeries({0: 1, 5: 2}, 10)
    assert a.truncate(4) == PowerSeries({0: 1}, 4)
    assert a != PowerSeries({0: 1, 5: 2}, 11)


def test_quantum_factors():
    p = LaurentPoly.qint(2) * LaurentPoly.qint(3)
    assert quantum_factors(p) == [(2, 1), (3, 1)]
    g2 = LaurentPoly.qint(2, 3) * LaurentPoly.qint(2) * LaurentPoly.qint(3)
    assert quantum_factors(g2) == [(2, 1), (3, 1), (2, 3)]
    assert quantum_factors(LaurentPoly({1: 1})) is None
    assert factor_quantum(LaurentPoly.one()) == "1"
    assert factor_quantum(g2, {1: 1, 3: 2}) == "[2]_1[3]_1[2]_2"
