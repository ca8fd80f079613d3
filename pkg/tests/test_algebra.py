import random
from fractions import Fraction

import pytest

from qkflag.algebra import (LaurentPoly, LocalizationFraction, SeriesContext,
                            TSeries, RationalCoeffs, CharacterCoeffs,
                            lp_mul, lp_exact_div, ts_exp, ts_solve_linear,
                            ExactDivisionError)


def _y(k=1):
    return LaurentPoly.character((k,))


def test_lp_mul_examples():
    one = LaurentPoly.one(1)
    y = _y()
    assert lp_mul(one - y, one + y) == one - y * y
    a = LaurentPoly.character((-2,)) + one * Fraction(3, 2)
    assert lp_mul(one, a) == a
    lam, mu = LaurentPoly.character((1, 2)), LaurentPoly.character((3, -1))
    assert lp_mul(lam, mu) == LaurentPoly.character((4, 1))


def test_lp_exact_div_examples():
    one = LaurentPoly.one(1)
    y = _y()
    assert lp_exact_div(one - y * y, one - y) == one + y
    a = one * 5 - y * Fraction(1, 3)
    assert lp_exact_div(a, one) == a
    with pytest.raises(ExactDivisionError):
        lp_exact_div(one - y * y, one + y * 2)


def _random_poly(rng, rank=2, nterms=4):
    p = LaurentPoly.zero(rank)
    for _ in range(nterms):
        e = tuple(rng.randint(-3, 3) for _ in range(rank))
        p = p + LaurentPoly.character(e) * Fraction(rng.randint(-5, 5),
                                                    rng.randint(1, 3))
    return p


def test_ring_axioms_random():
    rng = random.Random(17)
    for _ in range(30):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a


def test_division_inverts_multiplication_random():
    rng = random.Random(19)
    for _ in range(40):
        a, b = _random_poly(rng), _random_poly(rng)
        if b.is_zero():
            continue
        assert lp_exact_div(a * b, b) == a


def test_localization_fraction_add_reduce():
    one = LaurentPoly.one(1)
    alpha = (2,)
    # 1/(1 - e^{-alpha}) + (-e^{-alpha})/(1 - e^{-alpha}) = 1
    f1 = LocalizationFraction(one, [alpha])
    f2 = LocalizationFraction(LaurentPoly.character((-2,)) * Fraction(-1),
                              [alpha])
    assert (f1 + f2).reduce() == one
    # different denominators go through the factor union
    g1 = LocalizationFraction(one - LaurentPoly.character((-2,)), [alpha])
    g2 = LocalizationFraction(LaurentPoly.zero(1), [alpha, alpha])
    s = g1 + g2
    assert sorted(s.factors) == [alpha, alpha]
    assert s.reduce() == one


def _ctx(order=4, nvars=1, ring=RationalCoeffs):
    return SeriesContext(tuple(str(i + 1) for i in range(nvars)), ("q",),
                         order, ring)


def test_ts_exp_examples():
    ctx = _ctx(order=3)
    t = ctx.tvar(0)
    e = ts_exp(t)
    assert e.coefficient(-1, (0,)) == 1
    assert e.coefficient(-1, (1,)) == 1
    assert e.coefficient(-1, (2,)) == Fraction(1, 2)
    assert e.coefficient(-1, (3,)) == Fraction(1, 6)

    ring = CharacterCoeffs(1)
    ctx2 = SeriesContext(("1",), ("q",), 2, ring)
    a = LaurentPoly.character((-2,))
    e2 = ts_exp(ctx2.tvar(0).scale(a))
    assert e2.coefficient(-1, (2,)) == a * a * Fraction(1, 2)

    assert ts_exp(ctx.zero()) == ctx.one()


def test_ts_exp_rejects_bad_input():
    ctx = _ctx(order=4)
    t = ctx.tvar(0)
    with pytest.raises(ValueError):
        ts_exp(t * t)
    with pytest.raises(ValueError):
        ts_exp(ctx.one())


def test_ts_exp_inverse():
    ctx = _ctx(order=5, nvars=2)
    s = ctx.tvar(0) + ctx.tvar(1).scale(Fraction(-3, 2))
    assert ts_exp(s) * ts_exp(-s) == ctx.one()


def test_novikov_truncation():
    ctx = SeriesContext(("1",), ("a", "b"), 3, RationalCoeffs)
    qa, qb = ctx.novikov(0), ctx.novikov(1)
    assert (qa * qa).is_zero()
    assert (qa * qb).is_zero()
    t = ctx.tvar(0)
    assert (t ** 4).is_zero()
    assert not (t ** 3).is_zero()


def test_ts_solve_identity():
    ctx = _ctx(order=3)
    t = ctx.tvar(0)
    b = [ts_exp(t), ctx.one() - t]
    m = [[ctx.one(), ctx.zero()], [ctx.zero(), ctx.one()]]
    assert ts_solve_linear(m, b) == b


def test_ts_solve_geometric():
    ctx = _ctx(order=2)
    t, q = ctx.tvar(0), ctx.novikov(0)
    c = ts_solve_linear([[ctx.one() + q * t]], [ctx.one()])
    assert c[0] == ctx.one() - q * t


def test_ts_solve_resubstitution_oracle():
    # constant term [[1,1],[1,0]] (the classical pairing of P^1)
    ctx = _ctx(order=3)
    t, q = ctx.tvar(0), ctx.novikov(0)
    one, zero = ctx.one(), ctx.zero()
    m = [[one + q * ts_exp(t), one - t], [one - t, zero + q]]
    b = [ts_exp(t), one + (q * t).scale(Fraction(5, 3))]
    c = ts_solve_linear(m, b)
    for i in range(2):
        resub = m[i][0] * c[0] + m[i][1] * c[1]
        assert resub == b[i]


def test_ts_solve_singular_rejected():
    ctx = _ctx(order=2)
    m = [[ctx.one(), ctx.one()], [ctx.one(), ctx.one()]]
    with pytest.raises(ExactDivisionError):
        ts_solve_linear(m, [ctx.one(), ctx.zero()])


def test_series_sorting_canonical():
    ctx = SeriesContext(("1", "2"), ("q",), 3, RationalCoeffs)
    s = (ctx.novikov(0) + ctx.tvar(1) + ctx.tvar(0)
         + ctx.tvar(0) * ctx.tvar(1) + ctx.one())
    keys = [k for k, _ in s.sorted_items()]
    # Novikov-free first, then by total degree, then t_1 before t_2
    assert keys == [(-1, (0, 0)), (-1, (1, 0)), (-1, (0, 1)), (-1, (1, 1)),
                    (0, (0, 0))]


def test_character_ring_solve():
    ring = CharacterCoeffs(1)
    ctx = SeriesContext(("1",), ("q",), 3, ring)
    a = LaurentPoly.character((-2,))
    one = LaurentPoly.one(1)
    m = [[ctx.one(), ctx.one()],
         [ctx.one(), ctx.constant(one - a)]]
    b = [ctx.one().scale(a), ts_exp(ctx.tvar(0).scale(a))]
    c = ts_solve_linear(m, b)
    for i in range(2):
        assert m[i][0] * c[0] + m[i][1] * c[1] == b[i]
