import random
from fractions import Fraction

import pytest

from hcfrob.errors import (
    EmptyWindow,
    NonUnitConstantTerm,
    NonUnitLeadingCoeff,
    NotCoprime,
)
from hcfrob.padic import make_context
from hcfrob.series import (
    LaurentTail,
    Poly,
    TruncSeries,
    bezout_precompute,
    bezout_split,
    laurent_mul,
    poly_divmod,
    series_invert,
    solve_u_of_t,
)
from support import QRING, frac_reduce


@pytest.fixture(scope="module")
def z243():
    return make_context(3, 1, 5)


def test_divmod_examples(z243):
    A = Poly.from_ints(z243, [1, 1, 0, 1])  # x^3 + x + 1
    B = Poly.from_ints(z243, [0, 1])
    q, r = poly_divmod(A, B)
    assert q == Poly.from_ints(z243, [1, 0, 1]) and r == Poly.from_ints(z243, [1])
    q, r = poly_divmod(A, A)
    assert q == Poly.one(z243) and r.is_zero()


def test_divmod_random_recomposition(z243):
    rng = random.Random(3)
    for _ in range(30):
        A = Poly.from_ints(z243, [rng.randrange(243) for _ in range(rng.randrange(1, 9))])
        B = Poly.from_ints(z243, [rng.randrange(243) for _ in range(rng.randrange(1, 5))])
        if B.is_zero() or not z243.is_unit(B.lead):
            continue
        q, r = poly_divmod(A, B)
        assert q * B + r == A
        assert r.degree < B.degree


def test_divmod_nonunit_leading(z243):
    A = Poly.from_ints(z243, [1, 1])
    B = Poly.from_ints(z243, [1, 3])  # leading coefficient 3 is not a unit
    with pytest.raises(NonUnitLeadingCoeff):
        poly_divmod(A, B)


def test_divmod_over_extension():
    ctx = make_context(3, 2, 3, modulus=[1, 0, 1])
    rng = random.Random(5)
    for _ in range(15):
        A = Poly(ctx, [ctx.from_coeffs([rng.randrange(27), rng.randrange(27)])
                       for _ in range(5)])
        B = Poly(ctx, [ctx.from_coeffs([rng.randrange(27), rng.randrange(27)])
                       for _ in range(3)])
        if B.is_zero() or not ctx.is_unit(B.lead):
            continue
        q, r = poly_divmod(A, B)
        assert q * B + r == A


def test_bezout_trivial_directions(z243):
    Q = Poly.from_ints(z243, [1, 1, 0, 1])
    Qp = Q.deriv()
    pre = bezout_precompute(Q, Qp)
    U, V = bezout_split(Q, Q, Qp, pre)
    assert U == Poly.one(z243) and V.is_zero()
    U, V = bezout_split(Qp, Q, Qp, pre)
    assert U.is_zero() and V == Poly.one(z243)


@pytest.mark.parametrize("p,qc", [(5, [1, 1, 0, 1]), (3, [1, 1, 0, 1]),
                                  (3, [2, 1, 1, 0, 0, 1]), (7, [3, 0, 5, 1, 2, 1])])
def test_bezout_random_recomposition(p, qc):
    # p = 3 with deg Q = 3 exercises the p | deg(Q') leading-coefficient case
    ctx = make_context(p, 1, 5)
    Q = Poly.from_ints(ctx, qc)
    Qp = Q.deriv()
    pre = bezout_precompute(Q, Qp)
    rng = random.Random(p)
    for _ in range(20):
        A = Poly.from_ints(
            ctx, [rng.randrange(ctx.modulus)
                  for _ in range(rng.randrange(1, Q.degree + Qp.degree + 1))])
        U, V = bezout_split(A, Q, Qp, pre)
        assert U * Q + V * Qp == A
        assert V.degree < Q.degree
        assert U.degree < Qp.degree or U.is_zero() or A.degree >= Q.degree + Qp.degree


def test_bezout_singular_rejected(z243):
    Q = Poly.from_ints(z243, [0, 0, 0, 1])  # x^3, double root mod 3
    with pytest.raises(NotCoprime):
        bezout_precompute(Q, Q.deriv())


def test_series_invert_examples():
    z9 = make_context(3, 1, 2)
    s = TruncSeries.from_poly(Poly.from_ints(z9, [1, 1]), 3)
    assert series_invert(s).coeffs == [1, 8, 1]  # 1 - u + u^2
    one = TruncSeries.from_poly(Poly.one(z9), 4)
    assert series_invert(one).coeffs == [1, 0, 0, 0]


def test_series_invert_random():
    ctx = make_context(3, 1, 4)
    rng = random.Random(9)
    for _ in range(25):
        coeffs = [1 + 3 * rng.randrange(27)] + [rng.randrange(81) for _ in range(5)]
        s = TruncSeries(ctx, coeffs, 6)
        inv = series_invert(s)
        prod = s * inv
        assert prod.coeffs == [1, 0, 0, 0, 0, 0]
        assert series_invert(inv) == s


def test_series_invert_nonunit():
    ctx = make_context(3, 1, 4)
    with pytest.raises(NonUnitConstantTerm):
        series_invert(TruncSeries(ctx, [3, 1], 3))


def test_solve_u_trivial_fixed_point():
    ctx = make_context(3, 1, 4)
    rinv = TruncSeries(ctx, [1], 4)
    u = solve_u_of_t(rinv, 7)
    assert u == TruncSeries.x(ctx, 7, 2)


def test_solve_u_catalan_signs():
    # R = 1 + u gives u*(1+u) = t^2, whose solution has signed Catalan
    # coefficients: u = t^2 - t^4 + 2 t^6 - 5 t^8 + ...
    ctx = make_context(3, 1, 4)
    R = TruncSeries.from_poly(Poly.from_ints(ctx, [1, 1]), 5)
    rinv = series_invert(R)
    u = solve_u_of_t(rinv, 7)
    expect = [0, 0, 1, 0, -1 % 81, 0, 2]
    assert u.coeffs == expect
    # defining relation u * R(u) = t^2 to order T
    lhs = u * u.eval_poly(R.coeffs)
    assert lhs == TruncSeries.x(ctx, 7, 2)
    # exact-rational cross-check of the same iteration
    Rq = TruncSeries(QRING, [Fraction(1), Fraction(1)], 5)
    uq = solve_u_of_t(series_invert(Rq), 7)
    assert [frac_reduce(c, ctx) for c in uq.coeffs] == u.coeffs


def test_laurent_examples():
    ctx = make_context(3, 1, 4)
    x = LaurentTail(ctx, -2, [1])
    y = LaurentTail(ctx, 2, [1])
    prod = laurent_mul(x, y)
    assert prod.e0 == 0 and prod.coeffs == [1]

    # (t^-2 (1+t^2)) * (t^-2 (1-t^2)) = t^-4 (1-t^4), on [-2, 4) windows
    a = LaurentTail(ctx, -2, [1, 0, 1, 0, 0, 0])
    b = LaurentTail(ctx, -2, [1, 0, 80, 0, 0, 0])
    prod = a * b
    assert prod.e0 == -4 and prod.T == 2
    assert prod.coeffs == [1, 0, 0, 0, 80, 0]


def test_laurent_window_rules():
    ctx = make_context(3, 1, 4)
    a = LaurentTail(ctx, -3, [1, 2, 3, 4])      # window [-3, 1)
    b = LaurentTail(ctx, 1, [5, 6])             # window [1, 3)
    prod = a * b
    assert prod.e0 == -2
    assert prod.T == min(a.T + b.e0, b.T + a.e0)  # = min(2, 0) = 0
    assert len(prod.coeffs) == prod.T - prod.e0
    # coefficient below the window is structurally zero; beyond it, an error
    assert a.coeff(-5) == 0
    with pytest.raises(EmptyWindow):
        a.coeff(1)


def test_laurent_add_aligns_windows():
    ctx = make_context(3, 1, 4)
    a = LaurentTail(ctx, -2, [1, 1, 1, 1])  # [-2, 2)
    b = LaurentTail(ctx, 0, [5, 7, 9])      # [0, 3)
    s = a + b
    assert s.e0 == -2 and s.T == 2
    assert s.coeffs == [1, 1, 6, 8]


def test_poly_ops_match_rational_reduction():
    ctx = make_context(5, 1, 3)
    rng = random.Random(17)
    for _ in range(20):
        ai = [rng.randrange(-40, 40) for _ in range(4)]
        bi = [rng.randrange(-40, 40) for _ in range(3)]
        A5, B5 = Poly.from_ints(ctx, ai), Poly.from_ints(ctx, bi)
        Aq = Poly(QRING, [Fraction(c) for c in ai])
        Bq = Poly(QRING, [Fraction(c) for c in bi])
        prod_q = Aq * Bq
        prod_5 = A5 * B5
        assert [frac_reduce(prod_q.c(i), ctx) for i in range(7)] == \
            [prod_5.c(i) for i in range(7)]
