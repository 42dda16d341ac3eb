import math
import random

import pytest

from hcfrob.errors import (
    ContextMismatch,
    EvenCharacteristic,
    NoIrreducibleFound,
    NotAUnit,
    NotPrime,
)
from hcfrob.padic import (
    ZqElem,
    apply_sigma,
    make_context,
    poly_is_irreducible_mod_p,
    zq_arith,
    zq_inv,
    zq_valuation,
)


def test_trivial_extension_has_identity_sigma():
    ctx = make_context(3, 1, 2)
    assert ctx.m_int == (0, 1)
    x = ZqElem.from_int(ctx, 5)
    assert apply_sigma(x) == x


def test_quadratic_extension_sigma_is_conjugation():
    # -a is the unique root of a^2+1 congruent to a^3 = -a mod 3
    ctx = make_context(3, 2, 4, modulus=[1, 0, 1])
    a = ZqElem.from_coeffs(ctx, [0, 1])
    assert apply_sigma(a) == -a
    assert apply_sigma(apply_sigma(a)) == a


def test_even_characteristic_rejected():
    with pytest.raises(EvenCharacteristic) as exc:
        make_context(2, 1, 4)
    assert "2*M'" in str(exc.value)


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        make_context(9, 1, 2)


def test_reducible_modulus_rejected():
    # a^2 - 1 factors mod 3
    with pytest.raises(NoIrreducibleFound):
        make_context(3, 2, 2, modulus=[-1, 0, 1])


def test_arith_examples():
    ctx = make_context(3, 1, 2)
    two, five = ZqElem.from_int(ctx, 2), ZqElem.from_int(ctx, 5)
    assert zq_arith("mul", two, five) == 1  # 10 = 1 mod 9
    x = ZqElem.from_int(ctx, 7)
    assert zq_arith("add", x, zq_arith("neg", x)) == 0
    ctx9 = make_context(3, 2, 4, modulus=[1, 0, 1])
    a = ZqElem.from_coeffs(ctx9, [0, 1])
    assert zq_arith("mul", a, a) == -ZqElem.from_int(ctx9, 1)


def test_context_mismatch():
    x = ZqElem.from_int(make_context(3, 1, 2), 1)
    y = ZqElem.from_int(make_context(5, 1, 2), 1)
    with pytest.raises(ContextMismatch):
        x + y


def test_valuation_examples():
    ctx = make_context(3, 1, 3)
    assert zq_valuation(ZqElem.from_int(ctx, 6)) == 1  # 6 = 2*3
    assert zq_valuation(ZqElem.from_int(ctx, 0)) == math.inf
    ctx9 = make_context(3, 2, 3, modulus=[1, 0, 1])
    x = ZqElem.from_coeffs(ctx9, [9, 3])  # 3a + 9
    assert zq_valuation(x) == 1


def test_inverse_examples():
    ctx9 = make_context(3, 1, 2)
    assert zq_inv(ZqElem.from_int(ctx9, 2)) == 5
    ctx27 = make_context(3, 1, 3)
    assert zq_inv(ZqElem.from_int(ctx27, -2)) == 13
    with pytest.raises(NotAUnit):
        zq_inv(ZqElem.from_int(ctx9, 3))


def test_sigma_is_ring_morphism():
    ctx = make_context(5, 3, 4, seed=1)
    rng = random.Random(7)
    for _ in range(25):
        x = ZqElem.from_coeffs(ctx, [rng.randrange(ctx.modulus) for _ in range(3)])
        y = ZqElem.from_coeffs(ctx, [rng.randrange(ctx.modulus) for _ in range(3)])
        assert apply_sigma(x * y) == apply_sigma(x) * apply_sigma(y)
        assert apply_sigma(x + y) == apply_sigma(x) + apply_sigma(y)


def test_sigma_order_n_and_frobenius_congruence():
    for p, n in [(3, 2), (3, 3), (5, 2), (7, 2)]:
        ctx = make_context(p, n, 4)
        rng = random.Random(p * 100 + n)
        for _ in range(10):
            x = ZqElem.from_coeffs(
                ctx, [rng.randrange(ctx.modulus) for _ in range(n)])
            y = x
            for _ in range(n):
                y = apply_sigma(y)
            assert y == x
            # sigma(x) = x^p mod p
            lhs = apply_sigma(x).coeffs
            rhs = (x ** p).coeffs
            assert all((u - v) % p == 0 for u, v in zip(lhs, rhs))


def test_valuation_multiplicative():
    ctx = make_context(3, 1, 6)
    rng = random.Random(11)
    for _ in range(40):
        x = ZqElem.from_int(ctx, rng.randrange(1, ctx.modulus))
        y = ZqElem.from_int(ctx, rng.randrange(1, ctx.modulus))
        vx, vy = x.valuation(), y.valuation()
        if vx is math.inf or vy is math.inf or vx + vy >= ctx.N:
            continue
        assert (x * y).valuation() == vx + vy


def test_inverse_is_two_sided():
    ctx = make_context(7, 2, 3, seed=3)
    rng = random.Random(5)
    for _ in range(20):
        x = ZqElem.from_coeffs(ctx, [rng.randrange(ctx.modulus) for _ in range(2)])
        if not ctx.is_unit(x.raw):
            continue
        assert x * x.inverse() == 1
        assert x.inverse() * x == 1


def test_precision_change_round_trip():
    ctx = make_context(3, 2, 6, seed=2)
    lo = ctx.with_precision(2)
    assert lo.N == 2 and lo.m_int == ctx.m_int
    x = ctx.from_coeffs([700, 701])
    down = ctx.convert(x, lo)
    assert down == tuple(c % 9 for c in x)
    # extending reuses the same modulus lift, so reduction commutes
    hi = ctx.with_precision(8)
    up = ctx.convert(x, hi)
    assert hi.convert(up, ctx) == x
    assert hi.convert(hi.sigma(up), ctx) == ctx.sigma(x)


def test_irreducibility_checker():
    assert poly_is_irreducible_mod_p([1, 0, 1], 3)       # a^2+1 mod 3
    assert not poly_is_irreducible_mod_p([2, 0, 1], 3)   # a^2-1 = (a-1)(a+1)


def _brute_irreducible(coeffs, p):
    # no roots and no quadratic factors, for degree <= 3
    n = len(coeffs) - 1
    if any(_ev(coeffs, x, p) == 0 for x in range(p)):
        return False
    if n <= 3:
        return True
    raise NotImplementedError


def _ev(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def test_irreducibility_matches_brute_force():
    rng = random.Random(1)
    for p in (3, 5, 7):
        for _ in range(30):
            coeffs = [rng.randrange(p) for _ in range(3)] + [1]
            got = poly_is_irreducible_mod_p(coeffs, p)
            assert got == _brute_irreducible(coeffs, p)
