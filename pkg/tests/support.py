"""Shared helpers for the test suite: an exact-rational coefficient ring
satisfying the raw-value protocol, and reduction maps into p-adic contexts.
"""

from fractions import Fraction

from hcfrob.padic import v_p


class QRing:
    """Fractions as a coefficient ring for the generic polynomial layer."""

    zero = Fraction(0)
    one = Fraction(1)
    flat_modulus = None

    @staticmethod
    def from_int(k):
        return Fraction(k)

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def mul_int(x, k):
        return x * k

    @staticmethod
    def neg(x):
        return -x

    @staticmethod
    def inv(x):
        if x == 0:
            raise ZeroDivisionError
        return 1 / x

    @staticmethod
    def is_unit(x):
        return x != 0

    @staticmethod
    def is_zero(x):
        return x == 0


QRING = QRing()


def frac_reduce(x, ctx):
    """Image of a p-integral rational in the context (denominator must be
    coprime to p)."""
    x = Fraction(x)
    assert x.denominator % ctx.p != 0, "rational is not p-integral"
    num = ctx.from_int(x.numerator)
    return ctx.mul(num, ctx.inv(ctx.from_int(x.denominator)))


def frac_valuation(x, p):
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    assert x != 0
    return v_p(x.numerator, p) - v_p(x.denominator, p)
