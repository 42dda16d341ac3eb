"""Arithmetic in truncated unramified p-adic rings.

The ring of Witt vectors W(F_q) with q = p^n is represented at a fixed
absolute precision N as (Z/p^N)[a]/(m(a)) where m is a monic degree-n lift
of a polynomial irreducible over F_p.  Ring elements store coordinates in
the power basis 1, a, ..., a^(n-1) as integers in [0, p^N); for n = 1 the
coordinate is a bare int, for n >= 2 a tuple of ints.

The Frobenius lift sigma sends a to the unique root of m congruent to
a^p mod p, obtained by Newton iteration (m mod p is separable, so m'(root)
is a unit).  sigma is a ring automorphism with sigma^n = id and
sigma(x) = x^p mod p.

Everything here is immutable after construction and shareable across
threads; all operations are pure functions of their inputs.
"""

import math
import random

from .errors import (
    ContextMismatch,
    EvenCharacteristic,
    NoIrreducibleFound,
    NotAUnit,
    NotPrime,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(k):
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if k < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if k % small == 0:
            return k == small
    d = k - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in _MR_BASES:
        x = pow(base, d, k)
        if x in (1, k - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % k
            if x == k - 1:
                break
        else:
            return False
    return True


def v_p(x, p):
    """p-adic valuation of a nonzero integer."""
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def floor_log(p, x):
    """floor(log_p(x)) for x >= 1."""
    e = 0
    v = p
    while v <= x:
        v *= p
        e += 1
    return e


def ceil_log(p, x):
    """ceil(log_p(x)) for x >= 1, i.e. the least e with p^e >= x."""
    e = 0
    v = 1
    while v < x:
        v *= p
        e += 1
    return e


# ---------------------------------------------------------------------------
# polynomials over F_p as plain int lists (internal; used for irreducibility
# tests and for seeding the sigma lift)

def _fpp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fpp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fpp_trim(out)


def _fpp_mod(a, mbar, p):
    a = list(a)
    dm = len(mbar) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mbar[j]) % p
    del a[dm:]
    return _fpp_trim(a)


def _fpp_powmod(base, e, mbar, p):
    result = [1]
    base = _fpp_mod(base, mbar, p)
    while e:
        if e & 1:
            result = _fpp_mod(_fpp_mul(result, base, p), mbar, p)
        base = _fpp_mod(_fpp_mul(base, base, p), mbar, p)
        e >>= 1
    return result


def _fpp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # make b monic, then reduce a mod b
        inv = pow(b[-1], p - 2, p)
        b = [(c * inv) % p for c in b]
        r = _fpp_mod(a, b, p) if len(a) >= len(b) else a
        a, b = b, _fpp_trim(list(r))
    return a


def _fpp_sub_x(a, p):
    a = list(a) + [0] * max(0, 2 - len(a))
    a[1] = (a[1] - 1) % p
    return _fpp_trim(a)


def poly_is_irreducible_mod_p(coeffs, p):
    """Irreducibility over F_p of the reduction of an integer-coefficient
    monic polynomial."""
    mbar = [c % p for c in coeffs]
    n = len(mbar) - 1
    if n < 1 or mbar[-1] != 1:
        return False
    if n == 1:
        return True
    # x^(p^k) mod mbar, built by iterated composition with x^p
    xp = _fpp_powmod([0, 1], p, mbar, p)
    frob = [list(xp)]
    for _ in range(n - 1):
        prev = frob[-1]
        # substitute: h(x) -> h(x^p) = h(xp) since c^p = c in F_p
        acc = []
        for c in reversed(prev):
            acc = _fpp_mod(_fpp_mul(acc, xp, p), mbar, p)
            if c:
                if not acc:
                    acc = [c]
                else:
                    acc[0] = (acc[0] + c) % p
        frob.append(acc)
    # frob[k] = x^(p^(k+1)); irreducible iff x^(p^n) == x and the proper
    # Frobenius powers are coprime to mbar
    if _fpp_trim(list(_fpp_sub_x(frob[n - 1], p))):
        return False
    for ell in _prime_divisors(n):
        h = _fpp_sub_x(frob[n // ell - 1], p)
        g = _fpp_gcd(list(mbar), list(h), p)
        if len(g) - 1 > 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# coordinate-vector arithmetic at an explicit modulus (internal; the public
# surface is RingContext/ZqElem below)

def _vec_mul(x, y, mred, big):
    n = len(x)
    if n == 1:
        return ((x[0] * y[0]) % big,)
    buf = [0] * (2 * n - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                buf[i + j] = (buf[i + j] + xi * yj) % big
    for d in range(2 * n - 2, n - 1, -1):
        c = buf[d]
        if c:
            buf[d] = 0
            for j in range(n):
                buf[d - n + j] = (buf[d - n + j] - c * mred[j]) % big
    return tuple(buf[:n])


def _vec_eval_int_poly(coeffs, x, mred, big):
    """Evaluate an integer-coefficient polynomial at a ring element."""
    n = len(x)
    acc = (0,) * n
    for c in reversed(coeffs):
        acc = _vec_mul(acc, x, mred, big)
        acc = (acc[0] + c,) + acc[1:]
        acc = tuple(v % big for v in acc)
    return acc


def _vec_inv(x, mred, big, p, n, q):
    """Inverse of a unit via mod-p field inversion plus Hensel iteration."""
    x0 = tuple(c % p for c in x)
    if all(c == 0 for c in x0):
        raise NotAUnit("element is divisible by p")
    # field inverse: x^(q-2) mod (p, m)
    e = q - 2
    base = x0
    y = (1,) + (0,) * (n - 1)
    while e:
        if e & 1:
            y = _vec_mul(y, base, [c % p for c in mred], p)
        base = _vec_mul(base, base, [c % p for c in mred], p)
        e >>= 1
    # Hensel: y <- y*(2 - x*y) doubles the precision each round
    y = tuple(c % big for c in y)
    while True:
        t = _vec_mul(x, y, mred, big)
        if t == (1,) + (0,) * (n - 1):
            return y
        two_minus = tuple((-c) % big for c in t)
        two_minus = (two_minus[0] + 2,) + two_minus[1:]
        two_minus = tuple(c % big for c in two_minus)
        y = _vec_mul(y, two_minus, mred, big)


class RingContext:
    """The truncated ring (Z/p^N)[a]/(m(a)) together with its Frobenius lift.

    Raw element values are ints in [0, p^N) when n == 1 and tuples of n such
    ints otherwise.  ``flat_modulus`` is p^N in the first case and None in
    the second; polynomial layers use it to route coefficient lists through
    the compiled kernel.
    """

    __slots__ = (
        "p", "n", "N", "modulus", "m_int", "m_red", "sigma_image", "seed",
        "zero", "one", "q", "flat_modulus", "_derived",
    )

    def __init__(self, p, n, N, m_int, sigma_image, seed):
        self.p = p
        self.n = n
        self.N = N
        self.modulus = p ** N
        self.m_int = tuple(m_int)
        self.m_red = tuple(c % self.modulus for c in m_int)
        self.sigma_image = sigma_image
        self.seed = seed
        self.q = p ** n
        if n == 1:
            self.zero = 0
            self.one = 1 % self.modulus
            self.flat_modulus = self.modulus
        else:
            self.zero = (0,) * n
            self.one = (1,) + (0,) * (n - 1)
            self.flat_modulus = None
        self._derived = {}

    # -- raw-value ring operations ------------------------------------

    def from_int(self, k):
        k %= self.modulus
        if self.n == 1:
            return k
        return (k,) + (0,) * (self.n - 1)

    def from_coeffs(self, coords):
        coords = [c % self.modulus for c in coords]
        if len(coords) > self.n:
            raise ValueError("too many coordinates")
        coords += [0] * (self.n - len(coords))
        if self.n == 1:
            return coords[0]
        return tuple(coords)

    def coords(self, x):
        return (x,) if self.n == 1 else x

    def add(self, x, y):
        if self.n == 1:
            return (x + y) % self.modulus
        return tuple((a + b) % self.modulus for a, b in zip(x, y))

    def sub(self, x, y):
        if self.n == 1:
            return (x - y) % self.modulus
        return tuple((a - b) % self.modulus for a, b in zip(x, y))

    def neg(self, x):
        if self.n == 1:
            return (-x) % self.modulus
        return tuple((-a) % self.modulus for a in x)

    def mul(self, x, y):
        if self.n == 1:
            return (x * y) % self.modulus
        return _vec_mul(x, y, self.m_red, self.modulus)

    def mul_int(self, x, k):
        if self.n == 1:
            return (x * k) % self.modulus
        return tuple((a * k) % self.modulus for a in x)

    def is_zero(self, x):
        return x == self.zero

    def val(self, x):
        """Largest v <= N with p^v dividing every coordinate; math.inf for 0
        (to be read as "at least N")."""
        if self.n == 1:
            return math.inf if x == 0 else v_p(x, self.p)
        if all(c == 0 for c in x):
            return math.inf
        return min(v_p(c, self.p) for c in x if c != 0)

    def is_unit(self, x):
        if self.n == 1:
            return x % self.p != 0
        return any(c % self.p != 0 for c in x)

    def inv(self, x):
        if not self.is_unit(x):
            raise NotAUnit(f"valuation of {x!r} is positive")
        if self.n == 1:
            return pow(x, -1, self.modulus)
        return _vec_inv(x, self.m_red, self.modulus, self.p, self.n, self.q)

    def sigma(self, x):
        if self.n == 1:
            return x
        return _vec_eval_int_poly_raw(x, self.sigma_image, self.m_red, self.modulus)

    def pow(self, x, e):
        acc = self.one
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    # -- precision changes ---------------------------------------------

    def with_precision(self, N2):
        """The same ring presented at absolute precision N2 (cached)."""
        if N2 == self.N:
            return self
        ctx = self._derived.get(N2)
        if ctx is None:
            ctx = make_context(self.p, self.n, N2, seed=self.seed,
                               modulus=self.m_int)
            self._derived[N2] = ctx
        return ctx

    def convert(self, x, target):
        """Reinterpret a raw value in a context of different precision,
        reducing the stored representative."""
        if self.n != target.n or self.p != target.p:
            raise ContextMismatch("incompatible rings")
        if self.n == 1:
            return x % target.modulus
        return tuple(c % target.modulus for c in x)

    def compatible(self, other):
        return (self.p, self.n, self.N, self.m_red) == \
            (other.p, other.n, other.N, other.m_red)

    # -- formatting -----------------------------------------------------

    def format_raw(self, x):
        """Canonical text form: an integer, or terms like 1+2*a+a^2."""
        coords = self.coords(x)
        if all(c == 0 for c in coords[1:]):
            return str(coords[0])
        parts = []
        for k, c in enumerate(coords):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                pw = "a" if k == 1 else f"a^{k}"
                parts.append(pw if c == 1 else f"{c}*{pw}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"RingContext(p={self.p}, n={self.n}, N={self.N})"


def _vec_eval_int_poly_raw(x, image, mred, big):
    """Substitute a |-> image in the coordinate polynomial of x."""
    acc = (0,) * len(x)
    for c in reversed(x):
        acc = _vec_mul(acc, image, mred, big)
        acc = (acc[0] + c,) + acc[1:]
        acc = tuple(v % big for v in acc)
    return acc


def make_context(p, n, N, seed=0, modulus=None):
    """Build a RingContext.

    The modulus m is located deterministically from the seed (monic, with
    coefficients in [0, p)) unless given explicitly as integer coefficients,
    constant first.  sigma's image of a is Newton-lifted from a^p mod p.
    """
    if p == 2:
        raise EvenCharacteristic()
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if N < 1:
        raise ValueError("precision must be >= 1")

    if modulus is not None:
        m_int = tuple(int(c) for c in modulus)
        if len(m_int) != n + 1 or m_int[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not poly_is_irreducible_mod_p(m_int, p):
            raise NoIrreducibleFound("given modulus is reducible mod p")
    elif n == 1:
        m_int = (0, 1)
    else:
        rng = random.Random(seed)
        m_int = None
        for _ in range(2000):
            cand = tuple(rng.randrange(p) for _ in range(n)) + (1,)
            if poly_is_irreducible_mod_p(cand, p):
                m_int = cand
                break
        if m_int is None:
            raise NoIrreducibleFound(
                f"no irreducible modulus found for p={p}, n={n}")

    big = p ** N
    mred = tuple(c % big for c in m_int)
    if n == 1:
        sigma_image = 0
    else:
        sigma_image = _lift_frobenius_root(m_int, p, n, N)
    ctx = RingContext(p, n, N, m_int, sigma_image, seed)
    # construction invariants
    if n > 1:
        img = _vec_eval_int_poly(m_int, sigma_image, mred, big)
        if any(c != 0 for c in img):
            raise AssertionError("sigma image is not a root of m")
        ap = _fpp_powmod([0, 1], p, [c % p for c in m_int], p)
        ap = tuple(ap) + (0,) * (n - len(ap))
        if tuple(c % p for c in sigma_image) != ap:
            raise AssertionError("sigma image does not reduce to a^p")
    return ctx


def _lift_frobenius_root(m_int, p, n, N):
    """Root of m congruent to a^p mod p, by Newton iteration with doubling
    precision.  m' is a unit at the root because m mod p is separable."""
    mbar = [c % p for c in m_int]
    r = _fpp_powmod([0, 1], p, mbar, p)
    r = tuple(r) + (0,) * (n - len(r))
    mprime = tuple(k * m_int[k] for k in range(1, n + 1))
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        big = p ** prec
        mred = tuple(c % big for c in m_int)
        r = tuple(c % big for c in r)
        fx = _vec_eval_int_poly(m_int, r, mred, big)
        fpx = _vec_eval_int_poly(mprime, r, mred, big)
        fpx_inv = _vec_inv(fpx, mred, big, p, n, p ** n)
        delta = _vec_mul(fx, fpx_inv, mred, big)
        r = tuple((a - b) % big for a, b in zip(r, delta))
    return r


class ZqElem:
    """A ring element bound to its context; thin wrapper over a raw value
    with operator overloads.  Plain ints coerce from either side."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, raw):
        self.ctx = ctx
        self.raw = raw

    @classmethod
    def from_int(cls, ctx, k):
        return cls(ctx, ctx.from_int(k))

    @classmethod
    def from_coeffs(cls, ctx, coords):
        return cls(ctx, ctx.from_coeffs(coords))

    @property
    def coeffs(self):
        return self.ctx.coords(self.raw)

    def _other_raw(self, other):
        if isinstance(other, ZqElem):
            if other.ctx is not self.ctx and not self.ctx.compatible(other.ctx):
                raise ContextMismatch("elements from different rings")
            return other.raw
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return None

    def __add__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return ZqElem(self.ctx, self.ctx.add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return ZqElem(self.ctx, self.ctx.sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return ZqElem(self.ctx, self.ctx.sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._other_raw(other)
        if raw is None:
            return NotImplemented
        return ZqElem(self.ctx, self.ctx.mul(self.raw, raw))

    __rmul__ = __mul__

    def __neg__(self):
        return ZqElem(self.ctx, self.ctx.neg(self.raw))

    def __pow__(self, e):
        return ZqElem(self.ctx, self.ctx.pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, ZqElem):
            return self.ctx.compatible(other.ctx) and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.n, self.ctx.N, self.raw))

    def __bool__(self):
        return not self.ctx.is_zero(self.raw)

    def valuation(self):
        return self.ctx.val(self.raw)

    def inverse(self):
        return ZqElem(self.ctx, self.ctx.inv(self.raw))

    def sigma(self):
        return ZqElem(self.ctx, self.ctx.sigma(self.raw))

    def __repr__(self):
        return (f"ZqElem({self.ctx.format_raw(self.raw)} "
                f"mod {self.ctx.p}^{self.ctx.N})")


# -- spec-surface convenience wrappers --------------------------------------

def zq_arith(op, x, y=None):
    """Dispatch form of the basic operations: op in {add, sub, mul, neg}."""
    if op == "neg":
        return -x
    if y is None:
        raise ValueError("binary operation needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def zq_valuation(x):
    return x.valuation()


def zq_inv(x):
    return x.inverse()


def apply_sigma(x):
    return x.sigma()
