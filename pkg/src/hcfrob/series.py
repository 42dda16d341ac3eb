"""Polynomials, truncated power series and Laurent tails over a coefficient
ring.

The ring is anything exposing the raw-value protocol of
:class:`hcfrob.padic.RingContext` (zero/one/add/sub/mul/neg/inv/is_unit/
is_zero/from_int/mul_int, plus ``flat_modulus``).  All three containers are
generic over it, so the same algorithms serve the full-precision ring, its
low-precision quotients, and the exact-rational adapter used in the tests.

Truncation windows are part of a value, not bookkeeping on the side: every
operation computes the tightest window that is sound for its inputs, and
the window rules are tested as behaviour.  A TruncSeries knows coefficients
for exponents [0, T); a LaurentTail for [e0, T) with coefficients below e0
structurally zero.
"""

from .backend import kernel_for
from .errors import (
    EmptyWindow,
    NonUnitConstantTerm,
    NonUnitLeadingCoeff,
    NotCoprime,
)


class Poly:
    """Dense polynomial; coeffs holds raw ring values, constant term first,
    with no trailing zeros stored."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs, normalize=True):
        if normalize:
            coeffs = list(coeffs)
            while coeffs and ring.is_zero(coeffs[-1]):
                coeffs.pop()
        self.ring = ring
        self.coeffs = coeffs

    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [ring.from_int(c) for c in ints])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [], normalize=False)

    @classmethod
    def one(cls, ring):
        return cls(ring, [ring.one], normalize=False)

    @classmethod
    def x_power(cls, ring, k, scalar=None):
        c = ring.one if scalar is None else scalar
        return cls(ring, [ring.zero] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def c(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def _kernel(self):
        m = self.ring.flat_modulus
        if m is None:
            return None, None
        return kernel_for(m), m

    def __add__(self, other):
        k, m = self._kernel()
        if k is not None:
            return Poly(self.ring, k.poly_add(self.coeffs, other.coeffs, m))
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = r.add(out[i], bi)
        return Poly(r, out)

    def __sub__(self, other):
        k, m = self._kernel()
        if k is not None:
            return Poly(self.ring, k.poly_sub(self.coeffs, other.coeffs, m))
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.c(i) for i in range(n)]
        for i, bi in enumerate(other.coeffs):
            out[i] = r.sub(out[i], bi)
        return Poly(r, out)

    def __neg__(self):
        r = self.ring
        return Poly(r, [r.neg(c) for c in self.coeffs], normalize=False)

    def __mul__(self, other):
        k, m = self._kernel()
        if k is not None:
            return Poly(self.ring, k.poly_mul(self.coeffs, other.coeffs, m))
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(r)
        out = [r.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not r.is_zero(ai):
                for j, bj in enumerate(b):
                    out[i + j] = r.add(out[i + j], r.mul(ai, bj))
        return Poly(r, out)

    def scale(self, c):
        k, m = self._kernel()
        if k is not None:
            return Poly(self.ring, k.poly_scale(self.coeffs, c, m))
        r = self.ring
        return Poly(r, [r.mul(c, x) for x in self.coeffs])

    def addmul(self, other, c):
        """self + c*other."""
        k, m = self._kernel()
        if k is not None:
            return Poly(self.ring, k.poly_addmul(self.coeffs, other.coeffs, c, m))
        return self + other.scale(c)

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.ring, [self.ring.zero] * k + self.coeffs,
                    normalize=False)

    def deriv(self):
        r = self.ring
        return Poly(r, [r.mul_int(c, i)
                        for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        r = self.ring
        acc = r.zero
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, x), c)
        return acc

    def divmod(self, other):
        r = self.ring
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not r.is_unit(other.lead):
            raise NonUnitLeadingCoeff(
                "leading coefficient is not a unit")
        binv = r.inv(other.lead)
        k, m = self._kernel()
        if k is not None:
            q, rem = k.poly_divmod(self.coeffs, other.coeffs, binv, m)
            return Poly(r, q), Poly(r, rem)
        a = list(self.coeffs)
        b = other.coeffs
        lb = len(b)
        if len(a) < lb:
            return Poly.zero(r), Poly(r, a)
        q = [r.zero] * (len(a) - lb + 1)
        for i in range(len(a) - lb, -1, -1):
            c = a[i + lb - 1]
            if not r.is_zero(c):
                c = r.mul(c, binv)
                q[i] = c
                for j in range(lb):
                    a[i + j] = r.sub(a[i + j], r.mul(c, b[j]))
        return Poly(r, q), Poly(r, a[: lb - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                terms.append(f"({self.ring.format_raw(c)})*x^{i}"
                             if hasattr(self.ring, "format_raw")
                             else f"({c!r})*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_divmod(a, b):
    """A = q*B + r with deg r < deg B; the leading coefficient of B must be
    a unit."""
    return a.divmod(b)


# ---------------------------------------------------------------------------
# Bezout splitting A = U*Q + V*Qp

def bezout_precompute(Q, Qp):
    """Cofactors (S, T) with S*Q + T*Qp = 1 over the full-precision ring.

    The identity is solved over the residue field first and then lifted one
    p-digit at a time; plain extended Euclid over Z/p^N breaks down as soon
    as a remainder has p-divisible leading coefficient (already Qp when
    p | 2g+1), which is why the lift is done this way.
    """
    ring = Q.ring
    fp = ring.with_precision(1)
    Qb = _reduce_poly(Q, fp)
    Qpb = _reduce_poly(Qp, fp)
    g, s0, t0 = _field_xgcd(Qb, Qpb)
    if g.degree != 0:
        raise NotCoprime(
            "Q and Q' share a factor mod p; the reduction mod p is singular")
    ginv = fp.inv(g.coeffs[0])
    s0 = s0.scale(ginv)
    t0 = t0.scale(ginv)
    S = _lift_poly(s0, ring)
    T = _lift_poly(t0, ring)
    one = Poly.one(ring)
    p = ring.p
    pk = 1
    for k in range(1, ring.N):
        pk *= p
        E = one - S * Q - T * Qp
        if E.is_zero():
            break
        Ek = _digit_poly(E, k, fp)
        tk = (Ek * t0) % Qb
        sk, rem = (Ek - tk * Qpb).divmod(Qb)
        if not rem.is_zero():
            raise AssertionError("digit lift left a remainder")
        S = S + _lift_poly(sk, ring).scale(ring.from_int(pk))
        T = T + _lift_poly(tk, ring).scale(ring.from_int(pk))
    if not (one - S * Q - T * Qp).is_zero():
        raise AssertionError("Bezout lift failed to converge")
    return S, T


def bezout_split(A, Q, Qp, pre=None):
    """Write A = U*Q + V*Qp with deg V < deg Q.

    When deg A < deg Q + deg Qp this is the unique such pair with
    deg U < deg Qp; larger A is accepted and simply produces a larger U.
    """
    if pre is None:
        pre = bezout_precompute(Q, Qp)
    S, T = pre
    V = (A * T) % Q
    U, rem = (A - V * Qp).divmod(Q)
    if not rem.is_zero():
        raise AssertionError("Bezout split inconsistency")
    return U, V


def _field_xgcd(a, b):
    """Extended Euclid over a field presented as a precision-1 context."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Poly.one(ring), Poly.zero(ring)
    t0, t1 = Poly.zero(ring), Poly.one(ring)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def _reduce_poly(poly, target):
    src = poly.ring
    return Poly(target, [src.convert(c, target) for c in poly.coeffs])


def _lift_poly(poly, target):
    # raw residues mod p are valid representatives at any higher precision
    src = poly.ring
    return Poly(target, [target.from_coeffs(src.coords(c))
                         for c in poly.coeffs])


def _digit_poly(poly, k, fp):
    """Coefficient-wise extraction of the p^k digit, for a polynomial that
    vanishes mod p^k."""
    ring = poly.ring
    pk = ring.p ** k
    out = []
    for c in poly.coeffs:
        coords = ring.coords(c)
        if any(x % pk for x in coords):
            raise AssertionError("polynomial is not divisible by p^k")
        out.append(fp.from_coeffs([(x // pk) % ring.p for x in coords]))
    return Poly(fp, out)


# ---------------------------------------------------------------------------
# truncated power series

class TruncSeries:
    """Series known modulo t^T: coefficients for exponents 0..T-1."""

    __slots__ = ("ring", "T", "coeffs")

    def __init__(self, ring, coeffs, T):
        if T < 1:
            raise EmptyWindow("truncation order must be positive")
        coeffs = list(coeffs)[:T]
        coeffs += [ring.zero] * (T - len(coeffs))
        self.ring = ring
        self.T = T
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, poly, T):
        return cls(poly.ring, list(poly.coeffs), T)

    @classmethod
    def x(cls, ring, T, k=1):
        coeffs = [ring.zero] * T
        if k < T:
            coeffs[k] = ring.one
        return cls(ring, coeffs, T)

    def truncate(self, T):
        return TruncSeries(self.ring, self.coeffs, min(self.T, T))

    def __add__(self, other):
        T = min(self.T, other.T)
        r = self.ring
        return TruncSeries(
            r, [r.add(a, b) for a, b in zip(self.coeffs, other.coeffs)], T)

    def __sub__(self, other):
        T = min(self.T, other.T)
        r = self.ring
        return TruncSeries(
            r, [r.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)], T)

    def __mul__(self, other):
        T = min(self.T, other.T)
        r = self.ring
        m = r.flat_modulus
        if m is not None:
            k = kernel_for(m)
            prod = k.poly_mul(self.coeffs[:T], other.coeffs[:T], m)
            return TruncSeries(r, prod[:T], T)
        out = [r.zero] * T
        for i, ai in enumerate(self.coeffs[:T]):
            if r.is_zero(ai):
                continue
            for j, bj in enumerate(other.coeffs[: T - i]):
                out[i + j] = r.add(out[i + j], r.mul(ai, bj))
        return TruncSeries(r, out, T)

    def scale(self, c):
        r = self.ring
        return TruncSeries(r, [r.mul(c, x) for x in self.coeffs], self.T)

    def shift_up(self, k):
        """Multiply by t^k, keeping the same absolute truncation order."""
        return TruncSeries(self.ring, [self.ring.zero] * k + self.coeffs,
                           self.T)

    def add_const(self, c):
        out = list(self.coeffs)
        out[0] = self.ring.add(out[0], c)
        return TruncSeries(self.ring, out, self.T)

    def eval_poly(self, coeffs):
        """Horner evaluation at this series of a polynomial given by raw
        ring coefficients (constant first)."""
        r = self.ring
        acc = TruncSeries(r, [], self.T)
        for c in reversed(list(coeffs)):
            acc = (acc * self).add_const(c)
        return acc

    def is_zero(self):
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.T == other.T
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.T, tuple(self.coeffs)))

    def __repr__(self):
        return f"TruncSeries({self.coeffs!r} + O(t^{self.T}))"


def series_invert(s):
    """Inverse of a series with unit constant term, by Newton doubling."""
    r = s.ring
    if not r.is_unit(s.coeffs[0]):
        raise NonUnitConstantTerm("constant term is not a unit")
    inv = TruncSeries(r, [r.inv(s.coeffs[0])], 1)
    while inv.T < s.T:
        T2 = min(2 * inv.T, s.T)
        inv = TruncSeries(r, inv.coeffs, T2)
        prod = s.truncate(T2) * inv
        two_minus = TruncSeries(r, [r.neg(c) for c in prod.coeffs], T2)
        two_minus = two_minus.add_const(r.from_int(2))
        inv = inv * two_minus
    return inv


def solve_u_of_t(rinv, T):
    """Solve u = t^2 * rinv(u) as a series in t to order T.

    rinv is a series in u with unit constant term.  Starting from u = t^2,
    each substitution round gains at least two t-orders because of the t^2
    prefactor, so ceil(T/2)+1 rounds reach the exact fixed point; stability
    is asserted rather than assumed.
    """
    ring = rinv.ring
    u = TruncSeries.x(ring, T, 2)
    for _ in range(T // 2 + 2):
        new = u.eval_poly(rinv.coeffs).shift_up(2)
        if new == u:
            return u
        u = new
    raise AssertionError("fixed-point iteration did not stabilise")


# ---------------------------------------------------------------------------
# Laurent tails

class LaurentTail:
    """t^e0 * (power series), known on the exponent window [e0, T).

    Coefficients below e0 are structurally zero, which is what makes
    windowed addition sound.
    """

    __slots__ = ("ring", "e0", "coeffs")

    def __init__(self, ring, e0, coeffs):
        if not coeffs:
            raise EmptyWindow("empty coefficient window")
        self.ring = ring
        self.e0 = e0
        self.coeffs = list(coeffs)

    @classmethod
    def from_series(cls, s, shift=0):
        return cls(s.ring, shift, s.coeffs)

    @property
    def T(self):
        return self.e0 + len(self.coeffs)

    def coeff(self, e):
        """Coefficient of t^e; exact zero below the window, error past its
        truncation."""
        if e < self.e0:
            return self.ring.zero
        if e >= self.T:
            raise EmptyWindow(f"exponent {e} is beyond truncation {self.T}")
        return self.coeffs[e - self.e0]

    def __mul__(self, other):
        r = self.ring
        e0 = self.e0 + other.e0
        T = min(self.T + other.e0, other.T + self.e0)
        n = T - e0
        if n <= 0:
            raise EmptyWindow("product window is empty")
        m = r.flat_modulus
        if m is not None:
            k = kernel_for(m)
            prod = k.poly_mul(self.coeffs, other.coeffs, m)
            return LaurentTail(r, e0, prod[:n])
        out = [r.zero] * n
        for i, ai in enumerate(self.coeffs):
            if r.is_zero(ai):
                continue
            for j, bj in enumerate(other.coeffs[: n - i]):
                out[i + j] = r.add(out[i + j], r.mul(ai, bj))
        return LaurentTail(r, e0, out)

    def __add__(self, other):
        r = self.ring
        e0 = min(self.e0, other.e0)
        T = min(self.T, other.T)
        if T <= e0:
            raise EmptyWindow("sum window is empty")
        out = []
        for e in range(e0, T):
            a = self.coeff(e) if e < self.T else r.zero
            b = other.coeff(e) if e < other.T else r.zero
            out.append(r.add(a, b))
        return LaurentTail(r, e0, out)

    def scale(self, c):
        r = self.ring
        return LaurentTail(r, self.e0, [r.mul(c, x) for x in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, LaurentTail) and self.e0 == other.e0
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.e0, tuple(self.coeffs)))

    def __repr__(self):
        return f"LaurentTail(e0={self.e0}, {self.coeffs!r} + O(t^{self.T}))"


def laurent_mul(x, y):
    """Windowed product; lowest exponent adds, truncation shortens to the
    tightest sound bound min(Tx+e0y, Ty+e0x)."""
    return x * y
