"""Odd-degree hyperelliptic curve data: y^2 = Q(x) with Q monic of degree
2g+1 over the truncated Witt ring, nonsingular mod p.

Only this model is supported: it has a single rational Weierstrass point at
infinity, where the local coordinate t satisfies t^2 = P(u) with u = 1/x,
t = y*u^(g+1) and P(u) = Q(1/u)*u^(2g+2).  Since Q is monic, P = u*R(u)
with R(0) = 1 and P'(0) = 1.

Point counting by exhaustive enumeration lives here too; it is the
independent oracle everything downstream is checked against.  Affine
solutions are counted through the quadratic character of F_{q^m} and the
point at infinity contributes exactly 1 because deg Q is odd (the classic
off-by-one).
"""

import math
import random
import re

from .errors import (
    EvenCharacteristic,
    IndexOutOfRange,
    NotMonic,
    ParseError,
    SingularReduction,
    TooLarge,
    WrongDegree,
)
from .padic import ceil_log, floor_log, make_context
from .series import Poly, TruncSeries

ENUMERATION_GUARD = 10 ** 7


class HyperellipticCurve:
    """Validated curve datum; immutable, with lazily attached caches."""

    __slots__ = ("ctx", "g", "Q", "_cache")

    def __init__(self, ctx, g, Q):
        self.ctx = ctx
        self.g = g
        self.Q = Q
        self._cache = {}

    @property
    def p(self):
        return self.ctx.p

    @property
    def n(self):
        return self.ctx.n

    @property
    def N(self):
        return self.ctx.N

    @property
    def q(self):
        return self.ctx.q

    def with_precision(self, N2):
        """The same curve presented at a different working precision; the
        stored coefficient representatives are reinterpreted canonically."""
        ctx2 = self.ctx.with_precision(N2)
        Q2 = Poly(ctx2, [self.ctx.convert(c, ctx2) for c in self.Q.coeffs])
        return validate_curve(ctx2, self.g, Q2)

    def __eq__(self, other):
        return (isinstance(other, HyperellipticCurve)
                and self.ctx.compatible(other.ctx)
                and self.g == other.g and self.Q.coeffs == other.Q.coeffs)

    def __hash__(self):
        return hash((self.p, self.n, self.N, self.g, tuple(self.Q.coeffs)))

    def __repr__(self):
        return f"HyperellipticCurve({print_curve_line(self)!r})"


def validate_curve(ctx, g, Q):
    """Check the curve datum and return it wrapped.

    Rejections: p = 2 (only a factor-2 integrality statement would survive
    the basis change there), wrong degree, non-monic Q, and Q with a
    repeated root mod p.
    """
    if ctx.p == 2:
        raise EvenCharacteristic()
    if g < 1:
        raise WrongDegree("genus must be >= 1")
    if not isinstance(Q, Poly):
        Q = Poly(ctx, [ctx.from_int(c) if isinstance(c, int) else c
                       for c in Q])
    if Q.degree != 2 * g + 1:
        raise WrongDegree(
            f"deg Q = {Q.degree}, expected {2 * g + 1} for genus {g}")
    if Q.lead != ctx.one:
        raise NotMonic("Q must be monic")
    fp = ctx.with_precision(1)
    Qbar = Poly(fp, [ctx.convert(c, fp) for c in Q.coeffs])
    if _field_gcd_degree(Qbar, Qbar.deriv()) > 0:
        raise SingularReduction("Q has a repeated root mod p")
    return HyperellipticCurve(ctx, g, Q)


def _field_gcd_degree(a, b):
    while not b.is_zero():
        binv = b.ring.inv(b.lead)
        b = b.scale(binv)
        a, b = b, a % b
    return a.degree


class InfinityChart:
    """Series data of the chart at infinity: t^2 = P(u) = u*R(u)."""

    __slots__ = ("P", "R", "Pp")

    def __init__(self, P, R, Pp):
        self.P = P
        self.R = R
        self.Pp = Pp


def infinity_chart(curve):
    """P(u) = Q(1/u)*u^(2g+2) as a series: the coefficients of Q reversed
    and shifted one slot up, so P has no constant term and R = P/u has
    R(0) = 1."""
    chart = curve._cache.get("chart")
    if chart is not None:
        return chart
    ctx = curve.ctx
    g = curve.g
    size = 2 * g + 3
    pc = [ctx.zero] * size
    for j, qj in enumerate(curve.Q.coeffs):
        pc[2 * g + 2 - j] = qj
    P = TruncSeries(ctx, pc, size)
    R = TruncSeries(ctx, pc[1:], size - 1)
    Pp = TruncSeries(ctx, [ctx.mul_int(pc[e], e) for e in range(1, size)],
                     size - 1)
    assert ctx.is_zero(P.coeffs[0])
    assert R.coeffs[0] == ctx.one
    assert Pp.coeffs[0] == ctx.one
    chart = InfinityChart(P, R, Pp)
    curve._cache["chart"] = chart
    return chart


def ord_at_infinity(g, i):
    """Order along the divisor at infinity of the i-th basis differential
    x^i dx/y: 2g - 2 - 2i."""
    if not 0 <= i <= 2 * g - 1:
        raise IndexOutOfRange(f"basis index {i} out of range for genus {g}")
    return 2 * g - 2 - 2 * i


# ---------------------------------------------------------------------------
# exhaustive point counting

class _ExtField:
    """F_{q^m} presented as F_q[b]/(M(b)); elements are length-m tuples of
    residue-field raws."""

    def __init__(self, fp, m, seed=0):
        self.fp = fp
        self.m = m
        self.size = fp.q ** m
        if m == 1:
            mod = [fp.zero, fp.one]
        else:
            mod = _find_ext_modulus(fp, m, seed)
        self.mod = mod
        self.zero = (fp.zero,) * m
        self.one = (fp.one,) + (fp.zero,) * (m - 1)

    def embed(self, c):
        return (c,) + (self.fp.zero,) * (self.m - 1)

    def mul(self, x, y):
        fp, m = self.fp, self.m
        buf = [fp.zero] * (2 * m - 1)
        for i, xi in enumerate(x):
            if not fp.is_zero(xi):
                for j, yj in enumerate(y):
                    buf[i + j] = fp.add(buf[i + j], fp.mul(xi, yj))
        for d in range(2 * m - 2, m - 1, -1):
            c = buf[d]
            if not fp.is_zero(c):
                buf[d] = fp.zero
                for j in range(m):
                    buf[d - m + j] = fp.sub(buf[d - m + j],
                                            fp.mul(c, self.mod[j]))
        return tuple(buf[:m])

    def pow(self, x, e):
        acc = self.one
        while e:
            if e & 1:
                acc = self.mul(acc, x)
            x = self.mul(x, x)
            e >>= 1
        return acc

    def elements(self):
        fp, m = self.fp, self.m
        base = [fp.from_coeffs(coords) for coords in
                _coord_tuples(fp.p, fp.n)]
        stack = [()]
        for _ in range(m):
            stack = [t + (b,) for t in stack for b in base]
        return stack


def _coord_tuples(p, n):
    out = [()]
    for _ in range(n):
        out = [t + (c,) for t in out for c in range(p)]
    return out


def _find_ext_modulus(fp, m, seed):
    rng = random.Random(seed)
    one = fp.one
    for _ in range(4000):
        coeffs = [fp.from_coeffs([rng.randrange(fp.p) for _ in range(fp.n)])
                  for _ in range(m)] + [one]
        if _is_irreducible_over_field(Poly(fp, coeffs), m):
            return coeffs
    raise AssertionError("no extension modulus found")


def _is_irreducible_over_field(M, m):
    fp = M.ring
    if M.degree != m:
        return False
    x = Poly(fp, [fp.zero, fp.one])
    frob = _poly_powmod(x, fp.q, M)
    powers = [frob]
    for _ in range(m - 1):
        powers.append(_poly_compose_mod(powers[-1], frob, M))
    # powers[k] = x^(q^(k+1)) mod M
    if powers[m - 1] != x:
        return False
    mm = m
    d = 2
    primes = []
    while d * d <= mm:
        if mm % d == 0:
            primes.append(d)
            while mm % d == 0:
                mm //= d
        d += 1
    if mm > 1:
        primes.append(mm)
    for ell in primes:
        h = powers[m // ell - 1] - x
        if _field_gcd_degree_pair(M, h) > 0:
            return False
    return True


def _field_gcd_degree_pair(a, b):
    while not b.is_zero():
        b = b.scale(b.ring.inv(b.lead))
        a, b = b, a % b
    return a.degree


def _poly_powmod(base, e, M):
    acc = Poly.one(M.ring)
    base = base % M
    while e:
        if e & 1:
            acc = (acc * base) % M
        base = (base * base) % M
        e >>= 1
    return acc


def _poly_compose_mod(f, g, M):
    acc = Poly.zero(M.ring)
    for c in reversed(f.coeffs):
        acc = (acc * g) % M
        acc = acc + Poly(M.ring, [c])
    return acc


def count_points_naive(curve, m=1):
    """#C(F_{q^m}) by brute force: affine solutions of y^2 = Q(x) counted
    through the quadratic character, plus the point at infinity."""
    q_m = curve.q ** m
    if q_m > ENUMERATION_GUARD:
        raise TooLarge(f"q^m = {q_m} exceeds the enumeration guard")
    fp = curve.ctx.with_precision(1)
    ext = _ExtField(fp, m)
    qbar = [ext.embed(curve.ctx.convert(c, fp)) for c in curve.Q.coeffs]
    half = (q_m - 1) // 2
    minus_one = tuple(fp.neg(c) if i == 0 else c
                      for i, c in enumerate(ext.one))
    total = 1  # the single point at infinity of the odd-degree model
    for x in ext.elements():
        acc = ext.zero
        for c in reversed(qbar):
            acc = ext.mul(acc, x)
            acc = tuple(fp.add(a, b) for a, b in zip(acc, c))
        chi = ext.pow(acc, half)
        if chi == ext.one:
            total += 2
        elif chi == ext.zero:
            total += 1
        elif chi != minus_one:
            raise AssertionError("quadratic character out of range")
    return total


# ---------------------------------------------------------------------------
# text format

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(?:a(?:\^(\d+))?)?$")


def _parse_coefficient(text, ctx):
    text = text.strip()
    if not text:
        raise ParseError("empty coefficient")
    if re.fullmatch(r"-?\d+", text):
        return ctx.from_int(int(text))
    coords = [0] * ctx.n
    for term in text.split("+"):
        term = term.strip()
        mt = _TERM_RE.match(term)
        if not mt or (mt.group(1) is None and "a" not in term):
            raise ParseError(f"bad coefficient term {term!r}")
        coeff = int(mt.group(1)) if mt.group(1) else 1
        if "a" in term:
            k = int(mt.group(2)) if mt.group(2) else 1
        else:
            k = 0
        if k >= ctx.n:
            raise ParseError(f"power a^{k} exceeds extension degree {ctx.n}")
        coords[k] += coeff
    return ctx.from_coeffs(coords)


def parse_curve_line(line, seed=0):
    """Parse the one-line curve format:

        p=<int> n=<int> g=<int> N=<int> Q=[c0,c1,...,c_{2g+1}]

    Coefficients are integers or polynomials in the ring generator like
    1+2*a.  For n >= 2 the modulus of the extension is the canonical one
    located from the given seed, so files are self-contained.
    """
    fields = {}
    for tok in line.strip().split():
        key, eq, val = tok.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {tok!r}")
        fields[key] = val
    for key in ("p", "n", "g", "N", "Q"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}")
    try:
        p = int(fields["p"])
        n = int(fields["n"])
        g = int(fields["g"])
        N = int(fields["N"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    qtext = fields["Q"]
    if not (qtext.startswith("[") and qtext.endswith("]")):
        raise ParseError("Q must be a bracketed coefficient list")
    ctx = make_context(p, n, N, seed=seed)
    coeffs = [_parse_coefficient(c, ctx) for c in qtext[1:-1].split(",")]
    return validate_curve(ctx, g, Poly(ctx, coeffs, normalize=False))


def print_curve_line(curve):
    """Canonical one-line form; parse(print(c)) reproduces c bit-exactly."""
    ctx = curve.ctx
    qtext = ",".join(ctx.format_raw(c) for c in curve.Q.coeffs)
    return (f"p={curve.p} n={curve.n} g={curve.g} N={curve.N} Q=[{qtext}]")


def random_curve(ctx, g, rng, max_tries=500):
    """Seeded random curve: coefficients uniform in [0, p) coordinate-wise,
    rejection-sampled until the reduction mod p is nonsingular."""
    for _ in range(max_tries):
        coeffs = [ctx.from_coeffs([rng.randrange(ctx.p)
                                   for _ in range(ctx.n)])
                  for _ in range(2 * g + 1)] + [ctx.one]
        try:
            return validate_curve(ctx, g, Poly(ctx, coeffs))
        except SingularReduction:
            continue
    raise AssertionError("could not sample a nonsingular curve")


def recommended_precision(p, n, g):
    """Working precision policy: enough digits to round the middle zeta
    coefficient, plus the worst denominator of the raw Frobenius matrix,
    plus two guard digits."""
    r_bound = floor_log(p, 2 * g - 1)
    return (-(-n * g // 2) + ceil_log(p, 2 * math.comb(2 * g, g))
            + r_bound + 2)


def weil_bound_ok(count, q, g, m=1):
    """|#C(F_{q^m}) - (q^m + 1)| <= 2g sqrt(q^m), checked exactly."""
    qm = q ** m
    return (count - qm - 1) ** 2 <= 4 * g * g * qm
