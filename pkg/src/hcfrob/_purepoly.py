"""Pure-Python kernels for dense polynomial arithmetic modulo an integer.

Polynomials are plain lists of ints in [0, m), constant term first.  The
functions here mirror the compiled extension ``hcfrob._fastpoly`` exactly;
whichever is active is chosen in :mod:`hcfrob.backend` at import time.
Callers are responsible for stripping trailing zeros; these routines do not
normalise their output.
"""

COMPILED = False


def poly_add(a, b, m):
    la, lb = len(a), len(b)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    out = list(a)
    for i in range(lb):
        out[i] = (out[i] + b[i]) % m
    return out


def poly_sub(a, b, m):
    la, lb = len(a), len(b)
    n = la if la > lb else lb
    out = [0] * n
    for i in range(la):
        out[i] = a[i]
    for i in range(lb):
        out[i] = (out[i] - b[i]) % m
    return out


def poly_scale(a, c, m):
    c %= m
    return [(c * x) % m for x in a]


def poly_addmul(a, b, c, m):
    """a + c*b, coefficient lists over Z/m."""
    c %= m
    la, lb = len(a), len(b)
    n = la if la > lb else lb
    out = [0] * n
    for i in range(la):
        out[i] = a[i]
    for i in range(lb):
        out[i] = (out[i] + c * b[i]) % m
    return out


def poly_mul(a, b, m):
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    return out


def poly_divmod(a, b, binv, m):
    """Divide a by b given binv = lead(b)^-1 mod m.

    Returns (quotient, remainder) with len(remainder) < len(b); the
    remainder is not stripped of trailing zeros.
    """
    lb = len(b)
    la = len(a)
    if la < lb:
        return [], list(a)
    rem = list(a)
    q = [0] * (la - lb + 1)
    for i in range(la - lb, -1, -1):
        c = rem[i + lb - 1]
        if c:
            c = (c * binv) % m
            q[i] = c
            for j in range(lb):
                rem[i + j] = (rem[i + j] - c * b[j]) % m
    return q, rem[: lb - 1]
