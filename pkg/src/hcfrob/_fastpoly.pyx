# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomial arithmetic modulo an integer.

Same contract as :mod:`hcfrob._purepoly`: lists of ints in [0, m), constant
term first, no trailing-zero normalisation.  The modulus must satisfy
m < 2**63; products are accumulated in 128-bit registers.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

COMPILED = True


cdef u64* _tobuf(list a, Py_ssize_t n) except NULL:
    cdef u64* buf = <u64*> malloc(n * sizeof(u64) if n else sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = <u64> a[i]
    return buf


cdef list _tolist(u64* buf, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


def poly_add(list a, list b, m):
    cdef u64 mm = <u64> m
    cdef Py_ssize_t la = len(a), lb = len(b), n, i
    n = la if la > lb else lb
    cdef u64* out = _tobuf(a if la >= lb else b, n)
    cdef list other = b if la >= lb else a
    cdef Py_ssize_t lo = lb if la >= lb else la
    for i in range(lo):
        out[i] = (out[i] + <u64> other[i]) % mm
    res = _tolist(out, n)
    free(out)
    return res


def poly_sub(list a, list b, m):
    cdef u64 mm = <u64> m
    cdef Py_ssize_t la = len(a), lb = len(b), n, i
    n = la if la > lb else lb
    cdef u64* out = <u64*> malloc(n * sizeof(u64) if n else sizeof(u64))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    for i in range(la):
        out[i] = <u64> a[i]
    for i in range(lb):
        out[i] = (out[i] + mm - <u64> b[i]) % mm
    res = _tolist(out, n)
    free(out)
    return res


def poly_scale(list a, c, m):
    cdef u64 mm = <u64> m
    cdef u64 cc = <u64> (c % m)
    cdef Py_ssize_t la = len(a), i
    cdef u64* out = _tobuf(a, la)
    for i in range(la):
        out[i] = <u64> ((<u128> out[i] * cc) % mm)
    res = _tolist(out, la)
    free(out)
    return res


def poly_addmul(list a, list b, c, m):
    cdef u64 mm = <u64> m
    cdef u64 cc = <u64> (c % m)
    cdef Py_ssize_t la = len(a), lb = len(b), n, i
    n = la if la > lb else lb
    cdef u64* out = <u64*> malloc(n * sizeof(u64) if n else sizeof(u64))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    for i in range(la):
        out[i] = <u64> a[i]
    for i in range(lb):
        out[i] = <u64> ((out[i] + (<u128> cc * <u64> b[i])) % mm)
    res = _tolist(out, n)
    free(out)
    return res


def poly_mul(list a, list b, m):
    cdef u64 mm = <u64> m
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef u64* ba = _tobuf(a, la)
    cdef u64* bb
    try:
        bb = _tobuf(b, lb)
    except MemoryError:
        free(ba)
        raise
    cdef Py_ssize_t n = la + lb - 1
    cdef u64* out = <u64*> malloc(n * sizeof(u64))
    if out == NULL:
        free(ba)
        free(bb)
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    cdef u64 ai
    for i in range(la):
        ai = ba[i]
        if ai:
            for j in range(lb):
                out[i + j] = <u64> ((out[i + j] + <u128> ai * bb[j]) % mm)
    res = _tolist(out, n)
    free(ba)
    free(bb)
    free(out)
    return res


def poly_divmod(list a, list b, binv, m):
    cdef u64 mm = <u64> m
    cdef u64 bi = <u64> (binv % m)
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la < lb:
        return [], list(a)
    cdef u64* rem = _tobuf(a, la)
    cdef u64* bb
    try:
        bb = _tobuf(b, lb)
    except MemoryError:
        free(rem)
        raise
    cdef Py_ssize_t lq = la - lb + 1
    cdef u64* q = <u64*> malloc(lq * sizeof(u64))
    if q == NULL:
        free(rem)
        free(bb)
        raise MemoryError()
    cdef u64 c
    for i in range(la - lb, -1, -1):
        c = rem[i + lb - 1]
        if c:
            c = <u64> ((<u128> c * bi) % mm)
            for j in range(lb):
                rem[i + j] = <u64> ((rem[i + j] + <u128> (mm - 1) * ((<u128> c * bb[j]) % mm)) % mm)
        q[i] = c
    qres = _tolist(q, lq)
    rres = _tolist(rem, lb - 1)
    free(rem)
    free(bb)
    free(q)
    return qres, rres
