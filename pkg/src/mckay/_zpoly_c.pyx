# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`mckay._zpoly_py` (same functions, same semantics).

Coefficients stay Python ints; the gain comes from typed loops and from a
machine-word path for products whose coefficient bound fits in 63 bits.
"""

from libc.stdlib cimport free, malloc

from ._kronecker import _bigdivmod, _bigmul, _maxbits, _offset, _slot

KRONECKER_CUTOFF = 16
cdef Py_ssize_t _CUT = 16

cdef extern from *:
    """
    #if PY_VERSION_HEX >= 0x030D0000
    #define MCKAY_AS_BYTES(v, buf, n) _PyLong_AsByteArray((PyLongObject *)(v), (buf), (n), 1, 0, 1)
    #else
    #define MCKAY_AS_BYTES(v, buf, n) _PyLong_AsByteArray((PyLongObject *)(v), (buf), (n), 1, 0)
    #endif
    """
    int MCKAY_AS_BYTES(object v, unsigned char *buf, size_t n) except -1
    object _PyLong_FromByteArray(const unsigned char *buf, size_t n, int little_endian, int is_signed)


# -- Kronecker substitution without per-coefficient bytes objects ----------


cdef object _pack(tuple c, int k):
    cdef Py_ssize_t m = len(c), i, nb = k // 8
    cdef unsigned char *buf = <unsigned char *>malloc(m * nb)
    if not buf:
        raise MemoryError()
    off = (<object>1) << (k - 1)
    try:
        for i in range(m):
            MCKAY_AS_BYTES(c[i] + off, buf + i * nb, nb)
        v = _PyLong_FromByteArray(buf, m * nb, 1, 0)
    finally:
        free(buf)
    return v - _offset(m, k)


cdef tuple _unpack(v, int k, Py_ssize_t m):
    cdef Py_ssize_t i, nb = k // 8
    cdef unsigned char *buf = <unsigned char *>malloc(m * nb)
    if not buf:
        raise MemoryError()
    off = (<object>1) << (k - 1)
    try:
        MCKAY_AS_BYTES(v + _offset(m, k), buf, m * nb)
        out = [_PyLong_FromByteArray(buf + i * nb, nb, 1, 0) - off for i in range(m)]
    finally:
        free(buf)
    i = m
    while i and not out[i - 1]:
        i -= 1
    return tuple(out[:i])


cpdef tuple kron_mul(tuple a, tuple b):
    k = _slot(_maxbits(a) + _maxbits(b) + min(len(a), len(b)).bit_length())
    return _unpack(_bigmul(_pack(a, k), _pack(b, k)), k, len(a) + len(b) - 1)


cpdef tuple kron_divexact(tuple a, tuple b, fallback):
    """Same contract as :func:`mckay._kronecker.kron_divexact`."""
    cdef Py_ssize_t m = len(a) - len(b) + 1
    k = _slot(max(_maxbits(a), _maxbits(b)) + m.bit_length() + 8)
    q, r = _bigdivmod(_pack(a, k), _pack(b, k))
    if r:
        raise ArithmeticError("inexact division")
    try:
        cand = _unpack(q, k, m)
    except OverflowError:
        return fallback(a, b)
    if len(cand) == m and _maxbits(cand) + _maxbits(b) + min(m, len(b)).bit_length() + 2 <= k:
        return cand
    return fallback(a, b)


cpdef tuple trim(c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


cpdef tuple add(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef list r = list(a)
    for i in range(lb):
        r[i] = r[i] + b[i]
    if la == lb:
        return trim(r)
    return tuple(r)


cpdef tuple sub(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list r
    if la >= lb:
        r = list(a)
        for i in range(lb):
            r[i] = r[i] - b[i]
        if la == lb:
            return trim(r)
        return tuple(r)
    r = [-x for x in b]
    for i in range(la):
        r[i] = r[i] + a[i]
    return tuple(r)


cpdef tuple neg(tuple a):
    return tuple([-x for x in a])


cpdef tuple scale(tuple a, c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cdef int _bits(tuple a):
    cdef int m = 0, b
    for x in a:
        b = (<object>x).bit_length()
        if b > m:
            m = b
    return m


cdef tuple _mul_small(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), n = la + lb - 1, i, j
    cdef long long *xa = <long long *>malloc(la * sizeof(long long))
    cdef long long *xb = <long long *>malloc(lb * sizeof(long long))
    cdef long long *r = <long long *>malloc(n * sizeof(long long))
    cdef long long y
    if not xa or not xb or not r:
        free(xa); free(xb); free(r)
        raise MemoryError()
    try:
        for i in range(la):
            xa[i] = a[i]
        for j in range(lb):
            xb[j] = b[j]
        for i in range(n):
            r[i] = 0
        for j in range(lb):
            y = xb[j]
            if y:
                for i in range(la):
                    r[i + j] += xa[i] * y
        return tuple([r[i] for i in range(n)])
    finally:
        free(xa); free(xb); free(r)


cpdef tuple mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if not la or not lb:
        return ()
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    if lb == 1:
        c = b[0]
        return tuple([x * c for x in a])
    if lb >= _CUT:
        return kron_mul(a, b)
    # |sum| <= lb * max|a| * max|b| must stay below 2**63
    if _bits(a) + _bits(b) + (<object>lb).bit_length() < 63:
        return _mul_small(a, b)
    cdef list r = [0] * (la + lb - 1)
    for j in range(lb):
        y = b[j]
        if y:
            for i in range(la):
                r[i + j] = r[i + j] + a[i] * y
    return tuple(r)


cpdef tuple divexact(tuple a, tuple b):
    """Quotient ``a / b`` over Z[t]; ArithmeticError unless ``b`` divides ``a``."""
    cdef Py_ssize_t lb = len(b)
    if not lb:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if lb == 1:
        c = b[0]
        q = []
        for x in a:
            y, rem = divmod(x, c)
            if rem:
                raise ArithmeticError("inexact division")
            q.append(y)
        return tuple(q)
    if lb >= _CUT and len(a) - lb >= _CUT:
        return kron_divexact(a, b, _school_divexact)
    return _school_divexact(a, b)


cpdef tuple _school_divexact(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), m, k, i
    if la < lb:
        raise ArithmeticError("inexact division")
    cdef list r = list(a)
    lc = b[lb - 1]
    m = la - lb + 1
    cdef list q = [0] * m
    for k in range(m - 1, -1, -1):
        c, rem = divmod(r[k + lb - 1], lc)
        if rem:
            raise ArithmeticError("inexact division")
        q[k] = c
        if c:
            for i in range(lb - 1):
                r[k + i] = r[k + i] - c * b[i]
    for i in range(lb - 1):
        if r[i]:
            raise ArithmeticError("inexact division")
    return tuple(q)


cpdef tuple prem(tuple a, tuple b):
    """Pseudo-remainder: ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    cdef Py_ssize_t la = len(a), lb = len(b), k, i
    if not lb:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return a
    cdef list r = list(a)
    lc = b[lb - 1]
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        for i in range(k + lb - 1):
            r[i] = r[i] * lc
        for i in range(lb - 1):
            r[k + i] = r[k + i] - c * b[i]
        r[k + lb - 1] = 0
    return trim(r[: lb - 1])


cpdef evaluate(tuple a, x):
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc
