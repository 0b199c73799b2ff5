"""Pure-Python kernels for dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, constant term first, without trailing
zeros.  The zero polynomial is the empty tuple.  The compiled twin
``_zpoly_c`` exposes exactly the same functions.
"""

from ._kronecker import kron_divexact, kron_mul

# Below this operand length schoolbook beats packed big-int multiplication.
KRONECKER_CUTOFF = 16


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] += x
    if len(a) == len(b):
        return trim(r)
    return tuple(r)


def sub(a, b):
    if len(a) >= len(b):
        r = list(a)
        for i, x in enumerate(b):
            r[i] -= x
        if len(a) == len(b):
            return trim(r)
        return tuple(r)
    r = [-x for x in b]
    for i, x in enumerate(a):
        r[i] += x
    return tuple(r)


def neg(a):
    return tuple(-x for x in a)


def scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def mul(a, b):
    la, lb = len(a), len(b)
    if not la or not lb:
        return ()
    if la < lb:
        a, b, la, lb = b, a, lb, la
    if lb == 1:
        c = b[0]
        return tuple(x * c for x in a)
    if lb >= KRONECKER_CUTOFF:
        return kron_mul(a, b)
    r = [0] * (la + lb - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                r[i + j] += x * y
    return tuple(r)


def divexact(a, b):
    """Quotient ``a / b`` over Z[t]; ArithmeticError unless ``b`` divides ``a``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(b) == 1:
        c = b[0]
        q = []
        for x in a:
            y, r = divmod(x, c)
            if r:
                raise ArithmeticError("inexact division")
            q.append(y)
        return tuple(q)
    if len(b) >= KRONECKER_CUTOFF and len(a) - len(b) >= KRONECKER_CUTOFF:
        return kron_divexact(a, b, _school_divexact)
    return _school_divexact(a, b)


def _school_divexact(a, b):
    la, lb = len(a), len(b)
    if la < lb:
        raise ArithmeticError("inexact division")
    r = list(a)
    lc = b[-1]
    m = la - lb + 1
    q = [0] * m
    for k in range(m - 1, -1, -1):
        c, rem = divmod(r[k + lb - 1], lc)
        if rem:
            raise ArithmeticError("inexact division")
        q[k] = c
        if c:
            for i in range(lb - 1):
                r[k + i] -= c * b[i]
    for i in range(lb - 1):
        if r[i]:
            raise ArithmeticError("inexact division")
    return tuple(q)


def prem(a, b):
    """Pseudo-remainder: ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    la, lb = len(a), len(b)
    if not lb:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return tuple(a)
    r = list(a)
    lc = b[-1]
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        for i in range(k + lb - 1):
            r[i] *= lc
        for i in range(lb - 1):
            r[k + i] -= c * b[i]
        r[k + lb - 1] = 0
    return trim(r[: lb - 1])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
