"""Kronecker substitution: integer polynomials packed into single big ints.

CPython multiplies and divides large ints in C (Karatsuba for products), so
packing a polynomial into one integer beats any interpreted coefficient loop
once operands have more than a dozen or so terms.
"""

from functools import lru_cache

try:  # GMP has subquadratic division; CPython's long division is quadratic
    from gmpy2 import f_divmod as _gmp_divmod
    from gmpy2 import mpz as _mpz
except ImportError:
    _mpz = None

# packed operands above this many bits go through GMP when it is available
GMP_THRESHOLD = 4096


def _bigmul(x, y):
    if _mpz is not None and x.bit_length() > GMP_THRESHOLD and y.bit_length() > GMP_THRESHOLD:
        return int(_mpz(x) * _mpz(y))
    return x * y


def _bigdivmod(x, y):
    if _mpz is not None and x.bit_length() > GMP_THRESHOLD:
        q, r = _gmp_divmod(_mpz(x), _mpz(y))
        return int(q), int(r)
    return divmod(x, y)


def _maxbits(c):
    return max(max(c), -min(c)).bit_length()


def _slot(bits):
    # slot width in bits, byte aligned, one spare bit for the sign offset
    return ((bits + 2 + 7) // 8) * 8


@lru_cache(maxsize=256)
def _offset(m, k):
    nb = k // 8
    return int.from_bytes((1 << (k - 1)).to_bytes(nb, "little") * m, "little")


def pack(c, k):
    nb = k // 8
    off = 1 << (k - 1)
    data = b"".join((x + off).to_bytes(nb, "little") for x in c)
    return int.from_bytes(data, "little") - _offset(len(c), k)


def unpack(v, k, m):
    """Inverse of :func:`pack` for ``m`` slots; OverflowError if a digit does not fit."""
    nb = k // 8
    off = 1 << (k - 1)
    data = (v + _offset(m, k)).to_bytes(m * nb, "little")
    out = [int.from_bytes(data[i : i + nb], "little") - off for i in range(0, m * nb, nb)]
    n = len(out)
    while n and not out[n - 1]:
        n -= 1
    return tuple(out[:n])


def kron_mul(a, b):
    k = _slot(_maxbits(a) + _maxbits(b) + min(len(a), len(b)).bit_length())
    return unpack(_bigmul(pack(a, k), pack(b, k)), k, len(a) + len(b) - 1)


def kron_divexact(a, b, fallback):
    """Exact quotient ``a / b`` in Z[t] via one big-int division.

    The slot width is first guessed from the dividend.  A zero big-int
    remainder only proves divisibility once the unpacked quotient is known to
    be small enough that ``cand * b`` has no carries between slots; then
    packing is injective and ``pack(cand) * pack(b) = pack(a)`` forces
    ``cand * b = a``.  Otherwise ``fallback`` decides.
    """
    m = len(a) - len(b) + 1
    k = _slot(max(_maxbits(a), _maxbits(b)) + m.bit_length() + 8)
    q, r = _bigdivmod(pack(a, k), pack(b, k))
    if r:
        raise ArithmeticError("inexact division")
    try:
        cand = unpack(q, k, m)
    except OverflowError:
        return fallback(a, b)
    if len(cand) == m and _maxbits(cand) + _maxbits(b) + min(m, len(b)).bit_length() + 2 <= k:
        return cand
    return fallback(a, b)
