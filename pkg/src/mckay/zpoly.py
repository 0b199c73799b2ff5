"""Integer polynomial kernels with backend selection.

The compiled extension ``_zpoly_c`` is used when it was built and
``MCKAY_PURE_PYTHON`` is not set; otherwise the pure-Python twin is used.
Both expose the same functions on tuples of ints (constant term first).
"""

import math
import os

from . import _zpoly_py

if os.environ.get("MCKAY_PURE_PYTHON"):
    _impl = _zpoly_py
    BACKEND = "python"
else:
    try:
        from . import _zpoly_c as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _zpoly_py
        BACKEND = "python"

trim = _impl.trim
add = _impl.add
sub = _impl.sub
neg = _impl.neg
scale = _impl.scale
mul = _impl.mul
divexact = _impl.divexact
prem = _impl.prem
evaluate = _impl.evaluate


def content(a):
    """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return tuple(a)
    return tuple(x // g for x in a)


def shift(a, k):
    """Multiply by ``t**k``."""
    if not a or not k:
        return tuple(a)
    return (0,) * k + tuple(a)


def valuation(a):
    for i, x in enumerate(a):
        if x:
            return i
    return None


class HeuristicGCDFailed(Exception):
    pass


def _interpolate(h, x):
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return trim(out)


def _divides(b, a):
    try:
        divexact(a, b)
    except ArithmeticError:
        return False
    return True


def heu_gcd(f, g):
    """GCDHEU of two primitive, non-constant polynomials.

    Evaluates at a large integer, takes the integer gcd and lifts it back by
    balanced base-x digits; a candidate is accepted only after trial division.
    """
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * math.isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff = evaluate(f, x)
        gg = evaluate(g, x)
        if ff and gg:
            h = primitive(_interpolate(math.gcd(ff, gg), x))
            if h and _divides(h, f) and _divides(h, g):
                return h
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    raise HeuristicGCDFailed


def prs_gcd(f, g):
    """Primitive polynomial remainder sequence; slow but unconditional."""
    a, b = primitive(f), primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive(prem(a, b))
    return primitive(a)


def gcd(f, g):
    """Primitive gcd in Z[t] of the primitive parts of ``f`` and ``g``."""
    if not f:
        return primitive(g)
    if not g:
        return primitive(f)
    f, g = primitive(f), primitive(g)
    if len(f) == 1 or len(g) == 1:
        return (1,)
    vf, vg = valuation(f), valuation(g)
    v = min(vf, vg)
    if vf or vg:
        # t-power part split off: cheap and common with Laurent weights
        f, g = f[vf:], g[vg:]
        if len(f) == 1 or len(g) == 1:
            return shift((1,), v)
    if f == g:
        return shift(f, v)
    try:
        h = heu_gcd(f, g)
    except HeuristicGCDFailed:
        h = prs_gcd(f, g)
    return shift(h, v)
