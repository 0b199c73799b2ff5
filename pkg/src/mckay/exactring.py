"""Exact coefficient rings: Q, Q[t], Q(t) and truncated power series over Q.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` keeps an integer
numerator polynomial over a positive common denominator so that the heavy
arithmetic runs on integer kernels (see :mod:`mckay.zpoly`).
:class:`RationalFunction` is reduced after every operation and has a monic
denominator.
"""

from fractions import Fraction
from math import gcd as igcd

from . import zpoly

Rat = Fraction

__all__ = [
    "Rat",
    "Poly",
    "RationalFunction",
    "TruncSeries",
    "PoleError",
    "poly_gcd",
    "rf_eval",
    "series_divide",
    "rat_str",
    "parse_rat",
    "as_rf",
]


class PoleError(ArithmeticError):
    """Evaluation point is a pole of the (reduced) rational function."""


def rat_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s):
    return Fraction(str(s).replace("−", "-"))


def _lcm(a, b):
    return a // igcd(a, b) * b


class Poly:
    """Univariate polynomial in ``t`` over Q.

    >>> p = Poly([Fraction(1, 2), 0, 3])
    >>> p.coeffs
    (Fraction(1, 2), Fraction(0, 1), Fraction(3, 1))
    >>> str(p)
    '3*t^2 + 1/2'
    """

    __slots__ = ("_c", "_d")

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) if not isinstance(c, int) else c for c in coeffs]
        d = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                d = _lcm(d, c.denominator)
        num = [c * d if isinstance(c, int) else c.numerator * (d // c.denominator) for c in coeffs]
        self._set(zpoly.trim(num), d)

    def _set(self, c, d):
        if not c:
            c, d = (), 1
        elif d != 1:
            g = igcd(zpoly.content(c), d)
            if g != 1:
                c = tuple(x // g for x in c)
                d //= g
        self._c = c
        self._d = d

    @classmethod
    def from_int(cls, c, d=1):
        """Build from an integer coefficient tuple ``c`` over denominator ``d``."""
        p = cls.__new__(cls)
        if d < 0:
            c, d = zpoly.neg(c), -d
        p._set(zpoly.trim(c), d)
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def t(cls):
        return cls.monomial(1)

    @property
    def int_coeffs(self):
        """``(c, d)`` with integer tuple ``c`` such that self = c(t) / d."""
        return self._c, self._d

    @property
    def coeffs(self):
        return tuple(Fraction(x, self._d) for x in self._c)

    @property
    def degree(self):
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    @property
    def lc(self):
        return Fraction(self._c[-1], self._d) if self._c else Fraction(0)

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return len(self._c) <= 1

    def is_monic(self):
        return bool(self._c) and self._c[-1] == self._d

    def __bool__(self):
        return bool(self._c)

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self.lc)
        return hash((self._c, self._d))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return len(self._c) <= 1 and self.lc == other
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __repr__(self):
        return f"Poly({[rat_str(c) for c in self.coeffs]})"

    def __str__(self):
        return poly_str(self)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.from_int((other,))
        if isinstance(other, Fraction):
            return Poly.from_int((other.numerator,), other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Poly.from_int(zpoly.add(self._c, o._c), self._d)
        return Poly.from_int(
            zpoly.add(zpoly.scale(self._c, o._d), zpoly.scale(o._c, self._d)), self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly.from_int(zpoly.neg(self._c), self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly.from_int(zpoly.scale(self._c, other), self._d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Poly.from_int(zpoly.mul(self._c, o._c), self._d * o._d)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = Poly.from_int((1,))
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                raise ZeroDivisionError
            return Poly.from_int(zpoly.scale(self._c, other.denominator), self._d * other.numerator)
        if isinstance(other, (Poly, RationalFunction)):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Poly([other]), self)
        return NotImplemented

    def exact_div(self, other):
        """Quotient in Q[t]; ArithmeticError if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._c:
            return self
        ca, cb = zpoly.content(self._c), zpoly.content(other._c)
        q = zpoly.divexact(
            tuple(x // ca for x in self._c), tuple(x // cb for x in other._c)
        )
        # self/other = (ca/da) / (cb/db) * q
        num = ca * other._d
        den = cb * self._d
        return Poly.from_int(zpoly.scale(q, num), den)

    def divmod(self, other):
        """Euclidean division over Q."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        if len(a) < len(b):
            return Poly(), self
        lc = b[-1]
        q = [Fraction(0)] * (len(a) - len(b) + 1)
        for k in range(len(a) - len(b), -1, -1):
            c = a[k + len(b) - 1] / lc
            q[k] = c
            if c:
                for i, y in enumerate(b):
                    a[k + i] -= c * y
        return Poly(q), Poly(a[: len(b) - 1])

    def monic(self):
        if not self._c:
            return self
        return Poly.from_int(self._c, self._c[-1]) if self._c[-1] != 1 or self._d != 1 else self

    def __call__(self, x):
        if isinstance(x, int):
            return Fraction(zpoly.evaluate(self._c, x), self._d)
        x = Fraction(x)
        n, d = x.numerator, x.denominator
        # homogenised Horner keeps everything integral
        acc = 0
        dp = 1
        for c in reversed(self._c):
            acc = acc * n + c * dp
            dp *= d
        deg = max(len(self._c) - 1, 0)
        return Fraction(acc, self._d * d**deg) if self._c else Fraction(0)

    def substitute_inverse(self):
        """Return ``(r, k)`` with ``self(1/t) = r(t) / t**k``."""
        return Poly.from_int(tuple(reversed(self._c)), self._d), max(self.degree, 0)

    def derivative(self):
        return Poly.from_int(tuple(i * c for i, c in enumerate(self._c))[1:], self._d)


def poly_str(p, var="t"):
    if not p:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = rat_str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{rat_str(a)}*{mono}"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a, b):
    """Monic gcd in Q[t]; ``gcd(a, 0) = monic(a)`` and ``gcd(0, 0) = 0``."""
    if not a and not b:
        return Poly()
    g = zpoly.gcd(a.int_coeffs[0], b.int_coeffs[0])
    return Poly.from_int(g, g[-1])


class RationalFunction:
    """Reduced fraction ``num / den`` in Q(t) with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced=False):
        num = _as_poly(num)
        if den is None:
            den = Poly.from_int((1,))
        elif isinstance(den, RationalFunction):
            num, den = num * den.den, den.num
        else:
            den = _as_poly(den)
        if isinstance(num, RationalFunction):
            num, den = num.num, num.den * den
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_int_pair(cls, num, den):
        """From integer coefficient tuples, reducing once."""
        return cls(Poly.from_int(num), Poly.from_int(den))

    def is_polynomial(self):
        return self.den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.num)
        return hash((self.num, self.den))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.is_polynomial():
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, int, Fraction)):
            return RationalFunction(_as_poly(other), reduced=True)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_polynomial() and not o.num.is_zero() and o.num.is_constant():
            return RationalFunction(self.num * o.num.lc, self.den, reduced=True)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.den**-k, self.num**-k)
        return RationalFunction(self.num**k, self.den**k, reduced=True)

    def __call__(self, x):
        return rf_eval(self, x)


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return Poly.from_int((x,))
    if isinstance(x, Fraction):
        return Poly.from_int((x.numerator,), x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to Poly")


def as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x), reduced=True)


def _reduce(num, den):
    if not num:
        return Poly(), Poly.from_int((1,))
    if den.is_constant():
        return num / den.lc, Poly.from_int((1,))
    nc, _ = num.int_coeffs
    dc, _ = den.int_coeffs
    g = zpoly.gcd(nc, dc)
    if len(g) > 1:
        gp = Poly.from_int(g)
        num = num.exact_div(gp)
        den = den.exact_div(gp)
    lc = den.lc
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def rf_eval(r, x):
    """Value of a reduced rational function at the rational point ``x``."""
    r = as_rf(r)
    d = r.den(x)
    if not d:
        raise PoleError(f"pole at t={rat_str(x)}")
    return r.num(x) / d


class TruncSeries:
    """Power series over Q known through ``t**order`` inclusive."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        c = [Fraction(x) for x in list(coeffs)[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def exp(cls, a, order):
        """Series of ``exp(a*t)``."""
        a = Fraction(a)
        out = [Fraction(1)]
        for k in range(1, order + 1):
            out.append(out[-1] * a / k)
        return cls(out, order)

    @classmethod
    def one_minus_exp_over_t(cls, h, order):
        """Series of ``(1 - exp(h*t)) / t``, a unit when ``h != 0``."""
        e = cls.exp(h, order + 1).coeffs
        return cls([-x for x in e[1:]], order)

    def __getitem__(self, k):
        if k > self.order:
            raise IndexError(f"coefficient t^{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        return f"TruncSeries({[rat_str(c) for c in self.coeffs]}, order={self.order})"

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncSeries(
            [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)], n
        )

    __rmul__ = __mul__


def series_divide(a, b, valuation_shift=0):
    """``a / b`` where ``b = t**valuation_shift * (unit)``.

    The first ``valuation_shift`` coefficients of ``a`` must vanish too; the
    result is known to order ``min(a.order, b.order) - valuation_shift``.
    """
    s = valuation_shift
    n = min(a.order, b.order) - s
    if n < 0:
        raise ZeroDivisionError("truncation order exhausted by the valuation shift")
    if all(not c for c in b.coeffs):
        raise ZeroDivisionError("division by a series that vanishes to truncation order")
    if any(b.coeffs[:s]) or not b.coeffs[s]:
        raise ZeroDivisionError(f"divisor does not have valuation exactly {s}")
    if any(a.coeffs[:s]):
        raise ArithmeticError("quotient is not a power series")
    num = a.coeffs[s:]
    den = b.coeffs[s:]
    inv0 = 1 / den[0]
    q = []
    for k in range(n + 1):
        acc = num[k] - sum(q[i] * den[k - i] for i in range(k))
        q.append(acc * inv0)
    return TruncSeries(q, n)
