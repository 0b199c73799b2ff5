"""Dense operators on Lambda^n and fraction-free elimination over Z[t].

Matrix convention: ``entries[i][j]`` is the coefficient of basis element ``i``
in the image of basis element ``j`` (columns are images), both indexed by
:func:`~mckay.partitions.partitions_of` in canonical order.
"""

from fractions import Fraction

from . import zpoly
from .characters import character_table
from .partitions import age, partitions_of, stats
from .symfunc import SymFunc


class SingularMatrix(ArithmeticError):
    pass


class KernelDimension(ArithmeticError):
    pass


def _matmul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = a[i]
        out.append(
            tuple(sum((row[l] * b[l][j] for l in range(k) if row[l] and b[l][j]), 0) for j in range(m))
        )
    return tuple(out)


class LinOperator:
    __slots__ = ("n", "basis", "entries")

    def __init__(self, n, basis, entries):
        size = len(partitions_of(n))
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != size or any(len(r) != size for r in entries):
            raise ValueError(f"expected a {size}x{size} matrix for n={n}")
        self.n = n
        self.basis = basis
        self.entries = entries

    @property
    def size(self):
        return len(self.entries)

    @classmethod
    def identity(cls, n, basis="p", one=1):
        size = len(partitions_of(n))
        return cls(n, basis, [[one if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zero(cls, n, basis="p"):
        size = len(partitions_of(n))
        return cls(n, basis, [[0] * size for _ in range(size)])

    @classmethod
    def from_images(cls, n, basis, image):
        """Build from ``image(lam) -> SymFunc`` on basis elements."""
        parts = partitions_of(n)
        cols = [image(lam).to_basis(basis).vector() for lam in parts]
        return cls(n, basis, [[cols[j][i] for j in range(len(parts))] for i in range(len(parts))])

    @classmethod
    def diagonal(cls, n, basis, diag):
        size = len(diag)
        return cls(n, basis, [[diag[i] if i == j else 0 for j in range(size)] for i in range(size)])

    def __call__(self, f):
        if f.n != self.n:
            raise ValueError("weight mismatch")
        v = f.to_basis(self.basis).vector()
        out = [sum((e * x for e, x in zip(row, v) if e and x), 0) for row in self.entries]
        return SymFunc.from_vector(self.n, self.basis, out)

    def column(self, j):
        return SymFunc.from_vector(self.n, self.basis, [row[j] for row in self.entries])

    def __matmul__(self, other):
        if self.n != other.n or self.basis != other.basis:
            other = other.to_basis(self.basis)
        return LinOperator(self.n, self.basis, _matmul(self.entries, other.entries))

    def __add__(self, other):
        other = other.to_basis(self.basis)
        return LinOperator(
            self.n,
            self.basis,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return self.map(lambda x: -x)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return self.map(lambda x: x * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinOperator):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        return all(a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    __hash__ = None

    def map(self, fn):
        return LinOperator(self.n, self.basis, [[fn(x) for x in r] for r in self.entries])

    def transpose(self):
        return LinOperator(self.n, self.basis, list(zip(*self.entries)))

    def to_basis(self, target):
        if target == self.basis:
            return self
        to_s = p_to_s_matrix(self.n)
        to_p = s_to_p_matrix(self.n)
        if target == "s":
            ent = _matmul(_matmul(to_s, self.entries), to_p)
        else:
            ent = _matmul(_matmul(to_p, self.entries), to_s)
        return LinOperator(self.n, target, ent)

    def is_zero(self):
        return all(not x for r in self.entries for x in r)

    def __repr__(self):
        return f"LinOperator(n={self.n}, basis={self.basis!r}, entries={self.entries!r})"


def p_to_s_matrix(n):
    """Columns are ``p_mu`` written in the Schur basis."""
    t = character_table(n)
    return t.chi


def s_to_p_matrix(n):
    t = character_table(n)
    parts = t.partitions
    return tuple(
        tuple(Fraction(t.chi[j][i]) / stats(parts[i]).z for j in range(len(parts)))
        for i in range(len(parts))
    )


def graded_component(op, k):
    """Part of a p-basis operator raising age by exactly ``k``."""
    op = op.to_basis("p")
    parts = partitions_of(op.n)
    ages = [age(lam) for lam in parts]
    return LinOperator(
        op.n,
        "p",
        [
            [x if ages[i] - ages[j] == k else 0 for j, x in enumerate(row)]
            for i, row in enumerate(op.entries)
        ],
    )


# -- fraction-free elimination over Z[t] ------------------------------------


def _pick_pivot(m, r, c):
    best = None
    for i in range(r, len(m)):
        e = m[i][c]
        if e and (best is None or len(e) < len(m[best][c])):
            best = i
    return best


def ff_gauss_jordan(m, pivot_cols=None):
    """Fraction-free Gauss-Jordan elimination (Bareiss-style exact divisions).

    ``m`` is a list of rows of integer polynomials (tuples).  Returns
    ``(rows, pivots, d)``: every pivot row has the common value ``d`` on its
    pivot column and zeros in the other pivot columns.
    """
    m = [list(r) for r in m]
    ncols = len(m[0])
    pivot_cols = ncols if pivot_cols is None else pivot_cols
    prev = (1,)
    r = 0
    pivots = []
    mul, sub, divexact = zpoly.mul, zpoly.sub, zpoly.divexact
    for c in range(pivot_cols):
        p = _pick_pivot(m, r, c)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        piv = prow[c]
        for i in range(len(m)):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            for j in range(ncols):
                if j == c:
                    continue
                x = mul(piv, row[j]) if row[j] else ()
                if a and prow[j]:
                    x = sub(x, mul(a, prow[j]))
                row[j] = divexact(x, prev) if x else ()
            row[c] = ()
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots, prev


def kernel_vector(m):
    """Spanning vector of a one-dimensional right kernel, as integer polynomials."""
    size = len(m[0])
    rows, pivots, d = ff_gauss_jordan(m)
    free = [c for c in range(size) if c not in pivots]
    if len(free) != 1:
        raise KernelDimension(f"kernel has dimension {len(free)}, expected 1")
    f = free[0]
    x = [()] * size
    x[f] = d
    for k, c in enumerate(pivots):
        x[c] = zpoly.neg(rows[k][f])
    return x


def scaled_inverse(m):
    """``(R, d)`` with ``R = d * m^{-1}`` for a square matrix of integer polynomials."""
    size = len(m)
    aug = [list(r) + [(1,) if i == j else () for j in range(size)] for i, r in enumerate(m)]
    rows, pivots, d = ff_gauss_jordan(aug, pivot_cols=size)
    if len(pivots) != size:
        raise SingularMatrix("matrix is singular")
    return [r[size:] for r in rows], d
