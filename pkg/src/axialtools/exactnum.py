"""Exact scalars and dense linear algebra.

Rationals are plain :class:`fractions.Fraction` values.  A single quadratic
extension ``Q[w]/(w^2 + c1*w + c0)`` is available through
:class:`QuadraticField`; its elements mix freely with ``Fraction`` and ``int``.

All matrices are immutable and row-major.  Vectors are tuples of scalars.
Every basis returned by this module is in reduced row echelon form (pivot
columns ascending, pivots equal to 1), so results are canonical.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from numbers import Rational

__all__ = [
    "Fraction", "QuadraticField", "QuadraticElement", "Matrix",
    "as_scalar", "is_zero", "parse_scalar", "format_scalar",
    "rref", "rank", "kernel_basis", "row_space", "solve", "inverse",
    "determinant", "is_positive_definite", "minimal_polynomial",
    "dot", "vec_add", "vec_sub", "vec_scale", "zero_vector",
]


class QuadraticField:
    """The field ``Q(w)`` with ``w^2 + c1*w + c0 = 0``.

    The defining polynomial must be irreducible over the rationals.
    """

    def __init__(self, c1, c0, name="w"):
        self.c1 = Fraction(c1)
        self.c0 = Fraction(c0)
        self.name = name
        disc = self.c1 * self.c1 - 4 * self.c0
        if _is_rational_square(disc):
            raise ValueError(
                f"x^2 + ({self.c1})x + ({self.c0}) is reducible over Q")

    @property
    def gen(self):
        return QuadraticElement(0, 1, self)

    def __call__(self, a, b=0):
        if isinstance(a, QuadraticElement):
            if a.field != self:
                raise TypeError("element belongs to a different field")
            return a
        return QuadraticElement(a, b, self)

    def __eq__(self, other):
        return (isinstance(other, QuadraticField)
                and (self.c1, self.c0) == (other.c1, other.c0))

    def __hash__(self):
        return hash(("QuadraticField", self.c1, self.c0))

    def __repr__(self):
        return f"QuadraticField({self.c1}, {self.c0})"


def _is_rational_square(q):
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


class QuadraticElement:
    """``a + b*w`` in a :class:`QuadraticField`, stored reduced."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QuadraticElement):
            if other.field != self.field:
                raise TypeError("arithmetic between different quadratic fields")
            return other
        if isinstance(other, (int, Rational)):
            return QuadraticElement(other, 0, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.a, -self.b, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        bd = self.b * o.b
        # w^2 = -c1 w - c0
        return QuadraticElement(self.a * o.a - bd * f.c0,
                                self.a * o.b + self.b * o.a - bd * f.c1, f)

    __rmul__ = __mul__

    def norm(self):
        f = self.field
        return self.a * self.a - self.a * self.b * f.c1 + self.b * self.b * f.c0

    def conjugate(self):
        # the other root is -c1 - w
        return QuadraticElement(self.a - self.b * self.field.c1, -self.b, self.field)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadraticElement(c.a / n, c.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticElement(1, 0, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadraticElement):
            return (self.field == other.field and self.a == other.a
                    and self.b == other.b)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field))

    def __repr__(self):
        return f"QuadraticElement({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


def as_scalar(x):
    """Normalise ints and strings to ``Fraction``; leave field elements alone."""
    if isinstance(x, (Fraction, QuadraticElement)):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Fraction(x)


def is_zero(x):
    return not x


def field_of(values):
    """Return the QuadraticField used by ``values`` or None for Q."""
    field = None
    for x in values:
        if isinstance(x, QuadraticElement):
            if field is None:
                field = x.field
            elif field != x.field:
                raise TypeError("mixed quadratic fields")
    return field


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


def _parse_fraction(text):
    m = _FRACTION_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_scalar(text, field=None):
    """Parse ``"p/q"`` or ``"p/q+r/s*w"`` (the latter needs ``field``)."""
    text = text.strip()
    if "*" not in text:
        value = _parse_fraction(text)
        return field(value) if field is not None else value
    if field is None:
        raise ValueError(f"extension element {text!r} without a quadratic field")
    m = re.match(r"^([+-]?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)\*" + re.escape(field.name) + r"$",
                 text.replace(" ", ""))
    if not m:
        raise ValueError(f"malformed extension element {text!r}")
    return QuadraticElement(_parse_fraction(m.group(1)), _parse_fraction(m.group(2)), field)


def format_scalar(x):
    """Inverse of :func:`parse_scalar`; integers are written without ``/1``."""
    if isinstance(x, QuadraticElement):
        b = x.b
        sign = "-" if b < 0 else "+"
        return f"{_fmt_fraction(x.a)}{sign}{_fmt_fraction(abs(b))}*{x.field.name}"
    return _fmt_fraction(Fraction(x))


def _fmt_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -- vectors ---------------------------------------------------------------

def zero_vector(n):
    return (Fraction(0),) * n


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def dot(u, v):
    # structure constants are sparse, so skipping zeros pays off
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


# -- matrices --------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, ncols):
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n))
                              for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls._raw(((Fraction(0),) * ncols,) * nrows, ncols)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls.zeros(nrows or 0, 0)
        return cls(list(zip(*columns)), len(columns))

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        zero = Fraction(0)
        return cls([[entries[i] if i == j else zero for j in range(n)]
                    for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        if self.nrows == 0:
            return Matrix.zeros(self.ncols, 0)
        return Matrix._raw(tuple(zip(*self.rows)), self.nrows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix._raw(tuple(tuple(dot(r, c) for c in cols) for r in self.rows),
                               other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(dot(r, v) for r in self.rows)

    def __add__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(vec_add(r, s) for r, s in zip(self.rows, other.rows)),
                           self.ncols)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._raw(tuple(vec_sub(r, s) for r, s in zip(self.rows, other.rows)),
                           self.ncols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return Matrix._raw(tuple(vec_scale(c, r) for r in self.rows), self.ncols)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def submatrix(self, rows, cols):
        return Matrix._raw(tuple(tuple(self.rows[i][j] for j in cols) for i in rows),
                           len(cols))

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"


def _as_matrix(m):
    return m if isinstance(m, Matrix) else Matrix(m)


def rref(m):
    """Reduced row echelon form and pivot columns.

    Pivots are chosen as the first nonzero entry in row order.
    """
    m = _as_matrix(m)
    rows = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            for j in range(c, m.ncols):
                if pr[j]:
                    pr[j] = pr[j] * inv
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in range(c, m.ncols):
                        if pr[j]:
                            ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix._raw(tuple(tuple(x) for x in rows[:r]), m.ncols), tuple(pivots)


def _bareiss_rank(int_rows, ncols):
    rows = [r[:] for r in int_rows]
    nrows = len(rows)
    rank = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rank, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            f = ri[c]
            pr = rows[rank]
            for j in range(c + 1, ncols):
                ri[j] = (piv * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(m):
    """Exact rank; rational input goes through fraction-free Bareiss elimination."""
    m = _as_matrix(m)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if field_of(x for r in m.rows for x in r) is None:
        int_rows = []
        for r in m.rows:
            lcm = reduce(math.lcm, (Fraction(x).denominator for x in r), 1)
            int_rows.append([int(x * lcm) for x in r])
        return _bareiss_rank(int_rows, m.ncols)
    return len(rref(m)[1])


def row_space(vectors, ncols=None):
    """Canonical (rref) basis of the span of ``vectors``, as a tuple of tuples."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return ()
    reduced, _ = rref(Matrix(vectors, ncols))
    return reduced.rows


def kernel_basis(m):
    """Canonical basis of the right null space ``{v : m v = 0}``."""
    m = _as_matrix(m)
    reduced, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    zero, one = Fraction(0), Fraction(1)
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -reduced.rows[i][f]
        basis.append(tuple(v))
    return list(row_space(basis, m.ncols)) if basis else []


def solve(m, b):
    """One solution ``x`` of ``m x = b`` or ``None`` if inconsistent."""
    m = _as_matrix(m)
    b = tuple(b)
    aug = Matrix([tuple(r) + (bi,) for r, bi in zip(m.rows, b)], m.ncols + 1)
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = reduced.rows[i][m.ncols]
    return tuple(x)


def inverse(m):
    m = _as_matrix(m)
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    eye = Matrix.identity(n)
    aug = Matrix([r + e for r, e in zip(m.rows, eye.rows)], 2 * n)
    reduced, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix._raw(tuple(r[n:] for r in reduced.rows), n)


def determinant(m):
    m = _as_matrix(m)
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                for j in range(c, n):
                    rows[i][j] = rows[i][j] - f * rows[c][j]
    return det


def is_positive_definite(g):
    """Sylvester's criterion on the leading principal minors."""
    g = _as_matrix(g)
    if not g.is_symmetric():
        raise ValueError("matrix is not symmetric")
    if field_of(x for r in g.rows for x in r) is not None:
        raise TypeError("positive definiteness needs rational entries")
    for k in range(1, g.nrows + 1):
        if determinant(g.submatrix(range(k), range(k))) <= 0:
            return False
    return True


def minimal_polynomial(m):
    """Monic minimal polynomial of a square matrix, coefficients low degree first."""
    m = _as_matrix(m)
    n = m.nrows
    # powers of m flattened; first linear dependency gives the polynomial
    powers = [Matrix.identity(n)]
    flat = [sum(powers[0].rows, ())]
    while True:
        nxt = powers[-1] @ m
        v = sum(nxt.rows, ())
        coeffs = solve(Matrix.from_columns(flat), v)
        if coeffs is not None:
            return tuple(-c for c in coeffs) + (Fraction(1),)
        powers.append(nxt)
        flat.append(v)
