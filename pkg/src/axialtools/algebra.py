"""Commutative non-associative algebras given by structure constants."""

from __future__ import annotations

from fractions import Fraction

from .exactnum import (Matrix, as_scalar, field_of, kernel_basis, rank,
                       row_space, solve, vec_add, vec_scale)

__all__ = [
    "Algebra", "SubspaceBasis", "multiply", "adjoint_matrix", "eigenspace",
    "identity_of", "subalgebra_generated", "direct_sum", "is_homomorphism",
]


class Algebra:
    """A finite-dimensional commutative algebra.

    ``products`` maps index pairs ``(i, j)`` to the coordinate vector of
    ``b_i * b_j``.  Only one of ``(i, j)`` and ``(j, i)`` needs to be given;
    supplying both with different values is an error.  Missing pairs are an
    error unless ``sparse`` is true, in which case they default to zero.
    """

    def __init__(self, products, basis_names=None, dim=None, form=None,
                 field=None, name=None, sparse=False):
        if dim is None:
            dim = len(basis_names) if basis_names is not None else \
                1 + max((max(k) for k in products), default=-1)
        if basis_names is None:
            basis_names = [f"b{i}" for i in range(dim)]
        basis_names = tuple(basis_names)
        if len(basis_names) != dim:
            raise ValueError("number of basis names does not match dimension")
        if len(set(basis_names)) != dim:
            raise ValueError("basis names are not unique")
        zero = (Fraction(0),) * dim
        table = [[None] * dim for _ in range(dim)]
        for (i, j), v in products.items():
            v = tuple(as_scalar(x) for x in v)
            if len(v) != dim:
                raise ValueError(f"product ({i}, {j}) has length {len(v)}, expected {dim}")
            if table[i][j] is not None and table[i][j] != v:
                raise ValueError(f"conflicting values for product ({i}, {j})")
            table[i][j] = table[j][i] = v
        for i in range(dim):
            for j in range(i, dim):
                if table[i][j] is None:
                    if not sparse:
                        raise ValueError(f"product ({basis_names[i]}, {basis_names[j]}) undefined")
                    table[i][j] = table[j][i] = zero
        self.dim = dim
        self.basis_names = basis_names
        self.table = tuple(tuple(r) for r in table)
        self.field = field if field is not None else field_of(
            x for r in self.table for v in r for x in v)
        self.form = form
        self.name = name

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Algebra{label} dim={self.dim}>"

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.basis_names == other.basis_names and self.table == other.table
                and self.form == other.form)

    def __hash__(self):
        return hash((self.basis_names, self.table))

    def product(self, i, j):
        return self.table[i][j]

    def zero(self):
        return (Fraction(0),) * self.dim

    def basis_vector(self, i):
        if isinstance(i, str):
            i = self.index(i)
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def index(self, name):
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"no basis element named {name!r}") from None

    def vector(self, coeffs):
        """Build a vector from ``{name: coefficient}`` or a coordinate sequence."""
        if isinstance(coeffs, dict):
            v = [Fraction(0)] * self.dim
            for k, c in coeffs.items():
                v[self.index(k) if isinstance(k, str) else k] += as_scalar(c)
            return tuple(v)
        v = tuple(as_scalar(c) for c in coeffs)
        self._check(v)
        return v

    def _check(self, v):
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in algebra of dimension {self.dim}")

    def multiply(self, u, v):
        return multiply(self, u, v)

    def with_form(self, form):
        alg = object.__new__(Algebra)
        alg.__dict__.update(self.__dict__)
        alg.form = form
        return alg

    def over(self, field):
        """The same structure constants viewed over a quadratic extension."""
        products = {(i, j): tuple(field(x) for x in self.table[i][j])
                    for i in range(self.dim) for j in range(i, self.dim)}
        form = None
        if self.form is not None:
            from .forms import BilinearForm
            form = BilinearForm(Matrix([[field(x) for x in r] for r in self.form.gram.rows]))
        return Algebra(products, self.basis_names, form=form, field=field, name=self.name)

    def format_vector(self, v):
        from .exactnum import format_scalar
        terms = []
        for c, n in zip(v, self.basis_names):
            if not c:
                continue
            text = n if c == 1 else f"-{n}" if c == -1 else f"{format_scalar(c)}*{n}"
            if terms:
                text = f"- {text[1:]}" if text.startswith("-") else f"+ {text}"
            terms.append(text)
        return " ".join(terms) if terms else "0"


def multiply(alg, u, v):
    """Bilinear product of two coordinate vectors."""
    alg._check(u)
    alg._check(v)
    dim = alg.dim
    out = [Fraction(0)] * dim
    nu = [(i, x) for i, x in enumerate(u) if x]
    nv = [(j, y) for j, y in enumerate(v) if y]
    table = alg.table
    for i, x in nu:
        row = table[i]
        for j, y in nv:
            c = x * y
            p = row[j]
            for k in range(dim):
                if p[k]:
                    out[k] = out[k] + c * p[k]
    return tuple(out)


def adjoint_matrix(alg, a):
    """Matrix of ``u -> a*u``; column ``j`` is ``a * b_j``."""
    alg._check(a)
    return Matrix.from_columns([multiply(alg, a, b) for b in alg.basis()], alg.dim)


class SubspaceBasis:
    """A subspace of an algebra, stored as a canonical echelon basis."""

    def __init__(self, algebra, vectors=()):
        self.algebra = algebra
        self.vectors = tuple(row_space(vectors, algebra.dim))
        self._pivots = tuple(next(i for i, x in enumerate(v) if x) for v in self.vectors)

    @classmethod
    def full(cls, algebra):
        return cls(algebra, algebra.basis())

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, ())

    @property
    def dim(self):
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self):
        return f"<SubspaceBasis dim={self.dim} of {self.algebra!r}>"

    def coordinates(self, v):
        """Coordinates of ``v`` in this basis, or None if ``v`` is outside."""
        v = tuple(v)
        coords = tuple(v[p] for p in self._pivots)
        recon = [Fraction(0)] * self.algebra.dim
        for c, b in zip(coords, self.vectors):
            if c:
                recon = vec_add(recon, vec_scale(c, b))
        if tuple(recon) != v:
            return None
        return coords

    def __contains__(self, v):
        return self.coordinates(v) is not None

    def contains_space(self, other):
        return all(v in self for v in other)

    def vector(self, coords):
        out = self.algebra.zero()
        for c, b in zip(coords, self.vectors):
            if c:
                out = vec_add(out, vec_scale(c, b))
        return out

    def matrix(self):
        """Algebra-coordinates of the basis as columns (dim x k)."""
        return Matrix.from_columns(self.vectors, self.algebra.dim)

    def __add__(self, other):
        return SubspaceBasis(self.algebra, self.vectors + other.vectors)

    def intersection(self, other):
        if not self.vectors or not other.vectors:
            return SubspaceBasis.zero(self.algebra)
        # x in self, y in other with sum x_i s_i - sum y_j o_j = 0
        cols = list(self.vectors) + [vec_scale(-1, o) for o in other.vectors]
        ker = kernel_basis(Matrix.from_columns(cols, self.algebra.dim))
        k = len(self.vectors)
        return SubspaceBasis(self.algebra, [self.vector(z[:k]) for z in ker])

    def is_subalgebra(self):
        alg = self.algebra
        return all(multiply(alg, u, v) in self
                   for i, u in enumerate(self.vectors) for v in self.vectors[i:])

    def as_algebra(self, names=None, check=True):
        """Re-express the structure constants in this basis.

        The subspace must be closed under multiplication.  A form attached to
        the parent algebra is restricted.
        """
        alg = self.algebra
        k = self.dim
        products = {}
        for i in range(k):
            for j in range(i, k):
                c = self.coordinates(multiply(alg, self.vectors[i], self.vectors[j]))
                if c is None:
                    raise ValueError("subspace is not closed under multiplication")
                products[(i, j)] = c
        form = None
        if alg.form is not None:
            form = alg.form.restrict(self)
        if names is None:
            names = [f"s{i}" for i in range(k)]
        return Algebra(products, names, dim=k, form=form, field=alg.field)


def eigenspace(alg, a, lam):
    """Kernel of ``ad_a - lam*I`` as a :class:`SubspaceBasis`."""
    ad = adjoint_matrix(alg, a)
    shifted = ad - Matrix.identity(alg.dim).scale(lam)
    return SubspaceBasis(alg, kernel_basis(shifted))


def identity_of(alg):
    """The identity element, or None when the algebra is not unital."""
    if alg.dim == 0:
        return ()
    rows, rhs = [], []
    for i in range(alg.dim):
        # e * b_i = sum_k e_k (b_k * b_i) = b_i
        for r in range(alg.dim):
            rows.append([alg.table[k][i][r] for k in range(alg.dim)])
            rhs.append(Fraction(1) if r == i else Fraction(0))
    return solve(Matrix(rows, alg.dim), rhs)


def subalgebra_generated(alg, gens):
    """Smallest product-closed subspace containing ``gens``.

    Returns ``(subspace, degree)`` where ``degree`` is the least ``k`` such that
    products of at most ``k`` generators already span a closed subspace.
    """
    gens = [tuple(g) for g in gens]
    if not any(any(x for x in g) for g in gens):
        return SubspaceBasis.zero(alg), 0
    # layers[k] spans all products with exactly k+1 factors
    layers = [SubspaceBasis(alg, gens)]
    total = layers[0]
    degree = 1
    while True:
        if total.is_subalgebra():
            return total, degree
        degree += 1
        vectors = []
        for i in range(1, degree // 2 + 1):
            left, right = layers[i - 1], layers[degree - i - 1]
            for u in left:
                for v in right:
                    vectors.append(multiply(alg, u, v))
        layer = SubspaceBasis(alg, vectors)
        layers.append(layer)
        total = total + layer


def direct_sum(a, b):
    """Block-diagonal direct sum; cross products vanish."""
    if b.dim == 0:
        return a
    if a.dim == 0:
        return b
    if a.field != b.field:
        raise TypeError("direct sum of algebras over different fields")
    n, m = a.dim, b.dim
    dim = n + m
    zero = Fraction(0)
    products = {}
    for i in range(n):
        for j in range(i, n):
            products[(i, j)] = a.table[i][j] + (zero,) * m
    for i in range(m):
        for j in range(i, m):
            products[(n + i, n + j)] = (zero,) * n + b.table[i][j]
    for i in range(n):
        for j in range(m):
            products[(i, n + j)] = (zero,) * dim
    names = list(a.basis_names)
    for name in b.basis_names:
        while name in names:
            name += "'"
        names.append(name)
    form = None
    if a.form is not None and b.form is not None:
        from .forms import BilinearForm
        rows = [r + (zero,) * m for r in a.form.gram.rows]
        rows += [(zero,) * n + r for r in b.form.gram.rows]
        form = BilinearForm(Matrix(rows, dim))
    name = f"{a.name}+{b.name}" if a.name and b.name else None
    return Algebra(products, names, dim=dim, form=form, field=a.field or b.field, name=name)


def is_homomorphism(src, dst, m):
    """True iff ``m`` (columns = images of ``src`` basis) respects products."""
    if m.shape != (dst.dim, src.dim):
        raise ValueError(f"matrix shape {m.shape} does not match {dst.dim}x{src.dim}")
    images = m.columns()
    for i in range(src.dim):
        for j in range(i, src.dim):
            if m @ src.table[i][j] != multiply(dst, images[i], images[j]):
                return False
    return True


def is_isomorphism(src, dst, m):
    return src.dim == dst.dim and rank(m) == src.dim and is_homomorphism(src, dst, m)
