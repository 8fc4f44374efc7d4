"""Frobenius forms: solving for them, lengths, complements, Gram matrices."""

from __future__ import annotations

from fractions import Fraction

from .algebra import SubspaceBasis
from .exactnum import Matrix, dot, kernel_basis, rank

__all__ = [
    "BilinearForm", "DegenerateFormError", "frobenius_space", "is_frobenius",
    "length", "orthogonal_complement", "gram_from_shape", "ns_pair_value",
]


class DegenerateFormError(ValueError):
    """The form restricted to a subspace is degenerate."""


class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix on the algebra basis."""

    def __init__(self, gram):
        gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if not gram.is_symmetric():
            raise ValueError("Gram matrix is not symmetric")
        self.gram = gram

    @property
    def dim(self):
        return self.gram.nrows

    def __call__(self, u, v):
        return dot(u, self.gram @ v)

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearForm({self.gram!r})"

    def restrict(self, sub):
        vs = list(sub)
        return BilinearForm(Matrix([[self(u, v) for v in vs] for u in vs], len(vs)))

    def scale(self, c):
        return BilinearForm(self.gram.scale(c))


def _sym_index(n):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {}
    for k, (i, j) in enumerate(pairs):
        index[(i, j)] = index[(j, i)] = k
    return pairs, index


def frobenius_space(alg):
    """Basis of all symmetric forms with ``(b_i b_j, b_k) = (b_i, b_j b_k)``."""
    n = alg.dim
    pairs, index = _sym_index(n)
    rows = []
    seen = set()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [Fraction(0)] * len(pairs)
                left = alg.table[i][j]
                right = alg.table[j][k]
                for l in range(n):
                    if left[l]:
                        row[index[(l, k)]] += left[l]
                    if right[l]:
                        row[index[(i, l)]] -= right[l]
                key = tuple(row)
                if any(row) and key not in seen:
                    seen.add(key)
                    rows.append(row)
    if not rows:
        sols = [tuple(Fraction(int(a == b)) for b in range(len(pairs)))
                for a in range(len(pairs))]
    else:
        sols = kernel_basis(Matrix(rows, len(pairs)))
    forms = []
    for s in sols:
        g = [[s[index[(i, j)]] for j in range(n)] for i in range(n)]
        forms.append(BilinearForm(Matrix(g, n)))
    return forms


def is_frobenius(alg, form):
    """Check the associativity identity on every basis triple."""
    g = form.gram
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            gij = g @ alg.table[i][j]
            for k in range(n):
                # (b_i b_j, b_k) == (b_i, b_j b_k)
                if gij[k] != dot(g.rows[i], alg.table[j][k]):
                    return False
    return True


def length(form, v):
    """The (square) length ``(v, v)``."""
    return form(v, v)


def orthogonal_complement(form, sub):
    """All vectors orthogonal to ``sub``; the restriction must be non-degenerate."""
    k = sub.dim
    if k and rank(form.restrict(sub).gram) < k:
        raise DegenerateFormError("form is degenerate on the subspace")
    alg = sub.algebra
    if k == 0:
        return SubspaceBasis.full(alg)
    rows = [form.gram @ v for v in sub]
    return SubspaceBasis(alg, kernel_basis(Matrix(rows, alg.dim)))


_NS_PAIR_VALUES = {}


def ns_pair_value(ns_type):
    """``(a_0, a_1)`` in the Norton-Sakuma algebra of the given type.

    Read off the constructed algebra, so it always agrees with the catalogue.
    """
    if ns_type not in _NS_PAIR_VALUES:
        from .catalog import norton_sakuma
        alg, axes = norton_sakuma(ns_type)
        _NS_PAIR_VALUES[ns_type] = alg.form(axes[0], axes[1])
    return _NS_PAIR_VALUES[ns_type]


def gram_from_shape(pair_types, class_size):
    """Gram matrix of a set of unit-length axes with known pairwise types.

    ``pair_types`` maps each unordered index pair ``(i, j)``, ``i < j``, to a
    Norton-Sakuma type name.
    """
    one, zero = Fraction(1), Fraction(0)
    rows = [[one if i == j else zero for j in range(class_size)]
            for i in range(class_size)]
    for i in range(class_size):
        for j in range(i + 1, class_size):
            t = pair_types.get((i, j))
            if t is None:
                t = pair_types.get((j, i))
            if t is None:
                raise KeyError(f"pair ({i}, {j}) has no assigned type")
            rows[i][j] = rows[j][i] = ns_pair_value(t)
    return Matrix(rows, class_size)
