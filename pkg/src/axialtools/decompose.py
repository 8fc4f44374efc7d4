"""Joint eigenspace decompositions, fixed subalgebras and extension of automorphisms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import SubspaceBasis, adjoint_matrix, multiply, subalgebra_generated
from .exactnum import Matrix, format_scalar, kernel_basis, rref
from .forms import orthogonal_complement
from .fusion import Automorphism, NotAnAxisError, check_axis, is_automorphism

__all__ = [
    "JointDecomposition", "joint_decomposition", "fixed_subalgebra",
    "ExtensionSpace", "ModuleError", "extension_space", "assemble_automorphism",
    "piece_from_coordinates",
]

log = logging.getLogger(__name__)


class ModuleError(ValueError):
    """A subspace is not closed under multiplication by a subalgebra."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def _restricted_kernel(alg, sub, m):
    """Vectors ``v`` in ``sub`` with ``m v = 0``."""
    if not sub.dim:
        return sub
    image = m @ sub.matrix()
    coords = kernel_basis(image)
    return SubspaceBasis(alg, [sub.vector(c) for c in coords])


@dataclass
class JointDecomposition:
    axes: list
    summands: dict
    residual: SubspaceBasis

    @property
    def zero_key(self):
        return tuple(0 for _ in self.axes)

    def zero_summand(self):
        s = self.summands.get(self.zero_key)
        if s is None:
            alg = self.residual.algebra
            return SubspaceBasis.zero(alg)
        return s

    def dims(self):
        return {k: s.dim for k, s in self.summands.items()}

    def lines(self):
        out = []
        for key, s in self.summands.items():
            out.append("(" + ", ".join(format_scalar(x) for x in key) + f"): {s.dim}")
        if self.residual.dim:
            out.append(f"residual: {self.residual.dim}")
        return out


@lru_cache(maxsize=4096)
def _is_axis(alg, a, law):
    # decompositions over many subsets of one axet re-check the same axes
    return check_axis(alg, a, law).is_axis


def joint_decomposition(alg, axes, law, form=None):
    """Simultaneous eigenspaces of the adjoints of ``axes`` over the law's eigenvalues.

    Only nonzero intersections are returned, keyed by eigenvalue tuples in
    depth-first order.  When the summands do not fill the algebra and a form
    is given, the residual is their orthogonal complement.
    """
    axes = [tuple(a) for a in axes]
    ads = []
    for a in axes:
        if not _is_axis(alg, a, law):
            raise NotAnAxisError(f"{alg.format_vector(a)} is not an axis")
        ads.append(adjoint_matrix(alg, a))
    ident = Matrix.identity(alg.dim)
    summands = {}

    def descend(k, sub, key):
        if k == len(axes):
            summands[key] = sub
            return
        for lam in law.eigenvalues:
            part = _restricted_kernel(alg, sub, ads[k] - ident.scale(lam))
            if part.dim:
                descend(k + 1, part, key + (lam,))

    descend(0, SubspaceBasis.full(alg), ())
    total = SubspaceBasis(alg, [v for s in summands.values() for v in s])
    residual = SubspaceBasis.zero(alg)
    if total.dim < alg.dim and form is not None:
        residual = orthogonal_complement(form, total)
    return JointDecomposition(axes, summands, residual)


def fixed_subalgebra(alg, maps):
    """Common fixed points of a set of automorphisms."""
    sub = SubspaceBasis.full(alg)
    ident = Matrix.identity(alg.dim)
    for m in maps:
        if isinstance(m, Automorphism):
            m = m.matrix
        if not is_automorphism(alg, m):
            raise ValueError("map is not an automorphism")
        sub = _restricted_kernel(alg, sub, m - ident)
    assert sub.is_subalgebra()
    return sub


@dataclass
class ExtensionSpace:
    base_map: Matrix
    module: SubspaceBasis
    target: SubspaceBasis
    extensions: list = field(default_factory=list)

    @property
    def dim(self):
        return len(self.extensions)


def _module_matrix(alg, u, src, dst):
    """Matrix of ``w -> u*w`` from ``src`` coordinates to ``dst`` coordinates."""
    cols = []
    for w in src:
        c = dst.coordinates(multiply(alg, u, w))
        if c is None:
            raise ModuleError("product leaves the module", (u, w))
        cols.append(c)
    return Matrix.from_columns(cols, dst.dim)


def extension_space(alg, sub, base_map, module, target=None):
    """All linear maps ``phi: module -> target`` with ``phi(u w) = psi(u) phi(w)``.

    ``sub`` is a subalgebra ``U``, ``base_map`` the matrix of an automorphism
    ``psi`` of ``U`` in the coordinates of ``sub``'s basis, and ``module`` a
    subspace closed under multiplication by ``U``.  Solutions are returned
    as matrices in the coordinates of ``module`` and ``target``.
    """
    target = module if target is None else target
    if not sub.is_subalgebra():
        raise ValueError("base subspace is not a subalgebra")
    k = sub.dim
    if base_map.shape != (k, k):
        raise ValueError(f"base map has shape {base_map.shape}, expected {(k, k)}")
    if not is_automorphism(sub.as_algebra(), base_map):
        raise ValueError("base map is not an automorphism of the subalgebra")
    us = list(sub)
    left = [_module_matrix(alg, u, module, module) for u in us]
    images = [sub.vector(base_map.col(i)) for i in range(k)]
    right = [_module_matrix(alg, v, target, target) for v in images]
    m, t = module.dim, target.dim
    nvars = t * m   # X[r][l] -> r*m + l
    rows = []
    for a in range(k):
        la, ra = left[a], right[a]
        for j in range(m):
            c = la.col(j)
            # X c - R_a X e_j = 0, one equation per target coordinate
            for r in range(t):
                row = [0] * nvars
                for l in range(m):
                    if c[l]:
                        row[r * m + l] += c[l]
                for l in range(t):
                    if ra[r, l]:
                        row[l * m + j] -= ra[r, l]
                if any(row):
                    rows.append(row)
    if rows:
        sols = kernel_basis(Matrix(rows, nvars))
    else:
        sols = [tuple(int(i == v) for i in range(nvars)) for v in range(nvars)]
    exts = [Matrix([s[r * m:(r + 1) * m] for r in range(t)], m) for s in sols]
    return ExtensionSpace(base_map, module, target, exts)


def piece_from_coordinates(sub, m, target=None):
    """Turn a matrix in subspace coordinates into a piece for :func:`assemble_automorphism`."""
    target = sub if target is None else target
    images = [target.vector(m.col(j)) for j in range(m.ncols)]
    return sub, Matrix.from_columns(images, sub.algebra.dim)


def _graph_rref(vectors, dim):
    reduced, pivots = rref(Matrix(vectors, 2 * dim))
    rows = reduced.rows
    bad = [r for r, p in zip(rows, pivots) if p >= dim]
    good = [r for r, p in zip(rows, pivots) if p < dim]
    return good, bad


def assemble_automorphism(alg, pieces):
    """Extend a partial linear map to the whole algebra through products.

    ``pieces`` is a list of ``(subspace, images)`` where column ``j`` of
    ``images`` is the image of the ``j``-th basis vector of ``subspace`` in
    algebra coordinates.  Returns the automorphism, or None when the
    propagated map is not multiplicative.
    """
    dim = alg.dim
    graph = []
    domain = []
    for sub, m in pieces:
        if m.shape != (dim, sub.dim):
            raise ValueError(f"piece images have shape {m.shape}, expected {(dim, sub.dim)}")
        for j, v in enumerate(sub):
            graph.append(tuple(v) + tuple(m.col(j)))
            domain.append(tuple(v))
    span, _ = subalgebra_generated(alg, domain)
    if span.dim < dim:
        raise ValueError("pieces do not generate the algebra")
    if not graph:
        return Automorphism(Matrix.identity(0))
    rows, bad = _graph_rref(graph, dim)
    if bad:
        raise ValueError("pieces disagree on their overlap")
    while True:
        new = list(rows)
        for i, x in enumerate(rows):
            for y in rows[i:]:
                new.append(multiply(alg, x[:dim], y[:dim]) + multiply(alg, x[dim:], y[dim:]))
        grown, bad = _graph_rref(new, dim)
        if bad:
            log.info("propagated map is not multiplicative")
            return None
        if len(grown) == len(rows):
            break
        rows = grown
    if len(rows) < dim:
        raise ValueError("pieces do not generate the algebra")
    matrix = Matrix.from_columns([r[dim:] for r in rows], dim)
    if not is_automorphism(alg, matrix):
        log.info("assembled map is not an automorphism")
        return None
    return Automorphism(matrix)
