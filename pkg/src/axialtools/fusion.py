"""Fusion laws, axis checks, Miyamoto involutions and axet closure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import SubspaceBasis, eigenspace, multiply
from .exactnum import Matrix, as_scalar, format_scalar, inverse, rank
from .groups import PermGroup

__all__ = [
    "FusionLaw", "AxisReport", "Automorphism", "NotAnAxisError",
    "check_axis", "miyamoto_map", "is_jordan_axis", "jordan_involution",
    "axet_closure", "find_twins", "is_automorphism",
]

DEFAULT_AXET_CAP = 10_000


class NotAnAxisError(ValueError):
    pass


class FusionLaw:
    """A finite fusion law with an optional grading by ``{+1, -1}``.

    ``table`` maps unordered eigenvalue pairs (as 2-tuples or frozensets) to
    iterables of eigenvalues; pairs that are absent fuse to the empty set.
    """

    def __init__(self, eigenvalues, table, grading=None, name=None, params=None):
        self.eigenvalues = tuple(as_scalar(x) for x in eigenvalues)
        if Fraction(1) not in self.eigenvalues:
            raise ValueError("a fusion law must contain 1")
        if len(set(self.eigenvalues)) != len(self.eigenvalues):
            raise ValueError("repeated eigenvalue")
        self.table = {}
        for key, value in table.items():
            pair = tuple(as_scalar(x) for x in key)
            if len(pair) == 1:
                pair = pair * 2
            for x in pair:
                if x not in self.eigenvalues:
                    raise ValueError(f"{x} is not an eigenvalue of the law")
            out = frozenset(as_scalar(x) for x in value)
            if not out <= set(self.eigenvalues):
                raise ValueError(f"product {pair} leaves the eigenvalue set")
            self.table[frozenset(pair)] = out
        self.grading = None
        if grading is not None:
            self.grading = {as_scalar(k): int(v) for k, v in grading.items()}
            if set(self.grading) != set(self.eigenvalues) or \
                    not set(self.grading.values()) <= {1, -1}:
                raise ValueError("grading must send every eigenvalue to +1 or -1")
        self.name = name
        self.params = dict(params or {})
        if not self.product(1, 1) <= {Fraction(1)}:
            raise ValueError("1*1 must be contained in {1}")
        if self.grading is not None and not self._grading_is_morphism():
            raise ValueError("grading is not a morphism to the group law on {+1, -1}")

    def product(self, lam, mu):
        return self.table.get(frozenset((as_scalar(lam), as_scalar(mu))), frozenset())

    def _grading_is_morphism(self):
        g = self.grading
        return all(g[nu] == g[l] * g[m]
                   for l in self.eigenvalues for m in self.eigenvalues
                   for nu in self.product(l, m))

    def is_seress(self):
        zero = Fraction(0)
        if zero not in self.eigenvalues:
            return False
        return all(self.product(zero, l) <= {l} for l in self.eigenvalues)

    def negative_eigenvalues(self):
        if self.grading is None:
            return ()
        return tuple(l for l in self.eigenvalues if self.grading[l] == -1)

    def __repr__(self):
        return f"FusionLaw({self.name or list(map(format_scalar, self.eigenvalues))})"


@dataclass
class AxisReport:
    is_axis: bool
    is_primitive: bool
    is_idempotent: bool
    eigen_dims: dict
    missing_dim: int
    fusion_violations: list = field(default_factory=list)

    def lines(self):
        out = [f"idempotent: {self.is_idempotent}"]
        for lam, d in self.eigen_dims.items():
            out.append(f"eigenvalue {format_scalar(lam)}: {d}")
        out.append(f"missing: {self.missing_dim}")
        for l, m, nu in self.fusion_violations:
            bad = "outside" if nu is None else format_scalar(nu)
            out.append(f"fusion violation: {format_scalar(l)} * {format_scalar(m)} -> {bad}")
        out.append(f"axis: {self.is_axis}")
        out.append(f"primitive: {self.is_primitive}")
        return out


def _eigenspaces(alg, a, law):
    return {lam: eigenspace(alg, a, lam) for lam in law.eigenvalues}


def check_axis(alg, a, law):
    """Verify idempotence, diagonalisability over the law, and the fusion rules."""
    a = tuple(a)
    if not any(a):
        raise ValueError("the zero vector is never an axis")
    idem = multiply(alg, a, a) == a
    spaces = _eigenspaces(alg, a, law)
    dims = {lam: s.dim for lam, s in spaces.items()}
    missing = alg.dim - sum(dims.values())
    violations = []
    if missing == 0:
        basis = [v for lam in law.eigenvalues for v in spaces[lam]]
        labels = [lam for lam in law.eigenvalues for _ in spaces[lam]]
        to_eigen = inverse(Matrix.from_columns(basis, alg.dim))
        for i, l in enumerate(law.eigenvalues):
            for m in law.eigenvalues[i:]:
                allowed = law.product(l, m)
                offending = set()
                for u in spaces[l]:
                    for v in spaces[m]:
                        coeffs = to_eigen @ multiply(alg, u, v)
                        offending.update(lab for lab, c in zip(labels, coeffs)
                                         if c and lab not in allowed)
                violations.extend((l, m, nu) for nu in law.eigenvalues if nu in offending)
    else:
        for i, l in enumerate(law.eigenvalues):
            for m in law.eigenvalues[i:]:
                target = SubspaceBasis(alg, [v for nu in law.product(l, m)
                                             for v in spaces[nu]])
                if any(multiply(alg, u, v) not in target
                       for u in spaces[l] for v in spaces[m]):
                    violations.append((l, m, None))
    is_axis = idem and missing == 0 and not violations
    primitive = is_axis and dims.get(Fraction(1), 0) == 1
    return AxisReport(is_axis, primitive, idem, dims, missing, violations)


class Automorphism:
    """An invertible linear map of an algebra respecting the product.

    Column ``j`` of ``matrix`` is the image of basis vector ``j``.
    """

    def __init__(self, matrix):
        self.matrix = matrix

    def __call__(self, v):
        return self.matrix @ v

    def __matmul__(self, other):
        return Automorphism(self.matrix @ other.matrix)

    def inverse(self):
        return Automorphism(inverse(self.matrix))

    def is_identity(self):
        return self.matrix == Matrix.identity(self.matrix.nrows)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Automorphism({self.matrix!r})"


def is_automorphism(alg, m):
    """True iff ``m`` is invertible and ``m(b_i) m(b_j) = m(b_i b_j)``."""
    if isinstance(m, Automorphism):
        m = m.matrix
    if m.shape != (alg.dim, alg.dim):
        raise ValueError(f"matrix shape {m.shape} does not match dimension {alg.dim}")
    if rank(m) < alg.dim:
        return False
    images = m.columns()
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if m @ alg.table[i][j] != multiply(alg, images[i], images[j]):
                return False
    return True


def _graded_map(alg, a, law, signs):
    spaces = _eigenspaces(alg, a, law)
    basis, diag = [], []
    for lam in law.eigenvalues:
        for v in spaces[lam]:
            basis.append(v)
            diag.append(Fraction(signs[lam]))
    if len(basis) != alg.dim:
        raise NotAnAxisError("adjoint is not diagonalisable over the law")
    p = Matrix.from_columns(basis, alg.dim)
    return p @ Matrix.diagonal(diag) @ inverse(p)


def miyamoto_map(alg, a, law):
    """The involution acting as the grading sign on each eigenspace of ``a``."""
    if law.grading is None:
        raise ValueError(f"{law!r} has no grading")
    report = check_axis(alg, a, law)
    if not report.is_axis:
        raise NotAnAxisError("vector is not an axis for this law")
    m = _graded_map(alg, a, law, law.grading)
    if not is_automorphism(alg, m):
        raise ArithmeticError("Miyamoto map is not an automorphism; algebra data is inconsistent")
    return Automorphism(m)


def is_jordan_axis(alg, a, law):
    """True iff every negatively graded eigenspace of the axis is zero."""
    if law.grading is None:
        raise ValueError(f"{law!r} has no grading")
    report = check_axis(alg, a, law)
    if not report.is_axis:
        raise NotAnAxisError("vector is not an axis for this law")
    return all(report.eigen_dims[lam] == 0 for lam in law.negative_eigenvalues())


def jordan_involution(alg, a, law):
    """The extra involution of a Jordan axis: negate the ``alpha``-eigenspace."""
    if not is_jordan_axis(alg, a, law):
        raise NotAnAxisError("not a Jordan axis")
    alpha = law.params.get("alpha")
    if alpha is None:
        raise ValueError("law does not name its alpha eigenvalue")
    signs = {lam: (-1 if lam == alpha else 1) for lam in law.eigenvalues}
    m = _graded_map(alg, a, law, signs)
    if not is_automorphism(alg, m):
        raise ArithmeticError("Jordan involution is not an automorphism")
    return Automorphism(m)


def axet_closure(alg, seeds, law, cap=DEFAULT_AXET_CAP):
    """Close ``seeds`` under the Miyamoto involutions of every axis found.

    Returns the axes in discovery order and the Miyamoto group as a
    permutation group on their indices.
    """
    axes = []
    position = {}
    for s in seeds:
        s = tuple(s)
        if s not in position:
            position[s] = len(axes)
            axes.append(s)
    taus = []
    while len(taus) < len(axes):
        # discovered axes contribute their involutions in discovery order
        start = len(taus)
        for x in axes[start:]:
            taus.append(miyamoto_map(alg, x, law))
        grew = True
        while grew:
            grew = False
            for t in taus:
                for x in list(axes):
                    y = t(x)
                    if y not in position:
                        if len(axes) >= cap:
                            raise RuntimeError(f"axet exceeds the cap of {cap} axes")
                        position[y] = len(axes)
                        axes.append(y)
                        grew = True
    perms = []
    for t in taus:
        p = tuple(position[t(x)] for x in axes)
        if p != tuple(range(len(axes))) and p not in perms:
            perms.append(p)
    return axes, PermGroup(perms, degree=len(axes))


def find_twins(alg, axet, law):
    """Unordered index pairs of distinct axes with equal Miyamoto maps."""
    taus = [miyamoto_map(alg, a, law).matrix for a in axet]
    return [(i, j) for i in range(len(axet)) for j in range(i + 1, len(axet))
            if taus[i] == taus[j]]
