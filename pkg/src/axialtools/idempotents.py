"""Idempotents of a prescribed length.

Two backends: an exact elimination for small dimension, which certifies
completeness over the rationals, and a Newton search with rational
reconstruction, which only certifies what it finds.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import mpmath
import numpy as np
import sympy

from .algebra import identity_of, multiply
from .exactnum import as_scalar, field_of, is_positive_definite
from .forms import is_frobenius

__all__ = [
    "IdempotentQuery", "IdempotentResult", "find_idempotents",
    "verify_idempotent", "EXACT_SMALL_MAX_DIM",
]

log = logging.getLogger(__name__)

EXACT_SMALL_MAX_DIM = 4
RECONSTRUCTION_BOUND = 2 ** 256
BUDGET_ENV = "AXIALTOOLS_NEWTON_STARTS"
DEFAULT_STARTS = 256


def verify_idempotent(alg, v):
    v = tuple(v)
    return multiply(alg, v, v) == v


@dataclass
class IdempotentQuery:
    algebra: object
    target_length: object
    form: object = None
    backend: str = "auto"
    seed: int = 0
    max_starts: int = None
    symmetries: list = field(default_factory=list)
    dps: int = 200

    def resolved_form(self):
        return self.form if self.form is not None else self.algebra.form

    def resolved_backend(self):
        if self.backend != "auto":
            return self.backend
        return "exact_small" if self.algebra.dim <= EXACT_SMALL_MAX_DIM else "newton_reconstruct"

    def starts(self):
        if self.max_starts is not None:
            return self.max_starts
        return int(os.environ.get(BUDGET_ENV, DEFAULT_STARTS))


@dataclass
class IdempotentResult:
    found: list
    complete: bool
    numeric_only: list = field(default_factory=list)

    def __iter__(self):
        return iter((self.found, self.complete))


def find_idempotents(query):
    alg = query.algebra
    form = query.resolved_form()
    if form is None:
        raise ValueError("an idempotent search needs a bilinear form")
    if field_of(x for r in form.gram.rows for x in r) is not None:
        raise ValueError("idempotent search works over the rationals only")
    if not is_positive_definite(form.gram):
        raise ValueError("form is not positive definite")
    target = as_scalar(query.target_length)
    if target < 0:
        raise ValueError("a positive definite form has no vectors of negative length")
    if target == 0:
        return IdempotentResult([alg.zero()], True)
    backend = query.resolved_backend()
    if backend == "exact_small":
        if alg.dim > EXACT_SMALL_MAX_DIM:
            raise ValueError(f"exact_small handles dimension at most {EXACT_SMALL_MAX_DIM}")
        return _exact_small(alg, form, target)
    if backend == "newton_reconstruct":
        return _newton(query, alg, form, target)
    raise ValueError(f"unknown backend {backend!r}")


# exact elimination

def _system(alg, form, target):
    n = alg.dim
    xs = sympy.symbols(f"x0:{n}")
    sq = [sympy.Integer(0)] * n
    for i in range(n):
        for j in range(n):
            p = alg.table[i][j]
            for k in range(n):
                if p[k]:
                    sq[k] += sympy.Rational(p[k].numerator, p[k].denominator) * xs[i] * xs[j]
    eqs = [sympy.expand(sq[k] - xs[k]) for k in range(n)]
    e = identity_of(alg)
    linear = None
    if e is not None and is_frobenius(alg, form):
        # for an idempotent x, (x, x) = (x x, e) = (x, e)
        ge = form.gram @ e
        linear = sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * xs[i]
                                  for i, c in enumerate(ge)) - _rat(target))
    else:
        g = form.gram
        quad = sum(_rat(g[i, j]) * xs[i] * xs[j] for i in range(n) for j in range(n))
        eqs.append(sympy.expand(quad - _rat(target)))
    return xs, eqs, linear


def _rat(q):
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def _rational_roots(poly):
    roots = set()
    for fac, _ in sympy.factor_list(poly)[1]:
        if fac.degree() == 1:
            c = fac.all_coeffs()
            roots.add(-c[1] / c[0])
    return roots


def _eliminant(polys, keep, others):
    """A nonzero univariate polynomial in ``keep`` vanishing on the common zeros, or None."""
    current = [sympy.Poly(p, keep, *others) for p in polys if p != 0]
    for y in others:
        with_y = sorted((p for p in current if p.degree(y) > 0),
                        key=lambda p: (p.degree(y), p.total_degree(), str(p.as_expr())))
        without = [p for p in current if p.degree(y) <= 0]
        nxt = list(without)
        if with_y:
            pivot = with_y[0]
            for q in with_y[1:]:
                r = sympy.resultant(pivot.as_expr(), q.as_expr(), y)
                r = sympy.expand(r)
                if r != 0:
                    nxt.append(sympy.Poly(r, *current[0].gens))
        current = [p for p in nxt if not p.is_zero]
        if not current:
            return None
    uni = [sympy.Poly(p.as_expr(), keep) for p in current]
    uni = [p for p in uni if not p.is_zero]
    if not uni:
        return None
    g = uni[0]
    for p in uni[1:]:
        g = sympy.gcd(g, p)
    return g


def _exact_small(alg, form, target):
    xs, eqs, linear = _system(alg, form, target)
    subs = {}
    free = list(xs)
    if linear is not None:
        lp = sympy.Poly(linear, *xs)
        pivot = next(v for v in reversed(xs) if lp.coeff_monomial(v) != 0)
        sol = sympy.solve(linear, pivot)[0]
        subs = {pivot: sol}
        free.remove(pivot)
        eqs = [sympy.expand(e.subs(pivot, sol)) for e in eqs]
    eqs = [e for e in eqs if e != 0]
    candidates = []
    complete = True
    for v in free:
        others = [w for w in free if w != v]
        el = _eliminant(eqs, v, others)
        if el is None:
            complete = False
            break
        if el.degree() == 0:
            # inconsistent system: no solutions at all
            return IdempotentResult([], True)
        candidates.append(sorted(_rational_roots(el)))
    if not complete:
        log.info("eliminant vanished; falling back to an uncertified search")
        return IdempotentResult([], False)
    found = set()
    for values in product(*candidates):
        point = dict(zip(free, values))
        for k, expr in subs.items():
            point[k] = expr.subs(point)
        vec = tuple(Fraction(int(sympy.fraction(point[v])[0]), int(sympy.fraction(point[v])[1]))
                    for v in xs)
        if verify_idempotent(alg, vec) and form(vec, vec) == target:
            found.add(vec)
    return IdempotentResult(sorted(found), True)


# Newton search

def _to_float_table(alg):
    n = alg.dim
    t = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            t[i, j, :] = [float(c) for c in alg.table[i][j]]
    return t


def _lattice(n, count):
    pts = []
    if 2 ** n <= count // 2:
        for bits in product((0.0, 1.0), repeat=n):
            if any(bits):
                pts.append(np.array(bits))
    else:
        for i in range(n):
            pts.append(np.eye(n)[i])
        for i in range(n):
            for j in range(i + 1, n):
                if len(pts) >= count // 2:
                    break
                pts.append((np.eye(n)[i] + np.eye(n)[j]) / 2)
    return pts[: count // 2]


def _newton_float(t, x, iters=60):
    n = len(x)
    eye = np.eye(n)
    for _ in range(iters):
        xx = np.einsum("i,j,ijk->k", x, x, t)
        f = xx - x
        if not np.all(np.isfinite(f)):
            return None
        if np.linalg.norm(f) < 1e-13:
            return x
        ad = np.einsum("i,ijk->kj", x, t)
        try:
            step = np.linalg.solve(2 * ad - eye, f)
        except np.linalg.LinAlgError:
            return None
        x = x - step
        if np.linalg.norm(x) > 1e6:
            return None
    xx = np.einsum("i,j,ijk->k", x, x, t)
    return x if np.linalg.norm(xx - x) < 1e-9 else None


def _polish(alg, x, dps):
    n = alg.dim
    with mpmath.workdps(dps):
        table = [[[mpmath.mpf(c.numerator) / c.denominator for c in alg.table[i][j]]
                  for j in range(n)] for i in range(n)]
        v = [mpmath.mpf(float(c)) for c in x]
        tol = mpmath.mpf(10) ** (-(dps - 10))
        for _ in range(40):
            sq = [mpmath.fsum(v[i] * v[j] * table[i][j][k]
                              for i in range(n) if v[i] for j in range(n) if v[j])
                  for k in range(n)]
            f = [sq[k] - v[k] for k in range(n)]
            if max(abs(c) for c in f) < tol:
                break
            jac = mpmath.matrix(n, n)
            for k in range(n):
                for j in range(n):
                    jac[k, j] = 2 * mpmath.fsum(v[i] * table[i][j][k] for i in range(n)) \
                        - (1 if k == j else 0)
            step = mpmath.lu_solve(jac, mpmath.matrix(f))
            v = [v[k] - step[k] for k in range(n)]
        return [_mpf_to_fraction(c) for c in v]


def _mpf_to_fraction(c):
    sign, man, exp, _ = c._mpf_
    man, exp = (-1) ** sign * int(man), int(exp)
    return Fraction(man * 2 ** exp) if exp >= 0 else Fraction(man, 2 ** -exp)


def _reconstruct(exact_approx):
    out = []
    for c in exact_approx:
        q = c.limit_denominator(10 ** 12)
        if abs(q - c) > Fraction(1, 10 ** 150):
            q = c.limit_denominator(RECONSTRUCTION_BOUND)
        out.append(q)
    return tuple(out)


def _newton(query, alg, form, target):
    n = alg.dim
    t = _to_float_table(alg)
    gram = np.array([[float(c) for c in r] for r in form.gram.rows])
    count = query.starts()
    rng = np.random.default_rng(query.seed)
    starts = _lattice(n, count)
    while len(starts) < count:
        starts.append(rng.normal(scale=0.6, size=n))
    e = identity_of(alg)
    found = set()
    numeric = []
    numeric_keys = set()
    ftarget = float(target)

    def accept(vec):
        if vec in found:
            return False
        if verify_idempotent(alg, vec) and form(vec, vec) == target:
            found.add(vec)
            return True
        return False

    # exact candidates: the identity and idempotent basis vectors
    if e is not None:
        accept(tuple(e))
    for b in alg.basis():
        accept(b)
        if e is not None:
            accept(tuple(x - y for x, y in zip(e, b)))
    for x0 in starts:
        x = _newton_float(t, np.array(x0, dtype=float))
        if x is None or abs(x @ gram @ x - ftarget) > 1e-7:
            continue
        key = tuple(np.round(x, 8))
        approx = _polish(alg, x, query.dps)
        vec = _reconstruct(approx)
        if vec in found:
            continue
        if not accept(vec):
            if key not in numeric_keys:
                numeric_keys.add(key)
                numeric.append(tuple(float(c) for c in x))
            continue
    # propagate through the supplied symmetries and x -> e - x
    queue = list(found)
    while queue:
        v = queue.pop()
        images = [m @ v for m in query.symmetries]
        if e is not None:
            images.append(tuple(a - b for a, b in zip(e, v)))
        for w in images:
            if accept(tuple(w)):
                queue.append(tuple(w))
    numeric = [x for x in numeric
               if not any(np.allclose(x, [float(c) for c in v], atol=1e-8) for v in found)]
    return IdempotentResult(sorted(found), False, sorted(numeric))
