"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS/FAIL`` line with the elapsed
time and the time limit.  Run ``pytest tests/test_acceptance.py -v -s`` to
see just these lines.
"""

import time
from contextlib import contextmanager
from collections import deque
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
import sympy

from axialtools import forms
from axialtools.algebra import SubspaceBasis, identity_of, is_isomorphism, multiply
from axialtools.catalog import NS_TYPES, _build_ns, make_law, matsuo_algebra, norton_sakuma
from axialtools.decompose import assemble_automorphism, extension_space, joint_decomposition
from axialtools.exactnum import Matrix, is_positive_definite
from axialtools.forms import is_frobenius
from axialtools.fusion import axet_closure, check_axis, miyamoto_map
from axialtools.groups import (enumerate_shapes, fixture, miyamoto_group, node_action,
                               pair_orbits, perm as P, shape_diagram,
                               six_transposition_check)
from axialtools.groups.fixtures import dihedral
from axialtools.idempotents import EXACT_SMALL_MAX_DIM, IdempotentQuery, find_idempotents

Q = Fraction
MONSTER = make_law("monster", Q(1, 4), Q(1, 32))


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\ncriterion {number}: FAIL  {title}  ({elapsed:.2f}s, limit {limit}s)")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {title}  "
              f"({elapsed:.2f}s, limit {limit}s)")
    assert ok, f"took {elapsed:.2f}s, limit {limit}s"


def test_criterion_1_norton_sakuma_suite(capsys):
    lengths = [Q(12, 5), Q(2), Q(116, 35), Q(32, 11), Q(4), Q(19, 5), Q(32, 7), Q(51, 10)]
    _build_ns.cache_clear()
    forms._NS_PAIR_VALUES.clear()
    with criterion(capsys, 1, "Norton-Sakuma suite", 1):
        for t, expected in zip(NS_TYPES, lengths):
            alg, axes = norton_sakuma(t)
            assert is_frobenius(alg, alg.form)
            assert all(alg.form(a, a) == 1 for a in axes)
            for a in axes[:2]:
                r = check_axis(alg, a, MONSTER)
                assert r.is_axis and r.is_primitive
            e = identity_of(alg)
            assert alg.form(e, e) == expected
            assert is_positive_definite(alg.form.gram)
            axet, _ = axet_closure(alg, axes[:2], MONSTER)
            assert len(axet) == int(t[0])


def test_criterion_2_identity_formula(capsys):
    with criterion(capsys, 2, "4B identity formula", 1):
        alg, _ = norton_sakuma("4B")
        e = alg.vector({"a-1": Q(4, 5), "a0": Q(4, 5), "a1": Q(4, 5), "a2": Q(4, 5),
                        "a_rho2": Q(3, 5)})
        assert identity_of(alg) == e


def _class_diagram(name, classes):
    g = fixture(name)
    all_classes = g.involution_classes()
    cls = sorted(x for k in classes for x in all_classes[k])
    return shape_diagram(miyamoto_group(cls), cls)


def test_criterion_3_shape_diagrams(capsys):
    with criterion(capsys, 3, "shape diagrams", 30):
        m11 = fixture("M11")
        cls = m11.involution_classes()[0]
        orbits = pair_orbits(m11, cls)
        assert sorted(o.size for o in orbits) == [660, 990, 1980, 1980, 3960, 3960]
        assert sum(o.size for o in orbits) == 13530
        d = shape_diagram(miyamoto_group(cls), cls)
        # 4B contains 2A; 6A contains 2A and 3A (the 660-orbit of 3-elements)
        assert [(o.order, o.size) for o in d.nodes] == \
            [(2, 990), (3, 660), (3, 1980), (4, 1980), (5, 3960), (6, 3960)]
        assert d.arcs == [(0, 3), (0, 5), (1, 5), (2, 5)]
        assert len(enumerate_shapes(d)) == 1

        d = _class_diagram("L2_11", [0])
        assert len(d.nodes) == 6
        iso = d.isolated()
        assert len(iso) == 2 and {d.nodes[n].order for n in iso} == {5}
        assert len(enumerate_shapes(d)) == 1

        d = _class_diagram("M10", [0])
        assert len(d.nodes) == 7 and len(enumerate_shapes(d)) == 8

        d = _class_diagram("3^2:2", [0])
        assert len(enumerate_shapes(d)) == 16
        outer = node_action(d, fixture("AGL2_3").generators)
        assert len(enumerate_shapes(d, up_to=outer)) == 5

        d = _class_diagram("S3wr2", [0, 1])
        assert len(d.cls) == 12 and len(enumerate_shapes(d)) == 8


def _bfs_order(gens, n):
    seen = {P.identity(n)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for s in gens:
            y = P.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


def test_criterion_4_class_sizes(capsys):
    expected = {"M11": [165], "L2_11": [55], "M10": [45], "S5": [10, 15],
                "2S4": [1, 12], "U3_2_2": [9, 12]}
    with criterion(capsys, 4, "involution class sizes and M11 order", 1):
        for name, sizes in expected.items():
            assert [len(c) for c in fixture(name).involution_classes()] == sizes
        m11 = fixture("M11")
        assert m11.order() == 7920
        assert _bfs_order(m11.generators, 11) == 7920


def test_criterion_5_six_transposition(capsys):
    with criterion(capsys, 5, "6-transposition check", 10):
        for name in ("M11", "L2_11"):
            g = fixture(name)
            assert six_transposition_check(g, g.involution_classes()[0]) == (True, 6)
        d7 = dihedral(7)
        assert six_transposition_check(d7, d7.involution_classes()[0]) == (False, 7)


def test_criterion_6_matsuo(capsys):
    with criterion(capsys, 6, "Matsuo algebras", 1):
        s3 = fixture("S3")
        alg, _ = matsuo_algebra(s3, s3.involutions()[0], Q(1, 32))
        ns, _ = norton_sakuma("3C")
        # x_k -> (a-1, a0, a1) in order
        bijection = Matrix.identity(3)
        assert is_isomorphism(alg, ns, bijection)
        g = fixture("3^2:2")
        alg9, axes9 = matsuo_algebra(g, g.involutions()[0], Q(1, 32))
        assert alg9.dim == 9
        jordan = make_law("jordan", Q(1, 32))
        assert all(check_axis(alg9, a, jordan).is_axis for a in axes9)


def _decomposition_cases():
    for t in NS_TYPES:
        alg, axes = norton_sakuma(t)
        yield alg, axes, MONSTER
    jordan = make_law("jordan", Q(1, 32))
    for name in ("S3", "3^2:2"):
        g = fixture(name)
        alg, axes = matsuo_algebra(g, g.involutions()[0], Q(1, 32))
        yield alg, axes, jordan


def test_criterion_7_decomposition_properties(capsys):
    with criterion(capsys, 7, "joint decomposition properties", 5):
        for alg, axes, law in _decomposition_cases():
            for ys in [[a] for a in axes] + [list(p) for p in combinations(axes, 2)]:
                d = joint_decomposition(alg, ys, law, form=alg.form)
                for key, sub in d.summands.items():
                    for v in sub:
                        for a, lam in zip(ys, key):
                            assert multiply(alg, a, v) == tuple(lam * x for x in v)
                zero = d.zero_summand()
                assert zero.is_subalgebra()
                total = SubspaceBasis(alg, [v for s in d.summands.values() for v in s])
                assert total.dim == sum(d.dims().values())
                assert total.dim + d.residual.dim == alg.dim
                if law.is_seress():
                    for sub in d.summands.values():
                        assert all(multiply(alg, u, w) in sub for u in zero for w in sub)


def test_criterion_8_extension_engine(capsys):
    with criterion(capsys, 8, "extension engine", 5):
        alg, _ = norton_sakuma("6A")
        a0, a3 = alg.basis_vector("a0"), alg.basis_vector("a3")
        d = joint_decomposition(alg, [a0, a3], MONSTER)
        u = d.zero_summand()
        psi = Matrix.identity(u.dim)
        checked = 0
        for key, w in d.summands.items():
            if key == d.zero_key:
                continue
            space = extension_space(alg, u, psi, w)
            assert space.dim > 0
            for phi in space.extensions:
                for i, x in enumerate(u):
                    for j, y in enumerate(w):
                        lhs = phi @ w.coordinates(multiply(alg, x, y))
                        rhs = w.coordinates(multiply(alg, u.vector(psi.col(i)),
                                                     w.vector(phi.col(j))))
                        assert lhs == rhs
                        checked += 1
        assert checked

        alg3, _ = norton_sakuma("3A")
        a0, a1, am1 = (alg3.basis_vector(n) for n in ("a0", "a1", "a-1"))
        pieces = [(SubspaceBasis(alg3, [a0]), Matrix.from_columns([a0], 4)),
                  (SubspaceBasis(alg3, [a1]), Matrix.from_columns([am1], 4)),
                  (SubspaceBasis(alg3, [am1]), Matrix.from_columns([a1], 4))]
        assert assemble_automorphism(alg3, pieces) == miyamoto_map(alg3, a0, MONSTER)


def _rat(q):
    return sympy.Rational(q.numerator, q.denominator)


def _resultant_free_oracle(alg, target):
    n = alg.dim
    xs = sympy.symbols(f"x0:{n}")
    eqs = [sympy.expand(sum(_rat(alg.table[i][j][k]) * xs[i] * xs[j]
                            for i in range(n) for j in range(n)) - xs[k]) for k in range(n)]
    g = alg.form.gram
    eqs.append(sympy.expand(sum(_rat(g[i, j]) * xs[i] * xs[j]
                                for i in range(n) for j in range(n)) - _rat(target)))
    basis = sympy.groebner(eqs, *xs, order="lex")
    if list(basis) == [1]:
        return set()
    out = set()
    for sol in sympy.solve(list(basis), xs, dict=True):
        vals = [sol[x] for x in xs]
        if all(v.is_Rational for v in vals):
            out.add(tuple(Q(int(v.p), int(v.q)) for v in vals))
    return out


def test_criterion_9_idempotent_soundness(capsys):
    with criterion(capsys, 9, "idempotent soundness", 60):
        for t in NS_TYPES:
            alg, axes = norton_sakuma(t)
            e = identity_of(alg)
            big = alg.form(e, e)
            lengths = [Q(1), big - 1, big, Q(8, 5)]
            if alg.dim <= EXACT_SMALL_MAX_DIM:
                for length in lengths:
                    found, complete = find_idempotents(
                        IdempotentQuery(alg, length, backend="exact_small"))
                    assert complete
                    assert set(found) == _resultant_free_oracle(alg, length)
            if t in ("5A", "6A"):
                for length in lengths:
                    res = find_idempotents(IdempotentQuery(
                        alg, length, backend="newton_reconstruct", max_starts=64))
                    if length == 1:
                        assert set(axes) <= set(res.found)
                    for v in res.found:
                        assert multiply(alg, v, v) == v and alg.form(v, v) == length
            assert find_idempotents(IdempotentQuery(alg, 0)).found == [alg.zero()]


def test_criterion_10_not_reproducible(capsys):
    with capsys.disabled():
        print("\ncriterion 10: NOT REPRODUCIBLE  large-algebra computations need structure "
              "constants that are not published; covered by the property suites of 1-9")
    pytest.skip("input data for the large algebras is not available")
