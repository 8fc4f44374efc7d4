from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from axialtools.algebra import Algebra, identity_of, multiply
from axialtools.catalog import NS_TYPES, make_law, norton_sakuma
from axialtools.exactnum import Matrix
from axialtools.forms import BilinearForm
from axialtools.fusion import axet_closure, miyamoto_map
from axialtools.idempotents import (EXACT_SMALL_MAX_DIM, IdempotentQuery,
                                    find_idempotents, verify_idempotent)

from strategies import small_fractions

Q = Fraction
SMALL = [t for t in NS_TYPES if norton_sakuma(t)[0].dim <= EXACT_SMALL_MAX_DIM]


def _rat(q):
    return sympy.Rational(q.numerator, q.denominator)


def groebner_oracle(alg, form, target):
    """Rational solutions of x*x = x, (x, x) = target via a lex Groebner basis."""
    n = alg.dim
    xs = sympy.symbols(f"x0:{n}")
    eqs = [sympy.expand(sum(_rat(alg.table[i][j][k]) * xs[i] * xs[j]
                            for i in range(n) for j in range(n)) - xs[k]) for k in range(n)]
    g = form.gram
    eqs.append(sympy.expand(sum(_rat(g[i, j]) * xs[i] * xs[j]
                                for i in range(n) for j in range(n)) - _rat(target)))
    basis = sympy.groebner(eqs, *xs, order="lex")
    if list(basis) == [1]:
        return set()
    out = set()
    for sol in sympy.solve(list(basis), xs, dict=True):
        vals = [sol.get(x, x) for x in xs]
        assert all(v.free_symbols == set() for v in vals), "positive-dimensional solution set"
        if all(v.is_Rational for v in vals):
            out.add(tuple(Q(int(v.p), int(v.q)) for v in vals))
    return out


def _lengths(t):
    alg, _ = norton_sakuma(t)
    e = identity_of(alg)
    big = alg.form(e, e)
    return [Q(1), big - 1, big, Q(8, 5), Q(1, 2)]


@pytest.mark.parametrize("t", SMALL)
def test_exact_small_matches_groebner_oracle(t):
    alg, _ = norton_sakuma(t)
    for length in _lengths(t):
        found, complete = find_idempotents(IdempotentQuery(alg, length, backend="exact_small"))
        assert complete
        assert set(found) == groebner_oracle(alg, alg.form, length)
        assert found == sorted(found)


def test_2b_identity():
    alg, axes = norton_sakuma("2B")
    found, complete = find_idempotents(IdempotentQuery(alg, 2))
    assert complete and found == [tuple(x + y for x, y in zip(*axes))]


def test_2a_identity_is_unique_of_its_length():
    alg, _ = norton_sakuma("2A")
    found, complete = find_idempotents(IdempotentQuery(alg, Q(12, 5)))
    assert complete and found == [identity_of(alg)]


def test_3a_has_four_idempotents_of_length_eight_fifths():
    alg, _ = norton_sakuma("3A")
    found, complete = find_idempotents(IdempotentQuery(alg, Q(8, 5)))
    assert complete and len(found) == 4
    assert alg.basis_vector("u_rho") in found


@pytest.mark.parametrize("t", NS_TYPES)
def test_length_zero(t):
    alg, _ = norton_sakuma(t)
    found, complete = find_idempotents(IdempotentQuery(alg, 0))
    assert complete and found == [alg.zero()]


def test_rejects_bad_forms():
    alg, _ = norton_sakuma("2B")
    with pytest.raises(ValueError):
        find_idempotents(IdempotentQuery(alg, 1, form=BilinearForm([[1, 0], [0, -1]])))
    with pytest.raises(ValueError):
        find_idempotents(IdempotentQuery(alg, -1))
    with pytest.raises(ValueError):
        find_idempotents(IdempotentQuery(alg, 1, backend="nope"))
    bare = Algebra({(0, 0): (1,)}, dim=1)
    with pytest.raises(ValueError):
        find_idempotents(IdempotentQuery(bare, 1))
    big, _ = norton_sakuma("5A")
    with pytest.raises(ValueError):
        find_idempotents(IdempotentQuery(big, 1, backend="exact_small"))


@pytest.mark.parametrize("t", ["4A", "4B", "5A", "6A"])
def test_newton_results_are_sound(t, monster):
    alg, axes = norton_sakuma(t)
    axet, _ = axet_closure(alg, axes[:2], monster)
    taus = [miyamoto_map(alg, a, monster).matrix for a in axet]
    e = identity_of(alg)
    for length in (Q(1), alg.form(e, e) - 1):
        q = IdempotentQuery(alg, length, backend="newton_reconstruct", max_starts=48, symmetries=taus)
        result = find_idempotents(q)
        assert not result.complete
        for v in result.found:
            assert multiply(alg, v, v) == v and alg.form(v, v) == length
        if length == 1:
            assert set(axet) <= set(result.found)


def test_newton_agrees_with_exact_small_where_both_apply():
    for t in SMALL:
        alg, _ = norton_sakuma(t)
        for length in _lengths(t):
            exact, _ = find_idempotents(IdempotentQuery(alg, length, backend="exact_small"))
            numeric = find_idempotents(IdempotentQuery(alg, length, backend="newton_reconstruct",
                                                       max_starts=64))
            assert set(numeric.found) <= set(exact)


def test_newton_deterministic():
    alg, _ = norton_sakuma("5A")
    q = IdempotentQuery(alg, Q(1), backend="newton_reconstruct", seed=3, max_starts=24)
    assert find_idempotents(q).found == find_idempotents(q).found


def test_budget_from_environment(monkeypatch):
    alg, _ = norton_sakuma("5A")
    monkeypatch.setenv("AXIALTOOLS_NEWTON_STARTS", "5")
    assert IdempotentQuery(alg, 1).starts() == 5
    assert IdempotentQuery(alg, 1, max_starts=7).starts() == 7


def test_verify_idempotent():
    alg, axes = norton_sakuma("4B")
    assert verify_idempotent(alg, axes[0])
    assert not verify_idempotent(alg, tuple(2 * x for x in axes[0]))
    e = alg.vector({"a-1": Q(4, 5), "a0": Q(4, 5), "a1": Q(4, 5), "a2": Q(4, 5), "a_rho2": Q(3, 5)})
    assert verify_idempotent(alg, e)


@settings(max_examples=25)
@given(st.lists(small_fractions, min_size=3, max_size=3),
       st.sampled_from([Q(1), Q(1, 2), Q(2), Q(5, 4)]))
def test_exact_small_matches_oracle_on_random_2d(coeffs, length):
    # b0 idempotent, b0*b1 = c0 b1, b1*b1 = c1 b0 + c2 b1, identity form
    c0, c1, c2 = coeffs
    alg = Algebra({(0, 0): (1, 0), (0, 1): (0, c0), (1, 1): (c1, c2)}, dim=2)
    form = BilinearForm(Matrix.identity(2))
    result = find_idempotents(IdempotentQuery(alg, length, form=form, backend="exact_small"))
    if result.complete:
        assert set(result.found) == groebner_oracle(alg, form, length)
    for v in result.found:
        assert verify_idempotent(alg, v) and form(v, v) == length
