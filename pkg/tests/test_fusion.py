from fractions import Fraction

import pytest

from axialtools.algebra import Algebra, eigenspace, multiply
from axialtools.catalog import NS_TYPES, make_law, norton_sakuma
from axialtools.exactnum import Matrix, inverse
from axialtools.fusion import (FusionLaw, NotAnAxisError, axet_closure,
                               check_axis, find_twins, is_automorphism,
                               is_jordan_axis, jordan_involution, miyamoto_map)

Q = Fraction


def test_law_shapes():
    m = make_law("monster", Q(1, 4), Q(1, 32))
    assert len(m.eigenvalues) == 4
    assert m.grading[Q(1, 32)] == -1 and m.grading[Q(1, 4)] == 1
    assert m.is_seress()
    j = make_law("jordan", Q(1, 32))
    assert len(j.eigenvalues) == 3
    assert j.negative_eigenvalues() == (Q(1, 32),)
    a = make_law("almost_monster", Q(1, 2), Q(1, 8))
    assert a.product(Q(1, 2), Q(1, 2)) == {1, 0, Q(1, 2)}
    assert m.product(Q(1, 4), Q(1, 4)) == {1, 0}


def test_law_validation():
    with pytest.raises(ValueError):
        make_law("monster", Q(1, 4), Q(1, 4))
    with pytest.raises(ValueError):
        make_law("jordan", 1)
    with pytest.raises(ValueError):
        FusionLaw((0, 2), {})
    with pytest.raises(ValueError):
        FusionLaw((1, 0), {(1, 1): {0}})
    with pytest.raises(ValueError):
        # 1/2 * 1/2 = 1/2 cannot be graded with 1/2 -> -1
        FusionLaw((1, 0, Q(1, 2)), {(1, 1): {1}, (Q(1, 2), Q(1, 2)): {Q(1, 2)}},
                  grading={1: 1, 0: 1, Q(1, 2): -1})


def test_check_axis_3a_primitive(monster):
    alg, axes = norton_sakuma("3A")
    r = check_axis(alg, axes[0], monster)
    assert r.is_axis and r.is_primitive and r.missing_dim == 0


def test_check_axis_2b_dims(monster):
    alg, axes = norton_sakuma("2B")
    r = check_axis(alg, axes[0], monster)
    assert r.is_axis
    assert r.eigen_dims == {1: 1, 0: 1, Q(1, 4): 0, Q(1, 32): 0}


def test_check_axis_one_dimensional(monster):
    alg = Algebra({(0, 0): (1,)}, dim=1)
    r = check_axis(alg, (Q(1),), monster)
    assert r.is_axis and r.eigen_dims[1] == 1


def test_check_axis_non_idempotent_is_reported(monster):
    alg, axes = norton_sakuma("2A")
    r = check_axis(alg, tuple(2 * x for x in axes[0]), monster)
    assert not r.is_axis and not r.is_idempotent
    with pytest.raises(ValueError):
        check_axis(alg, alg.zero(), monster)


def test_fusion_violation_detected():
    alg, axes = norton_sakuma("3C")
    eta = Q(1, 32)
    strict = FusionLaw((1, 0, eta), {(1, 1): {1}, (0, 0): {0}, (1, eta): {eta},
                                      (0, eta): {eta}, (eta, eta): {0}})
    r = check_axis(alg, axes[0], strict)
    assert not r.is_axis
    assert (eta, eta, Q(1)) in r.fusion_violations


def test_miyamoto_2b_is_identity(monster):
    alg, axes = norton_sakuma("2B")
    assert miyamoto_map(alg, axes[0], monster).is_identity()


def test_miyamoto_3a_swaps(monster):
    alg, axes = norton_sakuma("3A")
    tau = miyamoto_map(alg, axes[0], monster)
    am1, a0, a1, u = alg.basis()
    assert tau(a1) == am1 and tau(am1) == a1
    assert tau(a0) == a0 and tau(u) == u
    assert (tau @ tau).is_identity()


def test_miyamoto_requires_grading_and_axis(monster):
    alg, axes = norton_sakuma("3A")
    ungraded = FusionLaw(monster.eigenvalues, {tuple(k) if len(k) == 2 else tuple(k) * 2: v
                                               for k, v in monster.table.items()})
    with pytest.raises(ValueError):
        miyamoto_map(alg, axes[0], ungraded)
    with pytest.raises(NotAnAxisError):
        miyamoto_map(alg, alg.basis_vector("u_rho"), monster)


def test_jordan_axes(monster):
    alg, axes = norton_sakuma("2B")
    assert is_jordan_axis(alg, axes[0], monster)
    alg3, axes3 = norton_sakuma("3A")
    assert not is_jordan_axis(alg3, axes3[0], monster)


def test_2a_axis_is_jordan(monster):
    # 2A spectrum of a0 is {1, 0, 1/4}: a1 - a_rho is a 1/4-eigenvector, not a 1/32 one
    alg, axes = norton_sakuma("2A")
    a0, a1, ar = axes
    diff = tuple(x - y for x, y in zip(a1, ar))
    assert multiply(alg, a0, diff) == tuple(x / 4 for x in diff)
    assert eigenspace(alg, a0, Q(1, 32)).dim == 0
    assert is_jordan_axis(alg, a0, monster)
    sigma = jordan_involution(alg, a0, monster)
    assert is_automorphism(alg, sigma.matrix)
    assert sigma(diff) == tuple(-x for x in diff)


def test_axet_closure_examples(monster):
    alg, axes = norton_sakuma("5A")
    axet, group = axet_closure(alg, axes[:2], monster)
    assert len(axet) == 5 and group.order() == 10
    alg2, axes2 = norton_sakuma("2B")
    axet2, group2 = axet_closure(alg2, axes2, monster)
    assert len(axet2) == 2 and group2.order() == 1
    one = Algebra({(0, 0): (1,)}, dim=1)
    axet1, group1 = axet_closure(one, [(Q(1),)], monster)
    assert len(axet1) == 1 and group1.order() == 1


def test_axet_cap(monster):
    alg, axes = norton_sakuma("5A")
    with pytest.raises(RuntimeError):
        axet_closure(alg, axes[:2], monster, cap=3)


def test_twins(monster):
    alg, axes = norton_sakuma("2B")
    assert find_twins(alg, axes, monster) == [(0, 1)]
    alg5, axes5 = norton_sakuma("5A")
    axet, _ = axet_closure(alg5, axes5[:2], monster)
    assert find_twins(alg5, axet, monster) == []
    assert find_twins(alg5, [], monster) == []


def test_is_automorphism_examples(monster):
    alg, axes = norton_sakuma("2A")
    assert is_automorphism(alg, Matrix.identity(3))
    assert is_automorphism(alg, Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert not is_automorphism(alg, Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]).scale(2))
    with pytest.raises(ValueError):
        is_automorphism(alg, Matrix.identity(2))
    alg3, axes3 = norton_sakuma("3A")
    assert is_automorphism(alg3, miyamoto_map(alg3, axes3[0], monster).matrix)


@pytest.mark.parametrize("t", NS_TYPES)
def test_miyamoto_equivariance(t, monster):
    alg, axes = norton_sakuma(t)
    axet, _ = axet_closure(alg, axes[:2], monster)
    taus = [miyamoto_map(alg, a, monster).matrix for a in axet]
    for g in taus:
        ginv = inverse(g)
        for a, tau in zip(axet, taus):
            assert g @ tau @ ginv == miyamoto_map(alg, g @ a, monster).matrix


@pytest.mark.parametrize("t", NS_TYPES)
def test_miyamoto_maps_are_involutions_fixing_the_axis(t, monster):
    alg, axes = norton_sakuma(t)
    for a in axes:
        tau = miyamoto_map(alg, a, monster)
        assert tau(a) == a
        assert (tau @ tau).is_identity()


@pytest.mark.parametrize("t", NS_TYPES)
def test_fusion_by_projection(t, monster):
    # independent route: membership of every eigenvector product in the allowed sum
    from axialtools.algebra import SubspaceBasis
    alg, axes = norton_sakuma(t)
    for a in axes:
        spaces = {l: eigenspace(alg, a, l) for l in monster.eigenvalues}
        assert sum(s.dim for s in spaces.values()) == alg.dim
        for l in monster.eigenvalues:
            for m in monster.eigenvalues:
                allowed = SubspaceBasis(alg, [v for nu in monster.product(l, m) for v in spaces[nu]])
                for u in spaces[l]:
                    for v in spaces[m]:
                        assert multiply(alg, u, v) in allowed
