"""Named permutation groups used by the shape computations.

Each fixture is built from explicit generators; orders and involution
counts are checked in the test suite.
"""

from __future__ import annotations

from itertools import product

from . import perm as P
from .permgroup import PermGroup

__all__ = ["FIXTURES", "fixture", "fixture_names"]


def m11():
    """Mathieu group M11 on 11 points."""
    return PermGroup([P.from_cycles(11, [range(11)]),
                      P.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)])])


def m10():
    """Point stabiliser of M11, acting on the remaining 10 points."""
    return PermGroup([P.from_cycles(10, [(2, 3, 8, 6), (4, 7, 5, 9)]),
                      P.from_cycles(10, [(0, 1, 2, 4, 5, 7, 9, 6), (3, 8)])])


def l2_11():
    """PSL(2, 11) on the projective line; point 11 is infinity."""
    inf = 11
    shift = tuple(list((x + 1) % 11 for x in range(11)) + [inf])
    img = []
    for x in range(12):
        if x == inf:
            img.append(0)
        elif x == 0:
            img.append(inf)
        else:
            img.append((-pow(x, -1, 11)) % 11)
    return PermGroup([shift, tuple(img)])


def s5():
    return PermGroup([P.from_cycles(5, [(0, 1, 2, 3, 4)]), P.from_cycles(5, [(0, 1)])])


def s3():
    return PermGroup([P.from_cycles(3, [(0, 1, 2)]), P.from_cycles(3, [(0, 1)])])


def _f3_vectors():
    return [v for v in product(range(3), repeat=2)]


def _linear_perm(mat, points, shift=(0, 0)):
    index = {v: k for k, v in enumerate(points)}
    (a, b), (c, d) = mat
    return tuple(index[((a * x + b * y + shift[0]) % 3, (c * x + d * y + shift[1]) % 3)]
                 for x, y in points)


_GL23_GENS = (((1, 1), (0, 1)), ((1, 0), (1, 1)), ((2, 0), (0, 1)))


def gl2_3():
    """GL(2, 3), a double cover of S4, on the 8 nonzero vectors of F_3^2."""
    points = [v for v in _f3_vectors() if v != (0, 0)]
    return PermGroup([_linear_perm(m, points) for m in _GL23_GENS])


def agl2_3():
    """AGL(2, 3) on the 9 points of the affine plane over F_3."""
    points = _f3_vectors()
    ident = ((1, 0), (0, 1))
    gens = [_linear_perm(m, points) for m in _GL23_GENS]
    gens += [_linear_perm(ident, points, t) for t in ((1, 0), (0, 1))]
    return PermGroup(gens)


def affine_reflections():
    """The group 3^2:2 of point reflections x -> c - x of the affine plane over F_3."""
    points = _f3_vectors()
    minus = ((2, 0), (0, 2))
    return PermGroup([_linear_perm(minus, points, t) for t in ((0, 0), (1, 0), (0, 1))])


def _f9():
    # a + b*i with i^2 = -1; point index 3a + b
    pts = [(a, b) for a in range(3) for b in range(3)]

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    return pts, {p: k for k, p in enumerate(pts)}, mul


def agammal1_9():
    """The semilinear group x -> a x^s + b on F_9, isomorphic to U3(2):2."""
    pts, idx, mul = _f9()
    zeta = (1, 1)  # generator of the multiplicative group
    gens = [
        tuple(idx[((x[0] + 1) % 3, x[1])] for x in pts),
        tuple(idx[(x[0], (x[1] + 1) % 3)] for x in pts),
        tuple(idx[mul(zeta, x)] for x in pts),
        tuple(idx[mul(mul(x, x), x)] for x in pts),
    ]
    return PermGroup(gens)


def involution_subgroup(g):
    """Subgroup generated by all involutions of ``g``."""
    return PermGroup(g.involutions(), degree=g.degree)


def s3_wr_2():
    """The index-2 subgroup of U3(2):2 generated by its involutions."""
    return involution_subgroup(agammal1_9())


def dihedral(n):
    """Dihedral group of order 2n on n points."""
    return PermGroup([P.from_cycles(n, [range(n)]),
                      tuple((-x) % n for x in range(n))])


FIXTURES = {
    "M11": m11,
    "M10": m10,
    "L2_11": l2_11,
    "S5": s5,
    "S3": s3,
    "2S4": gl2_3,
    "U3_2_2": agammal1_9,
    "S3wr2": s3_wr_2,
    "3^2:2": affine_reflections,
    "AGL2_3": agl2_3,
    "D14": lambda: dihedral(7),
}


def fixture_names():
    return sorted(FIXTURES)


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown group fixture {name!r}; known: {', '.join(fixture_names())}") from None
