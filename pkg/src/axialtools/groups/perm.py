"""Permutations as tuples of images.

Products apply the left factor first: ``mul(p, q)[i] == q[p[i]]``.
Conjugation follows ``x^g = g^-1 x g``.
"""

from __future__ import annotations

from math import lcm


def identity(n):
    return tuple(range(n))


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def check(p):
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")
    return p


def mul(p, q):
    return tuple(q[x] for x in p)


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conj(x, g):
    """``g^-1 x g``: the point ``g[i]`` goes to ``g[x[i]]``."""
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[g[i]] = g[xi]
    return tuple(out)


def cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            c.append(j)
            j = p[j]
        out.append(tuple(c))
    return out


def order(p):
    return lcm(*(len(c) for c in cycles(p))) if p else 1


def is_involution(p):
    return not is_identity(p) and is_identity(mul(p, p))


def from_cycles(n, cyc):
    img = list(range(n))
    for c in cyc:
        for k, x in enumerate(c):
            img[x] = c[(k + 1) % len(c)]
    return check(img)


def cycle_string(p):
    parts = ["(" + ",".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"
