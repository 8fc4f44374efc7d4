"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain."""

from __future__ import annotations

from collections import deque

from . import perm as P


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point):
        self.point = point
        self.gens = []
        # orbit point -> element mapping self.point onto it
        self.transversal = {}


class PermGroup:
    """A permutation group on ``{0, ..., degree-1}`` given by generators."""

    def __init__(self, generators, degree=None):
        gens = [P.check(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators have inconsistent degrees")
        self.degree = degree
        self.generators = tuple(g for g in dict.fromkeys(gens) if not P.is_identity(g))
        self._chain = None

    def __repr__(self):
        return f"<PermGroup degree={self.degree} gens={len(self.generators)}>"

    def identity(self):
        return P.identity(self.degree)

    # stabilizer chain

    def _refresh(self, chain, strong, k):
        """Recompute generators and transversal at level ``k``."""
        fixed = [lv.point for lv in chain[:k]]
        lv = chain[k]
        lv.gens = [s for s in strong if all(s[b] == b for b in fixed)]
        root = lv.point
        t = {root: self.identity()}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for g in lv.gens:
                y = g[x]
                if y not in t:
                    t[y] = P.mul(t[x], g)
                    queue.append(y)
        lv.transversal = t

    @staticmethod
    def _sift(chain, g, start=0):
        """Strip ``g`` through the chain; return the residue and the level it stopped at."""
        for k in range(start, len(chain)):
            level = chain[k]
            b = g[level.point]
            if b not in level.transversal:
                return g, k
            g = P.mul(g, P.inv(level.transversal[b]))
        return g, len(chain)

    def _moved_point(self, g, chain):
        used = {lv.point for lv in chain}
        return next(i for i in range(self.degree) if g[i] != i and i not in used)

    def _ensure_chain(self):
        if self._chain is not None:
            return self._chain
        strong = list(self.generators)
        chain = []
        for g in strong:
            if all(g[lv.point] == lv.point for lv in chain):
                chain.append(_Level(self._moved_point(g, chain)))
        for k in range(len(chain)):
            self._refresh(chain, strong, k)
        k = len(chain) - 1
        while k >= 0:
            lv = chain[k]
            residue = None
            for x, ux in lv.transversal.items():
                for s in lv.gens:
                    sg = P.mul(P.mul(ux, s), P.inv(lv.transversal[s[x]]))
                    if P.is_identity(sg):
                        continue
                    h, j = self._sift(chain, sg, k + 1)
                    if not P.is_identity(h):
                        residue = h, j
                        break
                if residue:
                    break
            if residue is None:
                k -= 1
                continue
            h, j = residue
            strong.append(h)
            if j == len(chain):
                chain.append(_Level(self._moved_point(h, chain)))
            for level in range(k + 1, j + 1):
                self._refresh(chain, strong, level)
            k = j
        self._chain = chain
        return chain

    @property
    def base(self):
        return tuple(lv.point for lv in self._ensure_chain())

    def order(self):
        n = 1
        for lv in self._ensure_chain():
            n *= len(lv.transversal)
        return n

    def __contains__(self, g):
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self._sift(self._ensure_chain(), g)
        return P.is_identity(h)

    contains = __contains__

    # enumeration

    def elements(self):
        """All elements, sorted; built from the transversals of the chain."""
        elems = [self.identity()]
        for lv in reversed(self._ensure_chain()):
            elems = [P.mul(e, t) for t in lv.transversal.values() for e in elems]
        return sorted(elems)

    def orbit(self, point):
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def involutions(self):
        return [g for g in self.elements() if P.is_involution(g)]

    def involution_classes(self):
        """Conjugacy classes of involutions, each sorted, ordered by size then content."""
        remaining = set(self.involutions())
        classes = []
        while remaining:
            x = min(remaining)
            c = conjugacy_class(self, x, check=False)
            remaining.difference_update(c)
            classes.append(c)
        classes.sort(key=lambda c: (len(c), c))
        return classes


def group_order(g):
    return g.order()


def conjugacy_class(g, x, check=True):
    """The orbit of ``x`` under conjugation by ``g``, sorted."""
    x = tuple(x)
    if check and x not in g:
        raise ValueError("element is not in the group")
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for s in g.generators:
            z = P.conj(y, s)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen)
