"""Pair orbits of involution classes, folded shape diagrams and shape enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from . import perm as P
from .permgroup import PermGroup

__all__ = [
    "LETTERS_BY_ORDER", "INCLUSIONS", "PairOrbit", "ShapeDiagram",
    "dihedral_closure", "pair_orbits", "shape_diagram", "enumerate_shapes",
    "node_action", "pair_types", "six_transposition_check", "miyamoto_group",
]

LETTERS_BY_ORDER = {
    2: ("2A", "2B"),
    3: ("3A", "3C"),
    4: ("4A", "4B"),
    5: ("5A",),
    6: ("6A",),
}

# type -> types of the proper 2-generated subalgebras it contains
INCLUSIONS = {
    "2A": (), "2B": (), "3A": (), "3C": (), "5A": (),
    "4A": ("2B",),
    "4B": ("2A",),
    "6A": ("2A", "3A"),
}


def type_order(t):
    return int(t[:-1])


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def miyamoto_group(cls):
    """The group generated by a set of involutions."""
    cls = [tuple(x) for x in cls]
    if not cls:
        raise ValueError("empty set of involutions")
    return PermGroup(cls, degree=len(cls[0]))


def dihedral_closure(a, b):
    """Orbits of ``a`` and ``b`` under conjugation by ``<a, b>``, sorted."""
    a, b = tuple(a), tuple(b)
    for x in (a, b):
        if not P.is_involution(x):
            raise ValueError(f"{P.cycle_string(x)} is not an involution")
    seen = {a, b}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in (a, b):
            y = P.conj(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


@dataclass(frozen=True)
class PairOrbit:
    rep: tuple      # (i, j) indices into the class, i < j, lexicographically least
    size: int
    order: int      # order of the product of the two involutions


def _pair_index(n):
    index = {}
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            index[(i, j)] = len(pairs)
            pairs.append((i, j))
    return pairs, index


def _orbit_partition(g, cls):
    cls = sorted(tuple(x) for x in cls)
    position = {x: k for k, x in enumerate(cls)}
    n = len(cls)
    # action of each generator on class indices
    actions = []
    for s in g.generators:
        act = []
        for x in cls:
            y = P.conj(x, s)
            if y not in position:
                raise ValueError("class is not invariant under the group")
            act.append(position[y])
        actions.append(act)
    pairs, index = _pair_index(n)
    uf = UnionFind(len(pairs))
    for act in actions:
        for k, (i, j) in enumerate(pairs):
            a, b = act[i], act[j]
            uf.union(k, index[(a, b) if a < b else (b, a)])
    return cls, pairs, index, uf


def pair_orbits(g, cls):
    """Orbits of ``g`` on unordered pairs of ``cls`` by simultaneous conjugation.

    Sorted by (product order, size, representative).
    """
    return _pair_orbit_data(g, cls)[0]


def _pair_orbit_data(g, cls):
    cls, pairs, index, uf = _orbit_partition(g, cls)
    sizes = {}
    for k in range(len(pairs)):
        r = uf.find(k)
        sizes[r] = sizes.get(r, 0) + 1
    orbits = []
    for r, size in sizes.items():
        i, j = pairs[r]   # roots are the least index, hence the least pair
        orbits.append(PairOrbit((i, j), size, P.order(P.mul(cls[i], cls[j]))))
    orbits.sort(key=lambda o: (o.order, o.size, o.rep))
    node_of_root = {index[o.rep]: n for n, o in enumerate(orbits)}
    pair_node = [node_of_root[uf.find(k)] for k in range(len(pairs))]
    return orbits, cls, index, pair_node


@dataclass
class ShapeDiagram:
    """Folded shape diagram of an involution class.

    ``arcs`` holds ``(s, t)`` when a pair of node ``s`` lies inside the
    dihedral closure of a pair of node ``t`` and has smaller product order,
    so the type of ``t`` constrains the type of ``s``.
    """

    cls: list
    nodes: list
    arcs: list
    options: list
    _index: dict = field(repr=False, default_factory=dict)
    _pair_node: list = field(repr=False, default_factory=list)

    def node_of(self, x, y):
        """Node containing the pair of class elements ``{x, y}``."""
        pos = {c: k for k, c in enumerate(self.cls)}
        i, j = sorted((pos[tuple(x)], pos[tuple(y)]))
        if i == j:
            raise ValueError("a pair needs two distinct class elements")
        return self._pair_node[self._index[(i, j)]]

    def isolated(self):
        touched = {n for arc in self.arcs for n in arc}
        return [n for n in range(len(self.nodes)) if n not in touched]

    def describe(self):
        lines = [f"class size: {len(self.cls)}", f"nodes: {len(self.nodes)}"]
        for n, o in enumerate(self.nodes):
            lines.append(f"node {n}: order {o.order} size {o.size} "
                         f"rep {o.rep[0]} {o.rep[1]} options {'/'.join(self.options[n])}")
        for s, t in self.arcs:
            lines.append(f"arc {s} -> {t}")
        return lines


def shape_diagram(g, cls):
    orbits, cls, index, pair_node = _pair_orbit_data(g, cls)
    diagram = ShapeDiagram(cls, orbits, [], [LETTERS_BY_ORDER.get(o.order, ()) for o in orbits],
                           index, pair_node)
    arcs = set()
    for t, o in enumerate(orbits):
        i, j = o.rep
        closure = dihedral_closure(cls[i], cls[j])
        for x in range(len(closure)):
            for y in range(x + 1, len(closure)):
                s = diagram.node_of(closure[x], closure[y])
                if orbits[s].order < o.order:
                    arcs.add((s, t))
    diagram.arcs = sorted(arcs)
    return diagram


def _consistent(diagram, assignment):
    for s, t in diagram.arcs:
        forced = [x for x in INCLUSIONS[assignment[t]]
                  if type_order(x) == diagram.nodes[s].order]
        if assignment[s] not in forced:
            return False
    return True


def enumerate_shapes(diagram, up_to=None):
    """All type assignments compatible with the inclusions along every arc.

    ``up_to`` is an optional group permuting node indices; when given, only
    the lexicographically least assignment of each orbit is kept.
    """
    shapes = [a for a in product(*diagram.options) if _consistent(diagram, a)]
    if up_to is None:
        return shapes
    elements = up_to.elements()
    kept = []
    for a in shapes:
        images = []
        for p in elements:
            img = [None] * len(a)
            for i, letter in enumerate(a):
                img[p[i]] = letter
            images.append(tuple(img))
        if min(images) == a:
            kept.append(a)
    return kept


def node_action(diagram, outer):
    """Permutations of nodes induced by conjugation with each element of ``outer``.

    ``outer`` is a list of permutations of the underlying points normalising
    the class.  Returns a :class:`PermGroup` on the node indices.
    """
    position = {c: k for k, c in enumerate(diagram.cls)}
    gens = []
    for h in outer:
        img = []
        for o in diagram.nodes:
            x, y = (P.conj(diagram.cls[k], tuple(h)) for k in o.rep)
            if x not in position or y not in position:
                raise ValueError("element does not normalise the class")
            img.append(diagram.node_of(x, y))
        gens.append(tuple(img))
    return PermGroup(gens, degree=len(diagram.nodes))


def pair_types(diagram, assignment):
    """Expand a node assignment into ``{(i, j): type}`` over class indices."""
    if len(assignment) != len(diagram.nodes):
        raise ValueError("assignment length differs from the number of nodes")
    return {pair: assignment[diagram._pair_node[k]] for pair, k in diagram._index.items()}


def six_transposition_check(g, cls):
    """Largest order of a product of two class members, and whether it is at most 6."""
    cls = sorted(tuple(x) for x in cls)
    for x in cls:
        if not P.is_involution(x):
            raise ValueError("class contains a non-involution")
    best = 1
    for i, x in enumerate(cls):
        for y in cls[i + 1:]:
            best = max(best, P.order(P.mul(x, y)))
    return best <= 6, best
