"""Permutation groups, involution classes and shape diagrams."""

from . import perm
from .fixtures import fixture, fixture_names
from .permgroup import PermGroup, conjugacy_class, group_order
from .shapes import (INCLUSIONS, LETTERS_BY_ORDER, PairOrbit, ShapeDiagram,
                     dihedral_closure, enumerate_shapes, miyamoto_group,
                     node_action,
                     pair_orbits, pair_types, shape_diagram,
                     six_transposition_check)

__all__ = [
    "perm", "PermGroup", "group_order", "conjugacy_class", "fixture",
    "fixture_names", "INCLUSIONS", "LETTERS_BY_ORDER", "PairOrbit",
    "ShapeDiagram", "dihedral_closure", "pair_orbits", "shape_diagram",
    "enumerate_shapes", "miyamoto_group", "node_action", "pair_types", "six_transposition_check",
]
