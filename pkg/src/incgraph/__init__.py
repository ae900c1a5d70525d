"""Inclusion graphs of subgroups of finite groups.

Build a group from a short spec string, enumerate its subgroup lattice,
derive the inclusion (and intersection) graph of proper nontrivial
subgroups, and compute exact invariants of that graph.
"""

from .config import Config, get_config
from .errors import IncgraphError
from .graph_build import SimpleGraph, inclusion_graph, intersection_graph
from .group_core import GroupSpec, GroupTable, construct
from .invariants import PropertyReport, property_report
from .subgroup_enum import Subgroup, SubgroupLattice, all_subgroups, lattice_of

__all__ = [
    "Config",
    "get_config",
    "IncgraphError",
    "GroupSpec",
    "GroupTable",
    "construct",
    "Subgroup",
    "SubgroupLattice",
    "all_subgroups",
    "lattice_of",
    "SimpleGraph",
    "inclusion_graph",
    "intersection_graph",
    "PropertyReport",
    "property_report",
]

__version__ = "0.1.0"
