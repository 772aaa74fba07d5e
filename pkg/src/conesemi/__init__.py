"""Primary positioned C-semigroups: invariants, irreducible enumeration and the forest P(k)."""

from .cone import Cone, cone_new, orthant, parse_cone
from .errors import ConeSemiError
from .forest import Forest, ForestNode, Tree, build_forest, build_tree, construct_primary, node_children, root_children
from .irreducible import PSEUDO_SYMMETRIC, SYMMETRIC, PairDecomposition, ei_set, enumerate_irreducible
from .oracle import compare, enumerate_all, enumerate_by_subsets, oracle_primary_set
from .orders import GREVLEX, GRLEX, LEX, TermOrder, parse_order
from .positioned import (
    OTHER,
    PEPSY,
    UESY,
    PositionedContext,
    b_set,
    beta,
    classify,
    genus_bound_holds,
    is_k_positioned,
    is_primary_positioned,
    primary_k_set,
    psi,
)
from .semigroup import CSemigroup, from_gaps, numerical, whole_cone
from .serialize import emit, load_forest

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "cone_new",
    "orthant",
    "parse_cone",
    "ConeSemiError",
    "Forest",
    "ForestNode",
    "Tree",
    "build_forest",
    "build_tree",
    "construct_primary",
    "node_children",
    "root_children",
    "PSEUDO_SYMMETRIC",
    "SYMMETRIC",
    "PairDecomposition",
    "ei_set",
    "enumerate_irreducible",
    "compare",
    "enumerate_all",
    "enumerate_by_subsets",
    "oracle_primary_set",
    "GREVLEX",
    "GRLEX",
    "LEX",
    "TermOrder",
    "parse_order",
    "OTHER",
    "PEPSY",
    "UESY",
    "PositionedContext",
    "b_set",
    "beta",
    "classify",
    "genus_bound_holds",
    "is_k_positioned",
    "is_primary_positioned",
    "primary_k_set",
    "psi",
    "CSemigroup",
    "from_gaps",
    "numerical",
    "whole_cone",
    "emit",
    "load_forest",
]

