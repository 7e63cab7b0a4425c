"""Generalized q-Kneser graphs: exact counts, construction, tree decompositions and solvers."""

from ._core import (
    Graph,
    QKneserError,
    ResourceLimit,
    build_cograssmann,
    build_qkneser,
    cograssmann_treewidth,
    degree,
    gauss,
    in_exact_treewidth_range,
    independence_number,
    intersect_count,
    is_independent,
    max_independent_set,
    point_pencil,
    star_decomposition,
    sweep,
    treewidth,
    treewidth_formula,
    validate,
)

__all__ = [
    "Graph",
    "QKneserError",
    "ResourceLimit",
    "build_cograssmann",
    "build_qkneser",
    "cograssmann_treewidth",
    "degree",
    "gauss",
    "in_exact_treewidth_range",
    "independence_number",
    "intersect_count",
    "is_independent",
    "max_independent_set",
    "point_pencil",
    "star_decomposition",
    "sweep",
    "treewidth",
    "treewidth_formula",
    "validate",
]
