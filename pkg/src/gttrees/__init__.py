"""Vertex cover and total domination on trees: exact oracles, linear-time
solvers, the O1-O4 construction family and a certifying recognizer."""
from .core import (
    Tree,
    canonical_code,
    from_edge_list,
    leaves,
    longest_path,
    path_tree,
    star_tree,
)
from .family import Certificate, recognize, verify_certificate
from .oracle import analyze, gamma_t_exact, gtt_sets, has_gtt_set, tau_exact
from .tree_dp import gamma_t_tree, tau_tree

__all__ = [
    "Certificate",
    "Tree",
    "analyze",
    "canonical_code",
    "from_edge_list",
    "gamma_t_exact",
    "gamma_t_tree",
    "gtt_sets",
    "has_gtt_set",
    "leaves",
    "longest_path",
    "path_tree",
    "recognize",
    "star_tree",
    "tau_exact",
    "tau_tree",
    "verify_certificate",
]
