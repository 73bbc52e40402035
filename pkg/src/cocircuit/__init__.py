"""Uniform oriented matroids and recognition of their cocircuit graphs."""

from .explorer import antipodality_scan, coline_distance_check, dv_census
from .generators import cyclic, from_vectors, perturb_graph, random_realizable
from .graphs import Graph, apsp, bfs_distances, vertex_disjoint_path_count
from .labeling import (SignLabeling, antipodal_from_labeling, build_cocircuit_graph,
                       count_disjoint_crabbed_paths, is_sign_labeling, verify_om_labeling)
from .om import FormatError, OrientedMatroid, contraction, deletion, validate_axioms
from .recognition import ACCEPT, REJECT, recognize
from .signs import SignVector, is_crabbed_member, negate, restrict, separator, support

__all__ = [
    "ACCEPT", "REJECT", "FormatError", "Graph", "OrientedMatroid", "SignLabeling", "SignVector",
    "antipodal_from_labeling", "antipodality_scan", "apsp", "bfs_distances", "build_cocircuit_graph",
    "coline_distance_check", "contraction", "count_disjoint_crabbed_paths", "cyclic", "deletion",
    "dv_census", "from_vectors", "is_crabbed_member", "is_sign_labeling", "negate", "perturb_graph",
    "random_realizable", "recognize", "restrict", "separator", "support", "validate_axioms",
    "verify_om_labeling", "vertex_disjoint_path_count",
]
