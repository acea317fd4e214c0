"""Exact rotation distance, geodesics, and oracles for brooms on complete
split graphs (shortest paths in the skeleton of the split-graph
associahedron, from the permutohedron to the stellohedron)."""

from .core import (
    Broom,
    SplitGraphSpec,
    VertexId,
    broom_to_tubing,
    from_partial_permutation,
    instance_to_doc,
    is_valid_tubing,
    parse_instance,
    pvertex,
    qvertex,
    to_partial_permutation,
    validate,
)
from .geodesic import GeodesicPlan, construct_path, geodesic
from .mincut import CutGraph, CutResult, build_cut_graph, min_cut, rotation_distance
from .model import (
    Assignment,
    CoefficientForm,
    ModelSets,
    coefficients,
    derive_sets,
    evaluate_objective,
    inversions,
)
from .oracle import (
    FlipGraphIndex,
    bfs_distance,
    broom_count,
    brute_min_objective,
    enumerate_brooms,
    iter_brooms,
    random_broom,
)
from .rotations import (
    LiftLeaf,
    Rotation,
    SinkToLeaf,
    SwapHandle,
    apply,
    inverse,
    neighbors,
    rotation_from_doc,
    rotation_to_doc,
)

__version__ = "0.1.0"
