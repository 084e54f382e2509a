from dpcolor.graph.core import Edge, Graph, connected_components, edge_key, parse_graph, serialize_graph
from dpcolor.graph.cycles import (
    CycleAdjacency,
    canonical_cycle,
    check_class_membership,
    cycle_edges,
    enumerate_short_cycles,
)
from dpcolor.graph.embedding import (
    Face,
    PlaneEmbedding,
    embedding_from_coordinates,
    embedding_from_model,
    embedding_to_model,
    faces_from_rotation,
    medial_embedding,
    read_embedding,
    validate_embedding,
    write_embedding,
)

__all__ = [
    "CycleAdjacency",
    "Edge",
    "Face",
    "Graph",
    "PlaneEmbedding",
    "canonical_cycle",
    "check_class_membership",
    "connected_components",
    "cycle_edges",
    "edge_key",
    "embedding_from_coordinates",
    "embedding_from_model",
    "embedding_to_model",
    "enumerate_short_cycles",
    "faces_from_rotation",
    "medial_embedding",
    "parse_graph",
    "read_embedding",
    "serialize_graph",
    "validate_embedding",
    "write_embedding",
]
