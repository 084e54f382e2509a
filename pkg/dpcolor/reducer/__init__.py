from dpcolor.reducer.configs import (
    LowDegreeVertex,
    ReducibleConfig,
    SourceConfig,
    find_reducible,
    is_small_five_face,
    source_configs,
)
from dpcolor.reducer.extend import extend_low_degree, extend_source_config
from dpcolor.reducer.runner import ColoringTrace, color_any_graph, color_class_graph, color_class_graph_traced

__all__ = [
    "ColoringTrace",
    "LowDegreeVertex",
    "ReducibleConfig",
    "SourceConfig",
    "color_any_graph",
    "color_class_graph",
    "color_class_graph_traced",
    "extend_low_degree",
    "extend_source_config",
    "find_reducible",
    "is_small_five_face",
    "source_configs",
]
