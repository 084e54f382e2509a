from dpcolor.chromatic.degeneracy import degeneracy_coloring, degeneracy_order
from dpcolor.chromatic.numbers import canonical_list_systems, chromatic_number, dp_chromatic, list_chromatic
from dpcolor.cover.normalize import normalize_assignment, normalized_assignments

__all__ = [
    "canonical_list_systems",
    "chromatic_number",
    "degeneracy_coloring",
    "degeneracy_order",
    "dp_chromatic",
    "list_chromatic",
    "normalize_assignment",
    "normalized_assignments",
]
