from dpcolor.cover.assignment import (
    ListAssignment,
    MatchingAssignment,
    assignment_from_dump,
    assignment_to_dump,
    identity_assignment,
    injective_maps,
    parse_assignment,
    random_full_assignment,
    random_lists,
    read_assignment,
    serialize_assignment,
    write_assignment,
)
from dpcolor.cover.cover import (
    CoverGraph,
    Infeasible,
    SolveResult,
    Transversal,
    build_cover,
    transversal_report,
    verify_transversal,
)
from dpcolor.cover.hard import HardSearch, find_hard_assignment, search_hard_assignment
from dpcolor.cover.normalize import (
    count_normalized,
    edge_options,
    normalize_assignment,
    normalized_assignments,
    spanning_forest,
)
from dpcolor.cover.solver import TransversalSolver, brute_force_transversal, residual_lists, solve_transversal

__all__ = [
    "CoverGraph",
    "HardSearch",
    "Infeasible",
    "ListAssignment",
    "MatchingAssignment",
    "SolveResult",
    "Transversal",
    "TransversalSolver",
    "assignment_from_dump",
    "assignment_to_dump",
    "brute_force_transversal",
    "build_cover",
    "count_normalized",
    "edge_options",
    "find_hard_assignment",
    "identity_assignment",
    "injective_maps",
    "normalize_assignment",
    "normalized_assignments",
    "parse_assignment",
    "random_full_assignment",
    "random_lists",
    "read_assignment",
    "residual_lists",
    "search_hard_assignment",
    "serialize_assignment",
    "solve_transversal",
    "spanning_forest",
    "transversal_report",
    "verify_transversal",
    "write_assignment",
]
