from dpcolor.signed.adapter import (
    SignedGraph,
    parse_signed_graph,
    serialize_signed_graph,
    signed_choosable_4,
    signed_lists_to_dp,
    signed_palette,
    signed_to_dp,
    verify_signed_coloring,
)

__all__ = [
    "SignedGraph",
    "parse_signed_graph",
    "serialize_signed_graph",
    "signed_choosable_4",
    "signed_lists_to_dp",
    "signed_palette",
    "signed_to_dp",
    "verify_signed_coloring",
]
