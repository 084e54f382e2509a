# dpcolor: exact DP-coloring, constructive DP-4-coloring of planar graphs without
# 4-cycles adjacent to triangles, and a discharging auditor.
__version__ = "0.1.0"
