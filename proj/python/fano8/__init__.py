"""Exact-arithmetic geometry of genus-8 Fano threefolds and orthogonal cubics.

All functions exchange JSON strings in the same wire format as the CLI.
"""

try:
    from fano8._core import (
        build,
        classify,
        project,
        scan,
        x_conic_to_y_line,
        y_line_to_x_conic,
        y_lines,
    )
except ImportError:  # plain in-tree builds put _core on sys.path directly
    from _core import (
        build,
        classify,
        project,
        scan,
        x_conic_to_y_line,
        y_line_to_x_conic,
        y_lines,
    )

__all__ = [
    "build",
    "classify",
    "project",
    "scan",
    "x_conic_to_y_line",
    "y_line_to_x_conic",
    "y_lines",
]
