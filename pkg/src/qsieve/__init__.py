"""Exact-integer obstructions to prime-order automorphisms of generalized quadrangles."""

__version__ = "0.1.0"

from .params import GqOrder, basic_laws  # noqa: E402
from .obstruction import check_line_transitivity, check_point_transitivity, main_inequality  # noqa: E402
from .scan import scan  # noqa: E402

__all__ = [
    "GqOrder",
    "basic_laws",
    "check_line_transitivity",
    "check_point_transitivity",
    "main_inequality",
    "scan",
]
