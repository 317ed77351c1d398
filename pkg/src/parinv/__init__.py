"""Invariants of the unitriangular group acting on parabolic nilradicals."""

from .parabolic import BlockComposition, expanded_base, render_diagram
from .poly import Polynomial, parse_poly

__all__ = ["BlockComposition", "Polynomial", "expanded_base", "parse_poly", "render_diagram"]
__version__ = "0.1.0"
