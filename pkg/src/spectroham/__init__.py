"""Spectral sufficient conditions for Hamiltonian properties: checkers and oracles."""

__version__ = "0.1.0"

from .graphs import Graph
from .graph6 import parse_graph6, emit_graph6

__all__ = ["Graph", "parse_graph6", "emit_graph6", "__version__"]
