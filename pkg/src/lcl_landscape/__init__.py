"""Tools for the locally checkable labeling landscape on minor-closed graph classes."""

from .graph_core import Ball, Graph, RootedTree, ball, ball_isomorphic, generate_T

__all__ = ["Ball", "Graph", "RootedTree", "ball", "ball_isomorphic", "generate_T"]
__version__ = "0.1.0"
