"""Spectral radii of k-uniform hypergraphs and the extremal bicyclic families."""

from .core import Hypergraph
from .errors import ConvergenceFailure, InvalidArgument, SolverFailure

__all__ = ["Hypergraph", "InvalidArgument", "ConvergenceFailure", "SolverFailure"]
__version__ = "0.1.0"
