"""Exact solver and experiment harness for Maker-Breaker domination games."""

from .graph import Graph, closed_neighborhood_hypergraph
from .hypergraph import Hypergraph
from .solver import INF, W_BB, W_BM, W_MB, W_MM, GameSpec, GameValue, Player, Solver, mbd_values

__all__ = [
    "Graph",
    "Hypergraph",
    "closed_neighborhood_hypergraph",
    "INF",
    "W_MM",
    "W_MB",
    "W_BM",
    "W_BB",
    "GameSpec",
    "GameValue",
    "Player",
    "Solver",
    "mbd_values",
]
