"""Adjacency labeling: short vertex labels from which adjacency can be read back."""

from .bitcore import BitCursor, BitString, BitWriter
from .graph import Graph, GraphError
from .schemes import C_BIP, LabelError, SchemeError, SchemeParams, edge, encode, params_for

__all__ = [
    "BitCursor",
    "BitString",
    "BitWriter",
    "C_BIP",
    "Graph",
    "GraphError",
    "LabelError",
    "SchemeError",
    "SchemeParams",
    "edge",
    "encode",
    "params_for",
]
