"""Per-family labeling schemes behind one encode / edge interface."""

from __future__ import annotations

from ..bitcore import BitString
from ..graph import Graph
from .base import LabelError, SchemeError
from .bipartite import C_BIP
from .moon import MoonError, moon_edge, moon_encode
from .params import MODE_CHOICES, MODES, SchemeParams, params_for


def params_for_graph(graph: Graph, mode: str = "auto", regime: str | None = None) -> SchemeParams:
    n_u = graph.n_u if graph.family == "bipartite" else None
    return params_for(graph.family, graph.n, mode, n_u, regime)


def encode(graph: Graph, params: SchemeParams | None = None, mode: str = "auto") -> tuple[SchemeParams, list[BitString]]:
    """Label every vertex of ``graph``; labels come back in original vertex order."""
    if params is None:
        params = params_for_graph(graph, mode)
    if params.family != graph.family or params.n != graph.n:
        raise SchemeError("graph does not match the scheme parameters")
    return params, params.engine.encode(graph)


def edge(x: BitString, y: BitString, params: SchemeParams) -> int:
    """Adjacency bit from two labels (for tournaments: 1 iff the arc runs x -> y)."""
    return params.engine.edge(x, y)


def label_index(label: BitString, params: SchemeParams) -> int:
    return params.engine.index_of(label)


def content_length(label: BitString, params: SchemeParams) -> int:
    return params.engine.content_length(label)


def _family_encode(family: str):
    def run(graph: Graph, params: SchemeParams) -> list[BitString]:
        if graph.family != family:
            raise SchemeError(f"expected a {family} graph, got {graph.family}")
        return encode(graph, params)[1]
    run.__name__ = f"{family}_encode"
    return run


def _family_edge(family: str):
    def run(x: BitString, y: BitString, params: SchemeParams) -> int:
        if params.family != family:
            raise SchemeError(f"parameters describe {params.family}, not {family}")
        return edge(x, y, params)
    run.__name__ = f"{family}_edge"
    return run


directed_encode = _family_encode("directed")
directed_edge = _family_edge("directed")
undirected_encode = _family_encode("undirected")
undirected_edge = _family_edge("undirected")
tournament_encode = _family_encode("tournament")
tournament_edge = _family_edge("tournament")
bipartite_encode = _family_encode("bipartite")
bipartite_edge = _family_edge("bipartite")


def naive_encode(graph: Graph, params: SchemeParams | None = None) -> list[BitString]:
    if params is None:
        params = params_for_graph(graph, "naive")
    if params.mode != "naive":
        raise SchemeError("parameters are not for the naive scheme")
    return encode(graph, params)[1]


def naive_edge(x: BitString, y: BitString, params: SchemeParams) -> int:
    if params.mode != "naive":
        raise SchemeError("parameters are not for the naive scheme")
    return edge(x, y, params)


__all__ = [
    "C_BIP",
    "LabelError",
    "MODES",
    "MODE_CHOICES",
    "MoonError",
    "SchemeError",
    "SchemeParams",
    "bipartite_edge",
    "bipartite_encode",
    "content_length",
    "directed_edge",
    "directed_encode",
    "edge",
    "encode",
    "label_index",
    "moon_edge",
    "moon_encode",
    "naive_edge",
    "naive_encode",
    "params_for",
    "params_for_graph",
    "tournament_edge",
    "tournament_encode",
    "undirected_edge",
    "undirected_encode",
]
