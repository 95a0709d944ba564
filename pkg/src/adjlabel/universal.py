"""The induced-universal graph on all 2**L label strings of a scheme."""

from __future__ import annotations

from typing import Iterator, TextIO

from .bitcore import BitString
from .graph import Graph
from .schemes import SchemeParams, encode


class EmbeddingError(AssertionError):
    """A graph whose own labels fail to embed it; ``pair`` is the first bad pair."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.pair = pair


class UniversalTooLarge(ValueError):
    pass


def universal_size(params: SchemeParams) -> int:
    return 1 << params.L


def universal_adjacent(x: int, y: int, params: SchemeParams) -> int:
    """Edge on the L-bit expansions of x and y; strings no encoder emits are isolated."""
    size = 1 << params.L
    if x == y or not (0 <= x < size and 0 <= y < size):
        return 0
    try:
        return params.engine.edge(BitString(x, params.L), BitString(y, params.L))
    except (ValueError, IndexError):
        return 0


def verify_induced(graph: Graph, params: SchemeParams) -> list[int]:
    """Embed ``graph`` via its labels; return phi (vertex -> universal vertex id)."""
    _, labels = encode(graph, params)
    phi = [lab.value for lab in labels]
    if len(set(phi)) != len(phi):
        raise EmbeddingError("two vertices share a label")
    full = graph.full_matrix()
    for u in range(graph.n):
        for v in range(graph.n):
            if u != v and universal_adjacent(phi[u], phi[v], params) != int(full[u, v]):
                raise EmbeddingError(f"pair ({u}, {v}) disagrees with the graph", (u, v))
    return phi


def universal_edges(params: SchemeParams, max_bits: int = 24) -> Iterator[tuple[int, int]]:
    """Edges of the universal graph (unordered pairs for symmetric families)."""
    if params.L > max_bits:
        raise UniversalTooLarge(f"L={params.L} exceeds the materialization cap of {max_bits} bits")
    size = 1 << params.L
    symmetric = params.family in ("undirected", "bipartite")
    for x in range(size):
        for y in range(x + 1 if symmetric else 0, size):
            if universal_adjacent(x, y, params):
                yield x, y


def write_universal(params: SchemeParams, out: TextIO, max_bits: int = 24) -> bool:
    """Write the edge list; returns False (header comments only) above the cap."""
    # unused label strings leave a tournament incomplete, so it is written as a digraph
    family = {"bipartite": "undirected", "tournament": "directed"}.get(params.family, params.family)
    out.write(f"# universal graph: family={params.family} n={params.n} mode={params.mode} L={params.L}\n")
    out.write(f"# vertices=2^{params.L}\n")
    if params.L > max_bits:
        out.write(f"# not materialized: L exceeds {max_bits}\n")
        return False
    out.write(f"{family} {universal_size(params)}\n")
    for x, y in universal_edges(params, max_bits):
        out.write(f"{x} {y}\n")
    return True
