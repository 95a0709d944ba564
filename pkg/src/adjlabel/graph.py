"""Dense graph container shared by the schemes and the I/O layer."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .combinat import FAMILIES


class GraphError(ValueError):
    pass


@dataclass(eq=False)
class Graph:
    """A graph on vertex set [n].

    ``adj`` is n x n for directed, undirected and tournament graphs.  For
    bipartite graphs it is the n_u x (n - n_u) block; U is [0, n_u) and V is
    [n_u, n).
    """

    family: str
    n: int
    adj: np.ndarray
    n_u: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        self.adj = np.asarray(self.adj, dtype=bool)
        self.validate()

    @property
    def n_v(self) -> int:
        return self.n - self.n_u

    def validate(self) -> None:
        a = self.adj
        if self.family == "bipartite":
            if not 0 <= self.n_u <= self.n or a.shape != (self.n_u, self.n_v):
                raise GraphError(f"bipartite block shape {a.shape} does not match sides ({self.n_u}, {self.n_v})")
            return
        if a.shape != (self.n, self.n):
            raise GraphError(f"adjacency shape {a.shape} does not match n={self.n}")
        if a.diagonal().any():
            raise GraphError("self-loops are not supported")
        if self.family == "undirected" and not (a == a.T).all():
            raise GraphError("undirected adjacency must be symmetric")
        if self.family == "tournament":
            off = ~np.eye(self.n, dtype=bool)
            if not ((a ^ a.T) == off).all():
                raise GraphError("not a tournament: need exactly one arc per pair")

    def has_edge(self, u: int, v: int) -> bool:
        """Arc u -> v (for undirected and bipartite graphs, the symmetric relation)."""
        if u == v:
            return False
        if self.family == "bipartite":
            if u > v:
                u, v = v, u
            if u < self.n_u <= v:
                return bool(self.adj[u, v - self.n_u])
            return False
        return bool(self.adj[u, v])

    def full_matrix(self) -> np.ndarray:
        """n x n relation matrix, expanding the bipartite block."""
        if self.family != "bipartite":
            return self.adj.copy()
        out = np.zeros((self.n, self.n), dtype=bool)
        out[: self.n_u, self.n_u:] = self.adj
        out[self.n_u:, : self.n_u] = self.adj.T
        return out

    def reversed(self) -> Graph:
        if self.family in ("directed", "tournament"):
            return Graph(self.family, self.n, self.adj.T.copy(), self.n_u)
        return Graph(self.family, self.n, self.adj.copy(), self.n_u)

    def edge_count(self) -> int:
        c = int(self.adj.sum())
        return c // 2 if self.family == "undirected" else c
