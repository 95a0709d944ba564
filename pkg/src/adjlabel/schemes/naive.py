"""Index plus full adjacency row: valid for every n, used below the thresholds."""

from __future__ import annotations

import numpy as np

from ..bitcore import BitCursor, BitString
from ..combinat import ceil_lg
from ..graph import Graph
from ..runenc import row_int
from .base import Engine, SchemeError, bit
from .moon import moon_edge_int, moon_encode


def naive_length(family: str, n: int, n_u: int = 0) -> int:
    b = ceil_lg(n)
    if family == "directed":
        return b + max(n - 1, 0)
    if family in ("undirected", "tournament"):
        return b + n // 2
    small = min(n_u, n - n_u)
    return b + (n - small if small else 0)


class NaiveEngine(Engine):
    def __init__(self, family: str, n: int, n_u: int = 0) -> None:
        super().__init__(n, naive_length(family, n, n_u))
        self.family = family
        self.n_u = n_u
        # bipartite: the smaller side stores full rows to the other side
        self.u_is_small = n_u <= n - n_u
        small = min(n_u, n - n_u)
        self.row_len = {
            "directed": max(n - 1, 0),
            "undirected": n // 2,
            "tournament": n // 2,
            "bipartite": (n - small) if small else 0,
        }[family]

    def _holds_row(self, ind: int) -> bool:
        return (ind < self.n_u) == self.u_is_small

    def encode(self, graph: Graph) -> list[BitString]:
        if graph.family != self.family or graph.n != self.n:
            raise SchemeError("graph does not match the scheme parameters")
        n = self.n
        if self.family == "directed":
            rows = []
            for u in range(n):
                row = np.delete(graph.adj[u], u)
                rows.append(BitString(row_int(row), n - 1))
        elif self.family == "bipartite":
            if graph.n_u != self.n_u:
                raise SchemeError("side sizes do not match the scheme parameters")
            block = graph.adj if self.u_is_small else graph.adj.T
            rows = []
            for u in range(n):
                if self._holds_row(u):
                    local = u if self.u_is_small else u - self.n_u
                    rows.append(BitString(row_int(block[local]), self.row_len) if self.row_len else BitString())
                else:
                    rows.append(BitString())
        else:
            adj = graph.adj
            if self.family == "tournament":
                # lower index -> higher index arcs form the undirected core
                upper = np.triu(adj, 1)
                adj = upper | upper.T
            rows = moon_encode(adj)
        return [self.finish([self.write_index(u), rows[u]]) for u in range(n)]

    def _parse(self, cur: BitCursor):
        ind = self.read_index(cur)
        width = self.row_len
        if self.family == "bipartite" and not self._holds_row(ind):
            width = 0
        return ("row", ind, cur.read_int(width), width)

    def _edge(self, px, py) -> int:
        _, i, ri, wi = px
        _, j, rj, wj = py
        if i == j:
            return 0
        fam = self.family
        if fam == "directed":
            return bit(ri, wi, j if j < i else j - 1)
        if fam == "bipartite":
            if self._holds_row(i) == self._holds_row(j):
                return 0
            if not self._holds_row(i):
                i, ri, wi, j = j, rj, wj, i
            local = j - self.n_u if self.u_is_small else j
            return bit(ri, wi, local)
        b = moon_edge_int(i, ri, wi, j, rj, wj, self.n)
        if fam == "tournament":
            return b if i < j else 1 - b
        return b
