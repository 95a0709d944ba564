"""Directed graphs: n+4 bits (fixed index) or n+3 bits (economical index).

Vertices [0, k) form the small side A, the rest form B.  Arcs A -> B are run
encoded after gray-sorting B, arcs B -> A are spread from A's rows onto B's
tags, and arcs inside A and inside B are stored as plain out-rows.
"""

from __future__ import annotations

import numpy as np

from ..bitcore import BitCursor, BitString
from ..combinat import ceil_lg, codeword_len
from ..graph import Graph
from ..runenc import decode_row_int, row_int, unbalanced_label
from ..spread import index_split, make_plan, spread_apply, spread_locate
from .base import Engine, SchemeError, bit

MIN_N = 100


class DirectedEngine(Engine):
    family = "directed"

    def __init__(self, n: int, tight: bool = False, check_range: bool = True) -> None:
        if check_range and n < MIN_N:
            raise SchemeError(f"directed {'tight' if tight else 'standard'} mode needs n >= {MIN_N}")
        b = ceil_lg(n)
        k = b - 2
        m = n - k
        if k < 1 or m < 2:
            raise SchemeError(f"n={n} too small for the split layout")
        self.k, self.m = k, m
        self.economical = tight
        self.ell = tuple(codeword_len(m, i) for i in range(k))
        self.ell_prime = tuple(k - 1 + x for x in self.ell)
        if max(self.ell_prime) > m:
            raise SchemeError(f"n={n} too small: row spill exceeds the large side")
        if tight:
            _, c = index_split(n)
            C = min(max(2 * c - k, 0), m)
        else:
            C = 0
        self.plan = make_plan(self.ell_prime, m, C)
        self.delta = self.plan.L
        super().__init__(n, n + 3 if tight else n + 4)
        longest_a = max(self.index_len(i) + m for i in range(k))
        longest_b = max(self.index_len(k + j) + self.plan.v_capacity(j) + m - 1 for j in range(m))
        self.content_max = max(longest_a, longest_b)
        if self.content_max > self.L:
            raise SchemeError(f"n={n}: content {self.content_max} exceeds L={self.L}")

    def regions(self) -> tuple[tuple[str, int, int], ...]:
        return (("A", 0, self.k), ("B", self.k, self.n))

    def new_order(self, graph: Graph) -> np.ndarray:
        """Original vertex at each new index."""
        k = self.k
        run = unbalanced_label(graph.adj[:k, k:])
        return np.concatenate([np.arange(k), k + run.order])

    def encode(self, graph: Graph) -> list[BitString]:
        if graph.family != "directed" or graph.n != self.n:
            raise SchemeError("graph does not match the scheme parameters")
        k, m = self.k, self.m
        order = self.new_order(graph)
        adj = graph.adj[np.ix_(order, order)]
        run = unbalanced_label(adj[:k, k:])
        # every column is already in gray order, so the sort is the identity
        assert (run.ind2 == np.arange(m)).all()
        u_tags, v_tags = spread_apply(adj[k:, :k].T, self.plan)
        labels: list[BitString] = [BitString()] * self.n
        for i in range(k):
            inner = np.delete(adj[i, :k], i)
            labels[order[i]] = self.finish([
                self.write_index(i), run.tags[i], u_tags[i], BitString(row_int(inner), k - 1),
            ])
        for j in range(m):
            inner = np.delete(adj[k + j, k:], j)
            labels[order[k + j]] = self.finish([
                self.write_index(k + j), v_tags[j], BitString(row_int(inner), m - 1),
            ])
        return labels

    def _parse(self, cur: BitCursor):
        ind = self.read_index(cur)
        k, m = self.k, self.m
        if ind < k:
            code = cur.read_int(self.ell[ind])
            row = decode_row_int(code, m, ind)
            kept = cur.read_int(m - self.ell_prime[ind])
            inner = cur.read_int(k - 1)
            return ("A", ind, row, kept, inner)
        j = ind - k
        cap = self.plan.v_capacity(j)
        spill = cur.read_int(cap)
        inner = cur.read_int(m - 1)
        return ("B", ind, spill, cap, inner)

    def _edge(self, px, py) -> int:
        i, j = px[1], py[1]
        if i == j:
            return 0
        k, m = self.k, self.m
        if px[0] == "A":
            if py[0] == "A":
                return bit(px[4], k - 1, j if j < i else j - 1)
            return bit(px[2], m, j - k)
        bj = i - k
        if py[0] == "B":
            loc = j - k
            return bit(px[4], m - 1, loc if loc < bj else loc - 1)
        loc = spread_locate(j, bj, self.plan)
        if loc.side == "U":
            return bit(py[3], m - self.ell_prime[j], loc.position)
        return bit(px[2], px[3], loc.position)
