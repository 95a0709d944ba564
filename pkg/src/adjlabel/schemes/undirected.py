"""Undirected graphs (floor(n/2)+6 or ceil(n/2)+4 bits) and tournaments.

The vertex set splits into two halves, each with a small side of k vertices
(A0, A1) and a large side (B0, B1).  A0 x B0 and A1 x B1 are run encoded;
A0 x B1 and A1 x B0 are spread onto the large sides; the remaining pairs use
circular tags over A0+A1 and over B0+B1.
"""

from __future__ import annotations

import numpy as np

from ..bitcore import BitCursor, BitString
from ..combinat import ceil_lg, codeword_len
from ..graph import Graph
from ..runenc import decode_row_int, unbalanced_label
from ..spread import make_plan, spread_apply, spread_locate
from .base import Engine, LabelError, SchemeError, bit
from .moon import moon_edge_int, moon_encode
from .naive import NaiveEngine

MIN_N = 400
MIN_N_TIGHT = 100


class UndirectedEngine(Engine):
    family = "undirected"

    def __init__(self, n: int, tight: bool = False, check_range: bool = True) -> None:
        floor_n = MIN_N_TIGHT if tight else MIN_N
        if check_range and n < floor_n:
            raise SchemeError(f"undirected {'tight' if tight else 'standard'} mode needs n >= {floor_n}")
        b = ceil_lg(n)
        k = b - 3
        h0 = -(-n // 2)
        m0, m1 = h0 - k, n // 2 - k
        if k < 1 or m1 < 1:
            raise SchemeError(f"n={n} too small for the split layout")
        self.k, self.h0, self.m0, self.m1 = k, h0, m0, m1
        self.economical = tight
        super().__init__(n, -(-n // 2) + 4 if tight else n // 2 + 6)
        self.ell0 = tuple(codeword_len(m0, i) for i in range(k))
        self.ell1 = tuple(codeword_len(m1, i) for i in range(k))
        self.ell_prime0 = tuple(k + x for x in self.ell0)
        self.ell_prime1 = tuple(k + x for x in self.ell1)
        if max(self.ell_prime0) > m1 or max(self.ell_prime1) > m0:
            raise SchemeError(f"n={n} too small: row spill exceeds the large side")
        self.nb = n - 2 * k
        # B0[j] and B1[j] are antipodal on the B circle when n is even
        self.drop_b0 = [False] * m0
        self.drop_b1 = [False] * m1
        if tight and n % 2 == 0:
            for j in range(m0):
                long0 = self.index_len(k + j) == b
                long1 = self.index_len(h0 + k + j) == b
                if (long0 and not long1) or (long0 == long1 and j % 2):
                    self.drop_b0[j] = True
                else:
                    self.drop_b1[j] = True
        half_b = self.nb // 2
        base0 = [self.index_len(k + j) + half_b - self.drop_b0[j] for j in range(m0)]
        base1 = [self.index_len(h0 + k + j) + half_b - self.drop_b1[j] for j in range(m1)]
        # plan0: A0 rows over B1; plan1: A1 rows over B0
        self.plan0 = make_plan(self.ell_prime0, m1, fill=self._fill(base1) if tight else None)
        self.plan1 = make_plan(self.ell_prime1, m0, fill=self._fill(base0) if tight else None)
        self.delta = max(self.plan0.L, self.plan1.L)
        longest = [self.index_len(i) + m1 for i in range(k)]
        longest += [self.index_len(h0 + i) + m0 for i in range(k)]
        longest += [base0[j] + self.plan1.v_capacity(j) for j in range(m0)]
        longest += [base1[j] + self.plan0.v_capacity(j) for j in range(m1)]
        self.content_max = max(longest)
        if self.content_max > self.L:
            raise SchemeError(f"n={n}: content {self.content_max} exceeds L={self.L}")

    @staticmethod
    def _fill(base: list[int]) -> list[int] | None:
        lo, hi = min(base), max(base)
        if hi - lo > 1:
            raise SchemeError("base lengths differ by more than one bit")
        return [int(x == hi) for x in base] if hi > lo else None

    def regions(self) -> tuple[tuple[str, int, int], ...]:
        k, h0 = self.k, self.h0
        return (("A0", 0, k), ("B0", k, h0), ("A1", h0, h0 + k), ("B1", h0 + k, self.n))

    def _b_holder(self, i: int, j: int) -> int:
        # antipodal pair on the B circle: locals j0 (in B0) and j0 + m0
        j0 = min(i, j)
        return j0 + self.m0 if self.drop_b0[j0] else j0

    def new_order(self, adj: np.ndarray) -> np.ndarray:
        """Original vertex at each new index."""
        k, h0, n = self.k, self.h0, self.n
        r0 = unbalanced_label(adj[:k, k:h0])
        r1 = unbalanced_label(adj[h0:h0 + k, h0 + k:])
        return np.concatenate([np.arange(k), k + r0.order, h0 + np.arange(k), h0 + k + r1.order])

    def encode(self, graph: Graph) -> list[BitString]:
        if graph.family != "undirected" or graph.n != self.n:
            raise SchemeError("graph does not match the scheme parameters")
        return self.encode_ordered(graph.adj, self.new_order(graph.adj))

    def encode_ordered(self, adj: np.ndarray, order: np.ndarray) -> list[BitString]:
        k, h0, m0, m1 = self.k, self.h0, self.m0, self.m1
        adj = adj[np.ix_(order, order)]
        a0 = np.arange(k)
        b0 = np.arange(k, h0)
        a1 = np.arange(h0, h0 + k)
        b1 = np.arange(h0 + k, self.n)
        run0 = unbalanced_label(adj[np.ix_(a0, b0)])
        run1 = unbalanced_label(adj[np.ix_(a1, b1)])
        if (run0.ind2 != np.arange(m0)).any() or (run1.ind2 != np.arange(m1)).any():
            raise SchemeError("order is not gray-sorted")
        u0, v0 = spread_apply(adj[np.ix_(a0, b1)], self.plan0)
        u1, v1 = spread_apply(adj[np.ix_(a1, b0)], self.plan1)
        a_all = np.concatenate([a0, a1])
        b_all = np.concatenate([b0, b1])
        moon_a = moon_encode(adj[np.ix_(a_all, a_all)])
        moon_b = moon_encode(adj[np.ix_(b_all, b_all)], drop=self.drop_b0 + self.drop_b1)
        labels: list[BitString] = [BitString()] * self.n
        for i in range(k):
            labels[order[i]] = self.finish([self.write_index(i), run0.tags[i], u0[i], moon_a[i]])
            g = h0 + i
            labels[order[g]] = self.finish([self.write_index(g), run1.tags[i], u1[i], moon_a[k + i]])
        for j in range(m0):
            g = k + j
            labels[order[g]] = self.finish([self.write_index(g), v1[j], moon_b[j]])
        for j in range(m1):
            g = h0 + k + j
            labels[order[g]] = self.finish([self.write_index(g), v0[j], moon_b[m0 + j]])
        return labels

    def _parse(self, cur: BitCursor):
        ind = self.read_index(cur)
        k, h0, m0, m1 = self.k, self.h0, self.m0, self.m1
        half_b = self.nb // 2
        if ind < k or h0 <= ind < h0 + k:
            side = 0 if ind < k else 1
            i = ind - h0 * side
            ell = (self.ell0, self.ell1)[side][i]
            width = (m0, m1)[side]
            other = (m1, m0)[side]
            row = decode_row_int(cur.read_int(ell), width, i)
            kept_len = other - (self.ell_prime0, self.ell_prime1)[side][i]
            kept = cur.read_int(kept_len)
            moon = cur.read_int(k)
            return ("A", ind, side, i, row, kept, kept_len, moon)
        side = 0 if ind < h0 else 1
        j = ind - k if side == 0 else ind - h0 - k
        plan = self.plan1 if side == 0 else self.plan0
        cap = plan.v_capacity(j)
        spill = cur.read_int(cap)
        drops = (self.drop_b0, self.drop_b1)[side][j]
        mlen = half_b - drops
        moon = cur.read_int(mlen)
        return ("B", ind, side, j, spill, cap, mlen, moon)

    def _edge(self, px, py) -> int:
        if px[1] == py[1]:
            return 0
        if px[0] == "A" and py[0] == "A":
            k = self.k
            return moon_edge_int(px[2] * k + px[3], px[7], k, py[2] * k + py[3], py[7], k, 2 * k)
        if px[0] == "B" and py[0] == "B":
            m0 = self.m0
            return moon_edge_int(px[2] * m0 + px[3], px[7], px[6], py[2] * m0 + py[3], py[7], py[6],
                                 self.nb, self._b_holder)
        if px[0] == "B":
            px, py = py, px
        _, _, sa, i, row, kept, kept_len, _ = px
        _, _, sb, j, spill, cap, _, _ = py
        if sa == sb:
            return bit(row, (self.m0, self.m1)[sa], j)
        plan = self.plan0 if sa == 0 else self.plan1
        loc = spread_locate(i, j, plan)
        if loc.side == "U":
            return bit(kept, kept_len, loc.position)
        return bit(spill, cap, loc.position)


class TournamentEngine(Engine):
    """Tournaments through an undirected core.

    The core stores the arcs that go from a lower new index to a higher one;
    ``edge(x, y)`` is 1 when the arc points from x to y.
    """

    family = "tournament"

    def __init__(self, core: UndirectedEngine) -> None:
        self.core = core
        self.economical = core.economical
        super().__init__(core.n, core.L)
        self.parse = core.parse
        for attr in ("k", "delta", "content_max", "ell0", "ell_prime0", "plan0", "plan1"):
            setattr(self, attr, getattr(core, attr))

    def regions(self) -> tuple[tuple[str, int, int], ...]:
        return self.core.regions()

    def encode(self, graph: Graph) -> list[BitString]:
        if graph.family != "tournament" or graph.n != self.n:
            raise SchemeError("graph does not match the scheme parameters")
        core = self.core
        adj = graph.adj
        # first pass: the ordering that depends only on arcs between low and high original indices
        upper = np.triu(adj, 1)
        first = core.new_order(upper | upper.T)
        rank = np.empty(self.n, dtype=np.int64)
        rank[first] = np.arange(self.n)
        forward = adj & (rank[:, None] < rank[None, :])
        sym = forward | forward.T
        second = core.new_order(sym)
        if (second != first).any():
            raise SchemeError("index assignment changed between the two passes")
        return core.encode_ordered(sym, first)

    def _parse(self, cur: BitCursor):
        return self.core._parse(cur)

    def _edge(self, px, py) -> int:
        i, j = px[1], py[1]
        if i == j:
            return 0
        b = self.core._edge(px, py)
        return b if i < j else 1 - b


def make_tournament(n: int, mode: str) -> Engine:
    if mode == "naive":
        return NaiveEngine("tournament", n)
    return TournamentEngine(UndirectedEngine(n, tight=(mode == "tight")))


__all__ = ["LabelError", "TournamentEngine", "UndirectedEngine", "make_tournament"]
