"""Bipartite graphs with labels of ceil(n/4) + C_BIP bits.

Internally U is the smaller side (size s) and V the larger (size t = s + d).
Three regimes share one label header (2-bit regime code, side bit, index):

* biased (d*d >= 8 n ceil(lg n)): the s x t block is spread evenly so every
  vertex keeps ceil(st/n) bits;
* balanced (d = 0): the four-way split core on n/2 + n/2 vertices;
* near-balanced: a balanced core on p + p "ordinary" vertices whose labels
  carry g extra bits, and "special" vertices whose tags are spread from the
  ordinary rows and from each other.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..bitcore import BitCursor, BitString
from ..combinat import ceil_lg, codeword_len
from ..graph import Graph
from ..runenc import decode_row_int, row_int, unbalanced_label
from ..spread import SpreadPlan, make_plan, spread_apply, spread_locate
from .base import Engine, LabelError, SchemeError, bit

C_BIP = 18
REGIMES = ("biased", "near", "balanced")
A0, B0, A1, B1 = range(4)


def bipartite_length(n: int, constant: int = C_BIP) -> int:
    return -(-n // 4) + constant


def is_biased(n: int, d: int) -> bool:
    return d * d >= 8 * n * ceil_lg(n)


def big_split(n: int) -> int:
    """Smallest R with R**5 >= n**4."""
    r = max(int(round(n ** 0.8)), 0)
    while r ** 5 < n ** 4:
        r += 1
    while r > 0 and (r - 1) ** 5 >= n ** 4:
        r -= 1
    return r


class BalancedCore:
    """Labels for an h x h block; both sides use local indices [0, h)."""

    def __init__(self, h: int) -> None:
        self.h = h
        q0 = -(-h // 2)
        k = max(ceil_lg(2 * h) - 4, 0)
        best = None
        while best is None:
            for slack in range(12):
                cand = self._layout(h, q0, k, slack)
                if cand is not None and (best is None or cand[0] < best[0]):
                    best = cand
            if best is None:
                if k == 0:
                    raise SchemeError(f"no core layout for h={h}")
                k -= 1
        self.content, self.slack, self.l0, self.l1 = best
        self.k, self.q0 = k, q0
        self.mb0, self.mb1 = q0 - k, h // 2 - k
        self.mb = self.mb0 + self.mb1
        self.run0 = tuple(codeword_len(self.mb0, i) for i in range(k))
        self.run1 = tuple(codeword_len(self.mb1, i) for i in range(k))
        self.plan_a0 = make_plan(self.l0, self.mb1)
        self.plan_a1 = make_plan(self.l1, self.mb0)
        self.plan_bb = make_plan([self.mb // 2] * self.mb, self.mb)
        self.bb_len = (self.mb - self.mb // 2, self.plan_bb.L)

    @staticmethod
    def _layout(h: int, q0: int, k: int, slack: int):
        mb0, mb1 = q0 - k, h // 2 - k
        if mb1 < 0 or (k and mb1 < 1):
            return None
        l0 = [max(0, k + codeword_len(mb0, i) - slack) for i in range(k)]
        l1 = [max(0, k + codeword_len(mb1, i) - slack) for i in range(k)]
        if k and (max(l0) > mb1 or max(l1) > mb0):
            return None
        spill = max(make_plan(l0, mb1).L, make_plan(l1, mb0).L)
        mb = mb0 + mb1
        lengths = [codeword_len(mb0, i) + mb1 - l0[i] + k for i in range(k)]
        lengths += [codeword_len(mb1, i) + mb0 - l1[i] + k for i in range(k)]
        lengths += [spill + mb - mb // 2, spill + mb // 2]
        return max(lengths), slack, tuple(l0), tuple(l1)

    def region(self, x: int) -> tuple[int, int]:
        k, q0 = self.k, self.q0
        if x < k:
            return A0, x
        if x < q0:
            return B0, x - k
        if x < q0 + k:
            return A1, x - q0
        return B1, x - q0 - k

    def _groups(self) -> tuple[np.ndarray, ...]:
        k, q0, h = self.k, self.q0, self.h
        return (np.arange(k), np.arange(k, q0), np.arange(q0, q0 + k), np.arange(q0 + k, h))

    def orders(self, block: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Original local vertex at each new local index, for U and for V."""
        a0, b0, a1, b1 = self._groups()

        def side(rows_of_other: np.ndarray) -> np.ndarray:
            o0 = unbalanced_label(rows_of_other[np.ix_(a0, b0)]).order
            o1 = unbalanced_label(rows_of_other[np.ix_(a1, b1)]).order
            return np.concatenate([a0, b0[o0], a1, b1[o1]])

        return side(block.T), side(block)

    def encode(self, block: np.ndarray) -> tuple[np.ndarray, np.ndarray, list[BitString], list[BitString]]:
        """Return (u_order, v_order, u_tags, v_tags); tags are in new local order."""
        block = np.asarray(block, dtype=bool)
        u_order, v_order = self.orders(block)
        mat = block[np.ix_(u_order, v_order)]
        a0, b0, a1, b1 = self._groups()
        bu, bv = spread_apply(mat[np.ix_(np.concatenate([b0, b1]), np.concatenate([b0, b1]))], self.plan_bb)
        k = self.k
        tags: list[list[BitString]] = [[BitString()] * self.h, [BitString()] * self.h]
        spills = []
        for side, rows in ((0, mat), (1, mat.T)):
            out = tags[side]
            r0 = unbalanced_label(rows[np.ix_(a0, b0)])
            r1 = unbalanced_label(rows[np.ix_(a1, b1)])
            assert (r0.ind2 == np.arange(len(b0))).all() and (r1.ind2 == np.arange(len(b1))).all()
            kept0, spill1 = spread_apply(rows[np.ix_(a0, b1)], self.plan_a0)
            kept1, spill0 = spread_apply(rows[np.ix_(a1, b0)], self.plan_a1)
            spills.append((spill0, spill1))
            for i in range(k):
                # U in A_r holds A_r of V; V in A_r holds A_(1-r) of U
                aa0 = rows[a0[i], a0 if side == 0 else a1]
                aa1 = rows[a1[i], a1 if side == 0 else a0]
                out[a0[i]] = r0.tags[i] + kept0[i] + BitString(row_int(aa0), k)
                out[a1[i]] = r1.tags[i] + kept1[i] + BitString(row_int(aa1), k)
        for side in (0, 1):
            # B vertices receive the spill of the other side's A rows
            spill0, spill1 = spills[1 - side]
            bb = bu if side == 0 else bv
            for j in range(len(b0)):
                tags[side][b0[j]] = spill0[j] + bb[j]
            for j in range(len(b1)):
                tags[side][b1[j]] = spill1[j] + bb[len(b0) + j]
        return u_order, v_order, tags[0], tags[1]

    def parse(self, cur: BitCursor, side: int, x: int) -> tuple:
        reg, i = self.region(x)
        if reg in (A0, A1):
            width = self.mb0 if reg == A0 else self.mb1
            other = self.mb1 if reg == A0 else self.mb0
            ell = (self.run0 if reg == A0 else self.run1)[i]
            spilled = (self.l0 if reg == A0 else self.l1)[i]
            row = decode_row_int(cur.read_int(ell), width, i)
            kept = cur.read_int(other - spilled)
            aa = cur.read_int(self.k)
            return (reg, i, row, width, kept, other - spilled, aa)
        plan = self.plan_a1 if reg == B0 else self.plan_a0
        cap = plan.v_capacity(i)
        spill = cur.read_int(cap)
        bb = cur.read_int(self.bb_len[side])
        bl = i if reg == B0 else self.mb0 + i
        return (reg, i, spill, cap, bb, self.bb_len[side], bl)

    def edge(self, pu: tuple, pv: tuple) -> int:
        ru, rv = pu[0], pv[0]
        u_is_a = ru in (A0, A1)
        v_is_a = rv in (A0, A1)
        if u_is_a and v_is_a:
            if ru == rv:
                return bit(pu[6], self.k, pv[1])
            return bit(pv[6], self.k, pu[1])
        if not u_is_a and not v_is_a:
            loc = spread_locate(pu[6], pv[6], self.plan_bb)
            if loc.side == "U":
                return bit(pu[4], pu[5], loc.position)
            return bit(pv[4], pv[5], loc.position)
        # one A vertex (row holder) and one B vertex, on opposite sides
        pa, pb = (pu, pv) if u_is_a else (pv, pu)
        if (pa[0], pb[0]) in ((A0, B0), (A1, B1)):
            return bit(pa[2], pa[3], pb[1])
        plan = self.plan_a0 if pa[0] == A0 else self.plan_a1
        loc = spread_locate(pa[1], pb[1], plan)
        if loc.side == "U":
            return bit(pa[4], pa[5], loc.position)
        return bit(pb[2], pb[3], loc.position)


@lru_cache(maxsize=None)
def balanced_core(h: int) -> BalancedCore:
    return BalancedCore(h)


class NearPlans:
    """Spreading plans for the special vertices at one side difference d."""

    def __init__(self, n: int, d: int, p: int, g: int, budget: int) -> None:
        s = (n - d) // 2
        t = n - s
        self.su, self.tv = s - p, t - p
        if self.su < 0:
            raise SchemeError(f"side of {s} smaller than the core size {p}")
        su, tv = self.su, self.tv
        self.lv = max(0, su - g)
        self.lu = max(0, tv - g)
        self.v0_u1 = make_plan([self.lv] * p, su)
        self.u0_v1 = make_plan([self.lu] * p, tv)
        self.a, self.b = self.v0_u1.L, self.u0_v1.L
        self.ls = min(max(0, self.a + tv - budget), tv)
        self.special = make_plan([self.ls] * su, tv)
        self.u1_len = self.a + tv - self.ls
        self.v1_len = self.b + self.special.max_v_capacity
        if self.u1_len > budget or self.v1_len > budget:
            raise SchemeError(f"special vertices do not fit at d={d}")


class BipartiteEngine(Engine):
    family = "bipartite"

    def __init__(self, n: int, n_u: int, regime: str | None = None, constant: int = C_BIP) -> None:
        if not 0 <= n_u <= n:
            raise SchemeError(f"side size {n_u} outside [0, {n}]")
        super().__init__(n, bipartite_length(n, constant))
        self.constant = constant
        self.n_u = n_u
        self.u_small = n_u <= n - n_u
        self.s = min(n_u, n - n_u)
        self.t = n - self.s
        self.d = self.t - self.s
        self.d_bits = ceil_lg(n + 1)
        if regime is None:
            regime = "biased" if is_biased(n, self.d) else ("balanced" if self.d == 0 else "near")
        if regime not in REGIMES:
            raise SchemeError(f"unknown regime {regime!r}")
        if regime == "balanced" and self.d:
            raise SchemeError("balanced regime needs equal sides")
        self.regime = regime
        self.R = big_split(n)
        self.p = n // 2 - self.R
        self.tag_bits = -(-self.s * self.t // n) if n else 0
        self.k = 0
        self.g = self.a = self.b = 0
        head = 3 + self.index_bits
        if regime == "biased":
            self.biased_plan = make_plan([self.t - self.tag_bits] * self.s, self.t)
            self.content_max = head + self.d_bits + self.tag_bits
            self.delta = self.biased_plan.L
        elif regime == "balanced":
            self.core = balanced_core(n // 2)
            self.k = self.core.k
            self.content_max = head + self.core.content
            self.delta = max(self.core.plan_a0.L, self.core.plan_a1.L)
        else:
            if self.p < 1:
                raise SchemeError(f"n={n} too small for the near-balanced layout")
            self.core = balanced_core(self.p)
            self.k = self.core.k
            self.g = self.L - head - self.core.content
            if self.g < 0:
                raise SchemeError(f"n={n}: no room for ordinary extras")
            self.budget = self.L - head - self.d_bits
            self.near = self.near_plans(self.d)
            self.a, self.b = self.near.a, self.near.b
            self.content_max = max(head + self.core.content + self.g,
                                   head + self.d_bits + max(self.near.u1_len, self.near.v1_len))
            self.delta = max(self.core.plan_a0.L, self.core.plan_a1.L)
        if self.content_max > self.L:
            raise SchemeError(f"n={n}: content {self.content_max} exceeds L={self.L}")

    def near_plans(self, d: int) -> NearPlans:
        return _near_plans(self.n, d, self.p, self.g, self.budget)

    def regions(self) -> tuple[tuple[str, int, int], ...]:
        s, n, p = self.s, self.n, self.p
        if self.regime == "biased":
            return (("U", 0, s), ("V", s, n))
        if self.regime == "balanced":
            return (("U", 0, n // 2), ("V", n // 2, n))
        return (("U0", 0, p), ("V0", p, 2 * p), ("U1", 2 * p, p + s), ("V1", p + s, n))

    # -- encoding
    def _header(self, side: int, ind: int) -> BitString:
        return BitString(REGIMES.index(self.regime), 2) + BitString(side, 1) + BitString(ind, self.index_bits)

    def encode(self, graph: Graph) -> list[BitString]:
        if graph.family != "bipartite" or graph.n != self.n or graph.n_u != self.n_u:
            raise SchemeError("graph does not match the scheme parameters")
        block = graph.adj if self.u_small else graph.adj.T
        # user vertex ids of internal U and V
        u_ids = np.arange(self.n_u) if self.u_small else np.arange(self.n_u, self.n)
        v_ids = np.arange(self.n_u, self.n) if self.u_small else np.arange(self.n_u)
        labels: list[BitString] = [BitString()] * self.n
        s, t = self.s, self.t
        d_field = BitString(self.d, self.d_bits)
        if self.regime == "biased":
            u_tags, v_tags = spread_apply(block, self.biased_plan)
            for i in range(s):
                labels[u_ids[i]] = self.finish([self._header(0, i), d_field, u_tags[i]])
            for j in range(t):
                labels[v_ids[j]] = self.finish([self._header(1, s + j), d_field, v_tags[j].pad_to(self.tag_bits)])
            return labels
        if self.regime == "balanced":
            h = self.n // 2
            uo, vo, ut, vt = self.core.encode(block)
            for x in range(h):
                labels[u_ids[uo[x]]] = self.finish([self._header(0, x), ut[x]])
                labels[v_ids[vo[x]]] = self.finish([self._header(1, h + x), vt[x]])
            return labels
        p, g, plans, width = self.p, self.g, self.near, self.core.content
        uo, vo, ut, vt = self.core.encode(block[:p, :p])
        # rows of ordinary vertices against the other side's specials, in new core order
        u0_v1 = block[np.ix_(uo, np.arange(p, t))]
        v0_u1 = block[np.ix_(np.arange(p, s), vo)].T
        kept_u0, spill_v1 = spread_apply(u0_v1, plans.u0_v1)
        kept_v0, spill_u1 = spread_apply(v0_u1, plans.v0_u1)
        kept_u1, spill_s = spread_apply(block[p:, p:], plans.special)
        for x in range(p):
            labels[u_ids[uo[x]]] = self.finish([self._header(0, x), ut[x].pad_to(width), kept_u0[x].pad_to(g)])
            labels[v_ids[vo[x]]] = self.finish([self._header(1, p + x), vt[x].pad_to(width), kept_v0[x].pad_to(g)])
        for i in range(plans.su):
            labels[u_ids[p + i]] = self.finish([self._header(0, 2 * p + i), d_field, spill_u1[i], kept_u1[i]])
        for j in range(plans.tv):
            labels[v_ids[p + j]] = self.finish([self._header(1, p + s + j), d_field, spill_v1[j], spill_s[j]])
        return labels

    # -- decoding
    def _parse(self, cur: BitCursor):
        regime = cur.read_int(2)
        if regime >= len(REGIMES):
            raise LabelError("bad regime code")
        side = cur.read_int(1)
        ind = self.read_index(cur)
        name = REGIMES[regime]
        n = self.n
        if name == "biased":
            d = cur.read_int(self.d_bits)
            if d > n or (n - d) % 2:
                raise LabelError("bad side difference")
            s = (n - d) // 2
            if side != (ind >= s):
                raise LabelError("side bit disagrees with index")
            tb = -(-s * (n - s) // n)
            return (regime, ind, side, d, cur.read_int(tb), tb)
        if name == "balanced":
            if n % 2:
                raise LabelError("balanced labels need even n")
            h = n // 2
            if side != (ind >= h):
                raise LabelError("side bit disagrees with index")
            core = balanced_core(h)
            return (regime, ind, side, core.parse(cur, side, ind - side * h))
        if self.regime != "near":
            raise LabelError("near-balanced label under a different layout")
        p = self.p
        if ind < 2 * p:
            if side != (ind >= p):
                raise LabelError("side bit disagrees with index")
            start = cur.position
            rec = self.core.parse(cur, side, ind - side * p)
            cur.read_int(self.core.content - (cur.position - start))
            return (regime, ind, side, rec, cur.read_int(self.g))
        d = cur.read_int(self.d_bits)
        if d > n or (n - d) % 2 or is_biased(n, d) or d == 0:
            raise LabelError("bad side difference")
        plans = self.near_plans(d)
        s = (n - d) // 2
        if side != (ind >= p + s):
            raise LabelError("side bit disagrees with index")
        if side == 0:
            i = ind - 2 * p
            a = plans.v0_u1.v_capacity(i)
            return (regime, ind, side, d, i, cur.read_int(a), a, cur.read_int(plans.tv - plans.ls))
        j = ind - p - s
        cap = plans.special.v_capacity(j)
        return (regime, ind, side, d, j, cur.read_int(plans.b), plans.b, cur.read_int(cap), cap)

    def _edge(self, px, py) -> int:
        if px[0] != py[0] or px[2] == py[2]:
            return 0
        pu, pv = (px, py) if px[2] == 0 else (py, px)
        name = REGIMES[pu[0]]
        if name == "biased":
            if pu[3] != pv[3]:
                return 0
            s = (self.n - pu[3]) // 2
            plan = self.biased_plan if pu[3] == self.d else make_plan([self.n - s - pu[5]] * s, self.n - s)
            loc = spread_locate(pu[1], pv[1] - s, plan)
            return bit(pu[4], pu[5], loc.position) if loc.side == "U" else bit(pv[4], pv[5], loc.position)
        if name == "balanced":
            return balanced_core(self.n // 2).edge(pu[3], pv[3])
        p = self.p
        u_ord, v_ord = pu[1] < 2 * p, pv[1] < 2 * p
        if u_ord and v_ord:
            return self.core.edge(pu[3], pv[3])
        if not u_ord and not v_ord:
            if pu[3] != pv[3]:
                return 0
            plans = self.near_plans(pu[3])
            loc = spread_locate(pu[4], pv[4], plans.special)
            if loc.side == "U":
                return bit(pu[7], plans.tv - plans.ls, loc.position)
            return bit(pv[7], pv[8], loc.position)
        if u_ord:
            # ordinary U row against a special V vertex
            plans = self.near_plans(pv[3])
            loc = spread_locate(pu[1], pv[4], plans.u0_v1)
            if loc.side == "U":
                return bit(pu[4], self.g, loc.position)
            return bit(pv[5], pv[6], loc.position)
        plans = self.near_plans(pu[3])
        loc = spread_locate(pv[1] - p, pu[4], plans.v0_u1)
        if loc.side == "U":
            return bit(pv[4], self.g, loc.position)
        return bit(pu[5], pu[6], loc.position)


@lru_cache(maxsize=4096)
def _near_plans(n: int, d: int, p: int, g: int, budget: int) -> NearPlans:
    return NearPlans(n, d, p, g, budget)


@lru_cache(maxsize=None)
def near_balanced_fits(n: int, constant: int = C_BIP) -> bool:
    """True when every side split of n vertices fits ceil(n/4) + constant bits."""
    for d in range(n % 2 or 2, n + 1, 2):
        if is_biased(n, d):
            break
        try:
            BipartiteEngine(n, (n - d) // 2, "near", constant)
        except SchemeError:
            return False
    if n % 2 == 0:
        try:
            BipartiteEngine(n, n // 2, "balanced", constant)
        except SchemeError:
            return False
    return True


def smallest_constant(n: int, start: int = C_BIP) -> int | None:
    """Least constant c <= start for which every split of n vertices fits; None if start fails."""
    if not near_balanced_fits(n, start):
        return None
    c = start
    while c > 0 and near_balanced_fits(n, c - 1):
        c -= 1
    return c


__all__ = [
    "C_BIP",
    "BalancedCore",
    "BipartiteEngine",
    "SpreadPlan",
    "big_split",
    "bipartite_length",
    "is_biased",
    "near_balanced_fits",
    "smallest_constant",
]
