"""Round-robin bit spreading and the prefix-free index code.

A k x m block starts with every bit on the row (U) side.  Row i hands
``ell[i]`` consecutive bits (cyclically) to the column (V) tags, which fill
up one bit at a time, so no V tag ends up more than one bit longer than
another.  With an offset ``C`` the first round starts at column C, which
leaves columns before C one bit shorter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .bitcore import BitCursor, BitString
from .combinat import ceil_lg


class SpreadError(ValueError):
    pass


class BitLocation(NamedTuple):
    side: str  # "U" or "V"
    position: int


@dataclass(frozen=True)
class SpreadPlan:
    k: int
    m: int
    ell: tuple[int, ...]
    C: int
    s: tuple[int, ...]
    sbar: tuple[int, ...]
    L: int
    # vpos[j]: round-robin slot of V-index j; order[v] is its inverse
    vpos: tuple[int, ...]
    order: tuple[int, ...]

    @property
    def moved(self) -> int:
        return self.sbar[-1] if self.sbar else 0

    def v_capacity(self, j: int) -> int:
        if self.C == 0:
            return self.L
        return self.L if self.vpos[j] < self.C else self.L + 1

    def u_length(self, i: int) -> int:
        return self.m - self.ell[i]

    @property
    def max_v_capacity(self) -> int:
        return self.L if self.C == 0 else self.L + (1 if self.C < self.m else 0)


def make_plan(ell: Sequence[int], m: int, C: int = 0, fill: Sequence[int] | None = None) -> SpreadPlan:
    """Build a spreading plan.

    ``fill`` optionally gives a 0/1 starting fill per V-index; tags with a
    starting fill of 1 are put first in the round-robin order and get one bit
    fewer, which is the offset variant with C equal to their count.
    """
    ell = tuple(int(x) for x in ell)
    k = len(ell)
    for x in ell:
        if not 0 <= x <= m:
            raise SpreadError(f"ell value {x} outside [0, {m}]")
    if fill is not None:
        if len(fill) != m:
            raise SpreadError("fill must have one entry per V-index")
        if C:
            raise SpreadError("give either C or fill, not both")
        full = [j for j in range(m) if fill[j]]
        order = tuple(full + [j for j in range(m) if not fill[j]])
        C = len(full)
    else:
        if not 0 <= C <= m:
            raise SpreadError(f"offset C={C} outside [0, {m}]")
        order = tuple(range(m))
    vpos = [0] * m
    for v, j in enumerate(order):
        vpos[j] = v
    total = sum(ell)
    if m == 0:
        L = 0
    elif C == 0:
        L = -(-total // m)
    else:
        L = -(-(total + C) // m) - 1
    sbar = [0]
    for x in ell:
        sbar.append(sbar[-1] + x)
    s = tuple((C + x) % m if m else 0 for x in sbar)
    return SpreadPlan(k=k, m=m, ell=ell, C=C, s=s, sbar=tuple(sbar), L=max(L, 0),
                      vpos=tuple(vpos), order=order)


def spread_locate(i: int, j: int, plan: SpreadPlan) -> BitLocation:
    """Where bit (i, j) of the block lives after spreading."""
    m = plan.m
    v = plan.vpos[j]
    si = plan.s[i]
    li = plan.ell[i]
    off = (v - si) % m
    if off < li:
        t = plan.sbar[i] + off
        pos = (plan.C + t) // m
        if v < plan.C:
            pos -= 1
        return BitLocation("V", pos)
    end = si + li
    if end <= m:
        return BitLocation("U", v if v < si else v - li)
    return BitLocation("U", v - (end - m))


def spread_apply(block, plan: SpreadPlan) -> tuple[list[BitString], list[BitString]]:
    """Split a k x m block into U tags (kept bits) and zero-padded V tags."""
    block = np.asarray(block, dtype=bool)
    k, m = plan.k, plan.m
    if block.shape != (k, m):
        raise SpreadError(f"block shape {block.shape} does not match plan ({k}, {m})")
    vblock = block[:, list(plan.order)] if m else block
    v_vals = [0] * m
    v_lens = [0] * m
    u_tags = []
    C = plan.C
    for i in range(k):
        row = vblock[i]
        li = plan.ell[i]
        si = plan.s[i]
        moved_cols = [(si + d) % m for d in range(li)]
        moved = np.zeros(m, dtype=bool)
        moved[moved_cols] = True
        kept = 0
        for b in row[~moved]:
            kept = (kept << 1) | int(b)
        u_tags.append(BitString(kept, m - li))
        for d, v in enumerate(moved_cols):
            v_vals[v] = (v_vals[v] << 1) | int(row[v])
            v_lens[v] += 1
    v_tags = []
    for j in range(m):
        v = plan.vpos[j]
        cap = plan.L if (C == 0 or v < C) else plan.L + 1
        if v_lens[v] > cap:
            raise SpreadError("V tag over capacity")  # cannot happen for a valid plan
        v_tags.append(BitString(v_vals[v], v_lens[v]).pad_to(cap))
    return u_tags, v_tags


def spread_read(i: int, j: int, plan: SpreadPlan, u_tag: BitString, v_tag: BitString) -> int:
    loc = spread_locate(i, j, plan)
    return (u_tag if loc.side == "U" else v_tag)[loc.position]


# -- prefix-free index code ---------------------------------------------------

@lru_cache(maxsize=8192)
def index_split(n: int) -> tuple[int, int]:
    """(b, c) with n = 2**(b-1) + c and 0 < c <= 2**(b-1); (0, 0) for n = 1."""
    b = ceil_lg(n)
    if b == 0:
        return 0, 0
    return b, n - (1 << (b - 1))


def index_code_len(i: int, n: int) -> int:
    b, c = index_split(n)
    if b == 0:
        return 0
    return b if i < 2 * c else b - 1


def index_encode(i: int, n: int) -> BitString:
    if not 0 <= i < n:
        raise SpreadError(f"index {i} out of range for n={n}")
    b, c = index_split(n)
    if b == 0:
        return BitString()
    if i < 2 * c:
        return BitString(i, b)
    return BitString(i - c, b - 1)


def index_decode(cursor: BitCursor, n: int) -> int:
    b, c = index_split(n)
    if b == 0:
        return 0
    head = cursor.read_int(b - 1)
    if head < c:
        return (head << 1) | cursor.read_bit()
    return head + c
