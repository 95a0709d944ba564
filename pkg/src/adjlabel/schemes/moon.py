"""Circular adjacency tags for undirected graphs with known indices.

Vertex i remembers its adjacency to the floor(n/2) vertices that follow it on
a circle: tag bit d-1 holds a(i, i+d mod n) for d = 1..floor(n/2).  For even n
the antipodal bit is stored twice; a vertex may drop it (its tag is then one
bit shorter) as long as its partner keeps it.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from ..bitcore import BitString


class MoonError(ValueError):
    pass


def moon_tag_len(n: int, drops: bool = False) -> int:
    return n // 2 - (1 if drops else 0)


def moon_encode(adj, ind: Sequence[int] | None = None, drop: Sequence[bool] | None = None) -> list[BitString]:
    """Tags for an undirected graph; ``ind[u]`` is the circle position of vertex u.

    Returns tags in the order of ``adj``'s vertices.
    """
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    if ind is None:
        ind = range(n)
    ind = list(ind)
    if sorted(ind) != list(range(n)):
        raise MoonError("index assignment must be a bijection onto [n]")
    at = [0] * n
    for u, i in enumerate(ind):
        at[i] = u
    half = n // 2
    tags = []
    for u in range(n):
        i = ind[u]
        width = half
        if drop is not None and drop[i]:
            if n % 2 or half == 0:
                raise MoonError("only even-size circles have a droppable bit")
            width -= 1
        value = 0
        for d in range(1, width + 1):
            value = (value << 1) | int(adj[u, at[(i + d) % n]])
        tags.append(BitString(value, width))
    return tags


def smaller_keeps(i: int, j: int) -> int:
    """Default antipodal holder: the smaller circle position."""
    return min(i, j)


def moon_edge_int(i: int, tag_i: int, len_i: int, j: int, tag_j: int, len_j: int, n: int,
                  holder: Callable[[int, int], int] = smaller_keeps) -> int:
    if i == j:
        return 0
    d = (j - i) % n
    half = n // 2
    if 2 * d == n:
        if holder(i, j) == j:
            i, tag_i, len_i, j, d = j, tag_j, len_j, i, d
    elif d > half:
        i, tag_i, len_i, d = j, tag_j, len_j, n - d
    if d > len_i:
        raise MoonError("tag too short for the requested distance")
    return (tag_i >> (len_i - d)) & 1


def moon_edge(ind_a: int, tag_a: BitString, ind_b: int, tag_b: BitString, n: int,
              holder: Callable[[int, int], int] = smaller_keeps) -> int:
    half = n // 2
    for t in (tag_a, tag_b):
        if t.length not in (half, half - 1) or (t.length != half and n % 2):
            raise MoonError(f"tag of {t.length} bits does not fit n={n}")
    return moon_edge_int(ind_a, tag_a.value, tag_a.length, ind_b, tag_b.value, tag_b.length, n, holder)
