"""Exact combinatorics behind the run codec and the label-length bounds."""

from __future__ import annotations

import math
from functools import lru_cache

FAMILIES = ("directed", "undirected", "tournament", "bipartite")


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def ceil_lg(x: int) -> int:
    """Smallest b with 2**b >= x (0 for x <= 1)."""
    return (x - 1).bit_length() if x > 1 else 0


@lru_cache(maxsize=None)
def _partial_sums(n: int, top: int) -> tuple[int, ...]:
    # prefix sums of C(n, j) for j = 0..top
    out = []
    acc = 0
    term = 1
    for j in range(min(top, n) + 1):
        acc += term
        out.append(acc)
        term = term * (n - j) // (j + 1)
    return tuple(out)


def run_cap(i: int) -> int:
    """Run-start budget 2**i: a row with index i may change value 2**i times."""
    return 1 << i


def capacity(n: int, i: int) -> int:
    """Number of n-bit strings with at most 2**i + 1 runs."""
    if n < 1:
        raise ValueError("capacity needs n >= 1")
    top = min(run_cap(i), n - 1)
    return 2 * _partial_sums(n - 1, top)[-1]


def codeword_len(n: int, i: int) -> int:
    """Bits needed to name one run-bounded n-bit string: ceil(lg capacity(n, i))."""
    if n == 0:
        return 0
    return ceil_lg(capacity(n, i))


def subset_rank(positions, universe: int | None = None) -> int:
    """Colexicographic rank of an ascending position set (combinatorial number system)."""
    rank = 0
    prev = -1
    for j, p in enumerate(positions, start=1):
        if p <= prev:
            raise ValueError("positions must be strictly ascending")
        if universe is not None and p >= universe:
            raise ValueError(f"position {p} outside universe of {universe}")
        rank += binomial(p, j)
        prev = p
    return rank


def subset_unrank(rank: int, size: int, universe: int) -> list[int]:
    if rank < 0 or rank >= binomial(universe, size):
        raise ValueError(f"rank {rank} out of range for C({universe}, {size})")
    out = []
    hi = universe
    for j in range(size, 0, -1):
        # largest p < hi with C(p, j) <= rank, by bisection
        lo_p, hi_p = j - 1, hi - 1
        while lo_p < hi_p:
            mid = (lo_p + hi_p + 1) // 2
            if binomial(mid, j) <= rank:
                lo_p = mid
            else:
                hi_p = mid - 1
        out.append(lo_p)
        rank -= binomial(lo_p, j)
        hi = lo_p
    out.reverse()
    return out


def entropy(alpha: float) -> float:
    if not 0 < alpha < 1:
        if alpha in (0, 1):
            return 0.0
        raise ValueError("entropy defined on [0, 1]")
    return -alpha * math.log2(alpha) - (1 - alpha) * math.log2(1 - alpha)


def entropy_bar(alpha: float, tol: float = 1e-12) -> float:
    """Sum of entropy(alpha / 2**j) over j >= 0, truncated below ``tol``."""
    if not 0 < alpha <= 0.5:
        raise ValueError("entropy_bar needs 0 < alpha <= 1/2")
    total = 0.0
    a = alpha
    while True:
        term = entropy(a)
        total += term
        if term < tol:
            return total
        a /= 2


def log2_family_size(family: str, n: int, n_u: int | None = None) -> float:
    """lg of the number of named graphs on [n] in ``family``."""
    if family == "directed":
        return float(n * (n - 1))
    if family in ("undirected", "tournament"):
        return float(binomial(n, 2))
    if family == "bipartite":
        if n_u is not None:
            return float(n_u * (n - n_u))
        # fixed-bipartition count dominated by the balanced split
        return float((n // 2) * (n - n // 2))
    raise ValueError(f"unknown family {family!r}")


def indexing_bonus(n: int) -> float:
    """(1/n) lg(n^n / n!), the extra term for indexing schemes."""
    if n < 1:
        return 0.0
    return (n * math.log2(n) - math.lgamma(n + 1) / math.log(2)) / n


def lower_bound(family: str, n: int, indexing: bool = False) -> int:
    """Integer lower bound on label length for n-vertex graphs of ``family``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "directed":
        base = n
    elif family in ("undirected", "tournament"):
        base = -(-n // 2)
    elif family == "bipartite":
        base = -(-n // 4)
    else:
        raise ValueError(f"unknown family {family!r}")
    return base + 1 if indexing else base


def lower_bound_report(family: str, n: int, indexing: bool = False) -> str:
    """One-line diagnostic including the fractional counting bound."""
    frac = log2_family_size(family, n) / n
    if indexing:
        frac += indexing_bonus(n)
    return (
        f"family={family} n={n} indexing={int(indexing)} "
        f"bound={lower_bound(family, n, indexing)} counting={frac:.4f}"
    )
