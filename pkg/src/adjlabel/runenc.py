"""Gray-code column sorting and fixed-width run codewords.

Sorting the columns of a k x m 0/1 block by their reflected-gray-code rank
leaves row i with at most 2**i + 1 runs.  Such a row is then stored as its
rank among all run-bounded strings, in exactly ``codeword_len(m, i)`` bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitcore import BitString, count_runs_int
from .combinat import _partial_sums, binomial, codeword_len, run_cap, subset_rank, subset_unrank


class RunCodecError(ValueError):
    pass


def gray_key(column) -> int:
    """Rank of a column pattern (row 0 most significant) in the reflected gray code."""
    acc = 0
    b = 0
    for g in column:
        b ^= 1 if g else 0
        acc = (acc << 1) | b
    return acc


def _gray_keys(block: np.ndarray) -> np.ndarray:
    k, m = block.shape
    keys = np.zeros(m, dtype=object if k > 62 else np.int64)
    b = np.zeros(m, dtype=keys.dtype)
    for i in range(k):
        b = b ^ block[i].astype(keys.dtype)
        keys = (keys << 1) | b
    return keys


def gray_sort(block) -> tuple[np.ndarray, np.ndarray]:
    """Stable sort of columns by gray rank.

    Returns ``(perm, sorted_block)`` with ``sorted_block[:, j] == block[:, perm[j]]``.
    """
    block = np.asarray(block, dtype=bool)
    if block.ndim != 2:
        raise ValueError("block must be 2-dimensional")
    k, m = block.shape
    if k == 0 or m == 0:
        perm = np.arange(m)
        return perm, block.copy()
    perm = np.argsort(_gray_keys(block), kind="stable")
    return perm, block[:, perm]



def row_int(row: np.ndarray) -> int:
    """Pack a 0/1 vector into an int, first entry most significant."""
    row = np.asarray(row, dtype=np.uint8)
    if row.size == 0:
        return 0
    return int.from_bytes(np.packbits(row).tobytes(), "big") >> (-row.size % 8)


def _run_starts(value: int, m: int) -> list[int]:
    # positions p in [1, m-1] where bit p differs from bit p-1
    changes = (value ^ (value >> 1)) & ((1 << (m - 1)) - 1)
    out = []
    while changes:
        low = changes & -changes
        out.append(m - low.bit_length())
        changes ^= low
    out.reverse()
    return out


def encode_row_int(value: int, m: int, i: int) -> int:
    """Canonical rank of an m-bit run-bounded row, as an int."""
    if m == 0:
        return 0
    starts = _run_starts(value, m)
    cap = run_cap(i)
    if len(starts) > cap:
        raise RunCodecError(f"row has {len(starts) + 1} runs, budget is {cap + 1}")
    top = min(cap, m - 1)
    sums = _partial_sums(m - 1, top)
    first = value >> (m - 1)
    offset = sums[len(starts) - 1] if starts else 0
    return first * sums[-1] + offset + subset_rank([p - 1 for p in starts])


def decode_row_int(rank: int, m: int, i: int) -> int:
    if m == 0:
        if rank:
            raise RunCodecError("rank out of range")
        return 0
    top = min(run_cap(i), m - 1)
    sums = _partial_sums(m - 1, top)
    total = sums[-1]
    if not 0 <= rank < 2 * total:
        raise RunCodecError(f"rank {rank} out of range")
    first, rest = divmod(rank, total)
    size = 0
    while rest >= sums[size]:
        size += 1
    if size:
        rest -= sums[size - 1]
    starts = [p + 1 for p in subset_unrank(rest, size, m - 1)]
    # rebuild the row from its first bit and run starts
    value = 0
    bit = first
    prev = 0
    for p in starts + [m]:
        width = p - prev
        value = (value << width) | (((1 << width) - 1) if bit else 0)
        bit ^= 1
        prev = p
    return value


def encode_row(s: BitString, i: int) -> BitString:
    return BitString(encode_row_int(s.value, s.length, i), codeword_len(s.length, i))


def decode_row(code: BitString, m: int, i: int) -> BitString:
    if code.length != codeword_len(m, i):
        raise RunCodecError(f"codeword has {code.length} bits, expected {codeword_len(m, i)}")
    return BitString(decode_row_int(code.value, m, i), m)


@dataclass(frozen=True)
class UnbalancedLabels:
    """Output of the run-encoding scheme on a k x m block.

    ``ind2[c]`` is the new index of input column c; ``tags[i]`` is the
    codeword for row i.
    """

    ind2: np.ndarray
    tags: tuple[BitString, ...]
    m: int

    @property
    def order(self) -> np.ndarray:
        """Input column sitting at each new index."""
        return np.argsort(self.ind2)


def unbalanced_label(block, n_total: int | None = None) -> UnbalancedLabels:
    block = np.asarray(block, dtype=bool)
    k, m = block.shape
    if n_total is not None and k and (1 << k) > n_total:
        raise RunCodecError(f"block of height {k} too tall for n={n_total}")
    perm, sorted_block = gray_sort(block)
    ind2 = np.empty(m, dtype=np.int64)
    ind2[perm] = np.arange(m)
    tags = []
    for i in range(k):
        row = row_int(sorted_block[i])
        tags.append(BitString(encode_row_int(row, m, i), codeword_len(m, i)))
    return UnbalancedLabels(ind2=ind2, tags=tuple(tags), m=m)


def unbalanced_query(ind1: int, adj1: BitString, ind2: int, m: int) -> int:
    if not 0 <= ind2 < m:
        raise RunCodecError("column index out of range")
    row = decode_row(adj1, m, ind1)
    return row[ind2]


__all__ = [
    "RunCodecError",
    "UnbalancedLabels",
    "binomial",
    "count_runs_int",
    "decode_row",
    "decode_row_int",
    "encode_row",
    "encode_row_int",
    "gray_key",
    "gray_sort",
    "row_int",
    "unbalanced_label",
    "unbalanced_query",
]
