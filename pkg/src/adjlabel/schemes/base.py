from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..bitcore import BitCursor, BitError, BitString
from ..combinat import ceil_lg
from ..spread import index_decode, index_encode, index_code_len


class LabelError(ValueError):
    """A bit string that no encoding of this scheme could have produced."""


class SchemeError(ValueError):
    """Unsupported (family, n, mode) combination or mismatched input."""


class Engine:
    """Common plumbing: index code, padding check and a parse cache.

    Subclasses implement ``_parse(cursor, index)`` returning a parsed record
    (a tuple whose first two entries are the region name and the index) and
    ``_edge(px, py)``.
    """

    family = ""
    economical = False

    def __init__(self, n: int, L: int) -> None:
        self.n = n
        self.L = L
        self.index_bits = ceil_lg(n)
        self.parse = lru_cache(maxsize=1 << 15)(self._parse_label)

    # -- index code
    def index_len(self, ind: int) -> int:
        return index_code_len(ind, self.n) if self.economical else self.index_bits

    def write_index(self, ind: int) -> BitString:
        if self.economical:
            return index_encode(ind, self.n)
        return BitString(ind, self.index_bits)

    def read_index(self, cur: BitCursor) -> int:
        if self.economical:
            return index_decode(cur, self.n)
        ind = cur.read_int(self.index_bits)
        if ind >= self.n:
            raise LabelError(f"index {ind} out of range")
        return ind

    def finish(self, parts: list[BitString]) -> BitString:
        out = BitString()
        for p in parts:
            out = out + p
        if out.length > self.L:
            raise SchemeError(f"label content {out.length} exceeds L={self.L}")
        return out.pad_to(self.L)

    def _parse_label(self, label: BitString):
        if label.length != self.L:
            raise LabelError(f"label has {label.length} bits, expected {self.L}")
        cur = BitCursor(label)
        try:
            rec = self._parse(cur)
        except BitError as exc:
            raise LabelError(str(exc)) from exc
        if cur.remaining and cur.read_int(cur.remaining):
            raise LabelError("non-zero padding")
        return rec

    def content_length(self, label: BitString) -> int:
        """Bits before the zero padding, as laid out by the parser."""
        cur = BitCursor(label)
        self._parse(cur)
        return cur.position

    def index_of(self, label: BitString) -> int:
        return self.parse(label)[1]

    def edge(self, x: BitString, y: BitString) -> int:
        return self._edge(self.parse(x), self.parse(y))

    def edge_matrix(self, labels: list[BitString]) -> np.ndarray:
        """Edge over every ordered pair of ``labels``, parsing each label once."""
        parsed = [self.parse(lab) for lab in labels]
        edge = self._edge
        out = np.zeros((len(parsed), len(parsed)), dtype=bool)
        for u, pu in enumerate(parsed):
            out[u] = [edge(pu, pv) for pv in parsed]
        return out

    # -- subclass hooks
    def _parse(self, cur: BitCursor):
        raise NotImplementedError

    def _edge(self, px, py) -> int:
        raise NotImplementedError

    def encode(self, graph) -> list[BitString]:
        raise NotImplementedError


def bit(value: int, length: int, pos: int) -> int:
    """Bit ``pos`` (0 = first) of a ``length``-bit field stored in an int."""
    if not 0 <= pos < length:
        raise LabelError(f"bit position {pos} outside field of {length}")
    return (value >> (length - 1 - pos)) & 1
